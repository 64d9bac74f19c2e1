// Copyright 2026 The muxqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "muxqec/code_spec.h"
#include "muxqec/css_code.h"
#include "muxqec/ml_oracle.h"
#include "muxqec/monte_carlo.h"
#include "muxqec/results_io.h"
#include "oracle.h"

namespace {

using namespace muxqec;

constexpr std::uint64_t kSeed = 7;
const char* const kCode16 = "random:16x16:w3,3:1:sym";

struct Verdict {
    bool pass = true;
    std::string detail;
};

BinaryMatrix load(const std::string& name) {
    std::ifstream in(std::string(MUXQEC_FIXTURES) + "/" + name);
    return BinaryMatrix::parse_text(in);
}

std::string ci(const Estimate& e) { return fmt::format("{:.5f} [{:.5f}, {:.5f}]", e.rate, e.ci_low, e.ci_high); }

bool below(const Estimate& a, const Estimate& b) { return a.ci_high < b.ci_low; }
bool overlap(const Estimate& a, const Estimate& b) { return a.ci_low <= b.ci_high && b.ci_low <= a.ci_high; }

SweepConfig config(std::string strategy, std::size_t m, std::vector<double> p, std::size_t trials, DecoderKind d,
                   Metric metric) {
    SweepConfig cfg;
    cfg.strategy = std::move(strategy);
    cfg.m_values = {m};
    cfg.p_loss = std::move(p);
    cfg.trials = trials;
    cfg.seed = kSeed;
    cfg.decoder = d;
    cfg.metric = metric;
    return cfg;
}

Estimate point(const CssCode& c, const SweepConfig& cfg) { return sweep(c, cfg).front().estimate; }

Verdict css_validity() {
    Verdict v;
    int bad = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::size_t r1 = 1 + i % 6, n1 = 1 + (i * 7) % 12, r2 = 1 + (i * 5 + 3) % 6, n2 = 1 + (i * 11 + 5) % 12;
        BinaryMatrix h1 = random_matrix(r1, n1, 0.3, 1000 + i);
        BinaryMatrix h2 = random_matrix(r2, n2, 0.3, 2000 + i);
        CssCode c = hgp(h1, h2);
        auto [hx, hz] = oracle::hgp(oracle::dense(h1), oracle::dense(h2));
        const std::size_t rk1 = oracle::rank(oracle::dense(h1)), rk2 = oracle::rank(oracle::dense(h2));
        const std::size_t k = (n1 - rk1) * (n2 - rk2) + (r1 - rk1) * (r2 - rk2);
        bool ok = (c.hx * c.hz.transpose()).is_zero() && oracle::dense(c.hx) == hx && oracle::dense(c.hz) == hz &&
                  c.n == n1 * n2 + r1 * r2 && c.k == k && c.k == c.n - oracle::rank(hx) - oracle::rank(hz);
        bad += !ok;
    }
    v.pass = bad == 0;
    v.detail = fmt::format("{} of 100 constructions violate commutation or dimension formulas", bad);
    return v;
}

Verdict toric_family() {
    Verdict v;
    for (std::size_t d = 2; d <= 12; ++d) {
        CssCode c = toric(d);
        if (c.n != 2 * d * d || c.k != 2) {
            v.pass = false;
            v.detail += fmt::format("toric({}) gives n={} k={}; ", d, c.n, c.k);
        }
    }
    std::vector<std::size_t> dist;
    for (std::size_t d : {2, 3}) {
        CssCode c = toric(d);
        std::size_t wz = oracle::min_logical_weight(oracle::dense(c.hx), oracle::dense(c.hz));
        std::size_t wx = oracle::min_logical_weight(oracle::dense(c.hz), oracle::dense(c.hx));
        dist.push_back(std::min(wz, wx));
        if (wz != d || wx != d) v.pass = false;
    }
    v.detail += fmt::format("n=2d^2, k=2 for d=2..12; exhaustive distance d=2: {}, d=3: {}", dist[0], dist[1]);
    return v;
}

Verdict small_hgp() {
    CssCode c = hgp(load("small_hgp_h1.txt"), load("small_hgp_h2.txt"));
    Verdict v;
    v.pass = c.hx == load("small_hgp_hx.txt") && c.hz == load("small_hgp_hz.txt");
    v.detail = fmt::format("H_X {}x{}, H_Z {}x{} {}", c.hx.rows(), c.hx.cols(), c.hz.rows(), c.hz.cols(),
                           v.pass ? "bit-exact" : "differ from the printed matrices");
    return v;
}

Verdict pauli_marginals() {
    const std::size_t n = 1000;
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;
    ErasurePattern e = ErasurePattern::from_qubits(n, all);
    std::array<std::size_t, 4> counts{};
    for (std::size_t t = 0; t < 400; ++t) {
        Rng rng = make_trial_rng(kSeed, 4, t);
        PauliFrame f = erasure_to_pauli(e, rng);
        for (std::size_t q = 0; q < n; ++q) ++counts[f.x.get(q) + 2 * f.z.get(q)];
    }
    Verdict v;
    std::array<double, 4> freq{};
    for (int i = 0; i < 4; ++i) {
        freq[i] = static_cast<double>(counts[i]) / 4e5;
        v.pass = v.pass && std::abs(freq[i] - 0.25) <= 0.01;
    }
    v.detail = fmt::format("I={:.4f} X={:.4f} Z={:.4f} Y={:.4f}", freq[0], freq[1], freq[2], freq[3]);
    return v;
}

Verdict surface_asymptote() {
    Estimate e = point(toric(6), config("none", 1, {1.0}, 10000, DecoderKind::SurfaceMl, Metric::LogicalZ));
    return {std::abs(e.rate - 0.75) <= 0.02, "toric d=6 eps=1 logical-Z rate " + ci(e)};
}

Verdict combined_asymptote() {
    Verdict v;
    const std::vector<std::pair<std::string, CssCode>> codes{
        {kCode16, build_code(kCode16)}, {"small-hgp", hgp(load("small_hgp_h1.txt"), load("small_hgp_h2.txt"))}};
    for (const auto& [name, c] : codes) {
        SweepRow r = sweep(c, config("none", 1, {1.0}, 100, DecoderKind::Combined, Metric::Erf)).front();
        v.pass = v.pass && r.decoder_failures == 100;
        v.detail += fmt::format("{}: {}/100 DecoderFailure; ", name, r.decoder_failures);
    }
    return v;
}

Verdict ml_completeness() {
    Verdict v;
    std::size_t checked = 0, violations = 0;
    for (std::size_t d : {4, 6}) {
        CssCode c = toric(d);
        DecodingContext ctx(c);
        PhotonAssignment a = singleton_assignment(c.n);
        for (std::size_t t = 0; t < 10000; ++t) {
            Rng rng = make_trial_rng(kSeed, d, t);
            ErasurePattern e = sample_loss(a, {0.4}, rng);
            PauliFrame f = erasure_to_pauli(e, rng);
            Syndromes s = measure(c, f);
            for (ErrorType type : {ErrorType::Z, ErrorType::X}) {
                if (erasure_covers_logical(c, e, type)) continue;
                for (DecoderKind k : {DecoderKind::MlOracle, DecoderKind::SurfaceMl}) {
                    ++checked;
                    DecodeOutcome out = decode(k, ctx, e, s);
                    BitVector residual = frame_part(out.correction, type) ^ frame_part(f, type);
                    if (!out.ok() || !in_rowspace(ctx.stabilizers(type), residual)) ++violations;
                }
            }
        }
    }
    v.pass = violations == 0;
    v.detail = fmt::format("{} violations in {} uncovered decodes (ml-oracle and surface-ml)", violations, checked);
    return v;
}

Verdict decoder_dominance() {
    CssCode c = toric(10);
    const std::vector<double> grid{0.2, 0.3, 0.4};
    auto comb = sweep(c, config("none", 1, grid, 100000, DecoderKind::Combined, Metric::Erf));
    auto ml = sweep(c, config("none", 1, grid, 100000, DecoderKind::SurfaceMl, Metric::LogicalZ));
    Verdict v;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Estimate& a = comb[i].estimate;
        const Estimate& b = ml[i].estimate;
        bool ok = a.rate >= b.rate && (a.failures == b.failures || below(b, a));
        v.pass = v.pass && ok;
        v.detail += fmt::format("eps={}: ERF {} vs LER {}; ", grid[i], ci(a), ci(b));
    }
    return v;
}

Verdict surface_ordering() {
    CssCode c = toric(10);
    auto run = [&](const char* s) {
        return point(c, config(s, 2, {0.35}, 100000, DecoderKind::SurfaceMl, Metric::LogicalZ));
    };
    Estimate maxp = run("max-pair"), minp = run("min-pair"), rt = run("random-threshold"), rnd = run("random");
    Verdict v;
    v.pass = below(maxp, minp) && rt.rate <= rnd.rate && below(rt, rnd);
    v.detail = fmt::format("max-pair {} < min-pair {}; random-threshold {} <= random {}", ci(maxp), ci(minp), ci(rt),
                           ci(rnd));
    return v;
}

Verdict stabilizer_bias() {
    CssCode c = toric(12);
    auto run = [&](const char* s) {
        return point(c, config(s, 4, {0.35}, 100000, DecoderKind::SurfaceMl, Metric::LogicalZ));
    };
    Estimate z = run("stabilizer-z"), x = run("stabilizer-x");
    return {below(z, x), fmt::format("stabilizer-z {} < stabilizer-x {}", ci(z), ci(x))};
}

Verdict row_column() {
    CssCode c = build_code(kCode16);
    Estimate base = point(c, config("none", 1, {0.25}, 10000, DecoderKind::Combined, Metric::Erf));
    Estimate rc = point(c, config("row-column", 16, {0.25}, 10000, DecoderKind::Combined, Metric::Erf));
    return {rc.rate >= 5.0 * base.rate,
            fmt::format("row-column m=16 {} vs m=1 {} (ratio {:.1f})", ci(rc), ci(base), rc.rate / base.rate)};
}

Verdict sudoku_diagonal() {
    CssCode c = build_code(kCode16);
    Verdict v;
    for (double eps : {0.15, 0.25}) {
        Estimate base = point(c, config("none", 1, {eps}, 10000, DecoderKind::Combined, Metric::Erf));
        v.detail += fmt::format("eps={} m=1 {}", eps, ci(base));
        for (const char* s : {"sudoku", "diagonal"}) {
            for (std::size_t m : {4, 16}) {
                Estimate e = point(c, config(s, m, {eps}, 10000, DecoderKind::Combined, Metric::Erf));
                bool ok = overlap(e, base);
                v.pass = v.pass && ok;
                v.detail += fmt::format("; {} m={} {}{}", s, m, ci(e), ok ? "" : " (no overlap)");
            }
        }
        v.detail += " | ";
    }
    return v;
}

Verdict agresti_coull_exact() {
    const std::vector<std::tuple<std::size_t, std::size_t, double>> cases{
        {0, 1, 1.96},     {1, 1, 1.96},      {0, 100, 1.96},       {100, 100, 1.96},  {5, 100, 1.96},
        {50, 100, 1.96},  {1, 10, 2.576},    {10, 10, 1.645},      {0, 100000, 1.96}, {2008, 100000, 1.96},
        {3, 7, 1.0},      {0, 7, 3.0},       {123, 4567, 1.96},    {1, 2, 1.96},      {0, 5, 0.5},
        {250, 1000, 2.0}, {1000, 1000, 1.0}, {1, 1000000, 1.96},   {4, 9, 0.0},       {9, 9, 0.0}};
    double worst = 0.0;
    for (auto [f, n, z] : cases) {
        Estimate e = agresti_coull(f, n, z);
        oracle::Interval o = oracle::agresti_coull(f, n, z);
        worst = std::max({worst, std::abs(e.center - static_cast<double>(o.center)),
                          std::abs(e.ci_low - static_cast<double>(o.low)),
                          std::abs(e.ci_high - static_cast<double>(o.high))});
    }
    return {worst <= 1e-12, fmt::format("max deviation {:.3g} over {} triples", worst, cases.size())};
}

Verdict determinism() {
    Verdict v;
    const std::vector<std::pair<std::string, SweepConfig>> runs{
        {"toric:8", config("random-threshold", 2, {0.2, 0.3, 0.4}, 3000, DecoderKind::SurfaceMl, Metric::LogicalZ)},
        {"toric:6", config("sudoku", 4, {0.1, 0.3}, 2000, DecoderKind::Combined, Metric::Erf)},
        {kCode16, config("diagonal", 4, {0.1}, 500, DecoderKind::Combined, Metric::Erf)}};
    for (const auto& [spec, base] : runs) {
        CssCode c = build_code(spec);
        std::vector<std::string> outputs;
        for (std::size_t workers : {1, 1, 2, 4}) {
            SweepConfig cfg = base;
            cfg.workers = workers;
            outputs.push_back(format_csv(sweep(c, cfg)));
        }
        bool same = std::all_of(outputs.begin(), outputs.end(), [&](const std::string& s) { return s == outputs[0]; });
        v.pass = v.pass && same;
        v.detail += fmt::format("{} {}: {}; ", spec, base.strategy, same ? "identical" : "DIFFERENT");
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"CSS validity", css_validity},
        {"Toric family", toric_family},
        {"Printed HGP example regeneration", small_hgp},
        {"Erasure to Pauli marginals", pauli_marginals},
        {"Full-erasure asymptote, surface ML", surface_asymptote},
        {"Full-erasure asymptote, combined decoder", combined_asymptote},
        {"ML completeness", ml_completeness},
        {"Decoder dominance", decoder_dominance},
        {"Strategy ordering, surface", surface_ordering},
        {"Stabilizer bias", stabilizer_bias},
        {"Row-column worst case", row_column},
        {"Sudoku/diagonal parity", sudoku_diagonal},
        {"Agresti-Coull correctness", agresti_coull_exact},
        {"Determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        fmt::print("{} {:>2} {}: {} ({:.1f} s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail, secs);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
