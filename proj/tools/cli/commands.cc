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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>
#include <yaml-cpp/exceptions.h>

#include "muxqec/decoder.h"
#include "muxqec/erasure.h"
#include "muxqec/results_io.h"

namespace muxqec::cli {

namespace {

std::string list_or_dash(const std::vector<std::size_t>& v) {
    if (v.empty()) return "-";
    return fmt::format("{}", fmt::join(v, " "));
}

void check_output_path(const std::optional<std::filesystem::path>& path, std::string_view field) {
    if (!path) return;
    std::filesystem::path dir = path->parent_path();
    if (dir.empty()) dir = ".";
    if (!std::filesystem::is_directory(dir)) {
        throw ConfigError(fmt::format("{}: directory '{}' does not exist", field, dir.string()));
    }
    if (std::filesystem::is_directory(*path)) {
        throw ConfigError(fmt::format("{}: '{}' is a directory", field, path->string()));
    }
}

std::string weight_range(const BinaryMatrix& h, bool rows) {
    const std::size_t count = rows ? h.rows() : h.cols();
    if (count == 0) return "-";
    std::size_t lo = SIZE_MAX;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t w = rows ? h.row_weight(i) : h.col_weight(i);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    return fmt::format("{}..{}", lo, hi);
}

void print_summary(const CssCode& code, const ExperimentSpec& spec, const std::vector<SweepRow>& rows,
                   double seconds, std::ostream& os) {
    const SweepConfig& cfg = spec.sweep;
    fmt::print(os, "{} [[{},{}]]  strategy={} decoder={} metric={} trials={} seed={}\n", code.name, code.n, code.k,
               cfg.strategy, to_string(cfg.decoder), to_string(cfg.metric), cfg.trials, cfg.seed);
    fmt::print(os, "{:>8} {:>4} {:>7} {:>9} {:>9} {:>9} {:>10} {:>10}\n", "p_loss", "m", "photons", "logical",
               "dec_fail", "rate", "ci_low", "ci_high");
    std::size_t bugs = 0;
    for (const SweepRow& r : rows) {
        fmt::print(os, "{:>8.4f} {:>4} {:>7} {:>9} {:>9} {:>9.5f} {:>10.6f} {:>10.6f}\n", r.p_loss, r.m, r.photons,
                   r.logical_errors, r.decoder_failures, r.estimate.rate, r.estimate.ci_low, r.estimate.ci_high);
        bugs += r.decoder_bugs;
    }
    if (bugs) fmt::print(os, "warning: {} trials flagged as decoder bugs (counted as decoder failures)\n", bugs);
    fmt::print(os, "{} rows in {:.2f} s\n", rows.size(), seconds);
}

std::vector<std::size_t> checked_qubits(const std::vector<std::size_t>& qs, std::size_t n, std::string_view field) {
    for (std::size_t q : qs) {
        if (q >= n) throw ConfigError(fmt::format("{}: qubit {} out of range (n = {})", field, q, n));
    }
    return qs;
}

}  // namespace

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitConfig;
    } catch (const YAML::Exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitRuntime;
    }
}

int cmd_simulate(const ExperimentSpec& spec, Streams io) {
    return guarded([&] {
        check_output_path(spec.csv_path, "output.csv");
        check_output_path(spec.json_path, "output.json");
        const CssCode code = spec.code.build();
        validate_sweep(code, spec.sweep);
        const auto start = std::chrono::steady_clock::now();
        const std::vector<SweepRow> rows = sweep(code, spec.sweep);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string csv = format_csv(rows);
        if (spec.json_path) write_atomic(*spec.json_path, format_json(rows, config_json(spec)));
        if (spec.csv_path) {
            write_atomic(*spec.csv_path, csv);
        } else {
            io.out << csv;
        }
        if (spec.log_level != LogLevel::Quiet) print_summary(code, spec, rows, seconds, io.err);
        return kExitOk;
    }, io.err);
}

int cmd_code_info(const CodeSource& source, bool dump, Streams io) {
    return guarded([&] {
        const CssCode code = source.build();
        fmt::print(io.out, "code: {}\n", code.name);
        fmt::print(io.out, "n={} k={}\n", code.n, code.k);
        for (const auto& [label, h, rk] : {std::tuple{"H_X", &code.hx, code.rank_x}, {"H_Z", &code.hz, code.rank_z}}) {
            fmt::print(io.out, "{} {}x{} rank={} row_weight={} col_weight={}\n", label, h->rows(), h->cols(), rk,
                       weight_range(*h, true), weight_range(*h, false));
        }
        if (code.hgp) {
            const HgpMeta& m = *code.hgp;
            fmt::print(io.out, "H1 {}x{}, H2 {}x{}\n", m.r1, m.n1, m.r2, m.n2);
            fmt::print(io.out, "blocks: first {}x{} (qubits 0..{}), second {}x{} (qubits {}..{})\n", m.n1, m.n2,
                       m.first_block_size() - 1, m.r1, m.r2, m.first_block_size(), code.n - 1);
        }
        if (code.toric_d) fmt::print(io.out, "toric lattice d={}\n", *code.toric_d);
        if (dump) {
            fmt::print(io.out, "H_X\n{}", code.hx.to_text());
            fmt::print(io.out, "H_Z\n{}", code.hz.to_text());
        }
        return kExitOk;
    }, io.err);
}

int cmd_assign(const AssignRequest& req, Streams io) {
    return guarded([&] {
        check_output_path(req.output, "--output");
        const CssCode code = req.code.build();
        const PhotonAssignment a = make_assignment(code, req.strategy, req.m, req.seed);
        nlohmann::ordered_json j;
        j["code"] = code.name;
        j["n"] = code.n;
        j["strategy"] = a.strategy;
        j["m"] = a.m;
        j["seed"] = req.seed;
        j["num_photons"] = a.num_photons();
        j["photons"] = a.photons;
        if (!a.thresholds.empty()) j["thresholds"] = a.thresholds;
        if (a.strategy == "sudoku") {
            j["fallback_count"] = a.fallback_count;
            j["relaxed"] = a.relaxed;
        }
        std::string text = j.dump() + "\n";
        if (req.output) {
            write_atomic(*req.output, text);
        } else {
            io.out << text;
        }
        return kExitOk;
    }, io.err);
}

int cmd_decode_one(const DecodeOneRequest& req, Streams io) {
    return guarded([&] {
        const SweepConfig& cfg = req.spec.sweep;
        const CssCode code = req.spec.code.build();
        validate_sweep(code, cfg);
        if (req.point >= cfg.p_loss.size()) {
            throw ConfigError(fmt::format("--point: {} out of range ({} grid points)", req.point, cfg.p_loss.size()));
        }
        const std::size_t m = cfg.m_values.front();
        const bool copies = cfg.strategy == kCopiesStrategy;
        if (copies && req.copy >= m) throw ConfigError(fmt::format("--copy: {} out of range (m = {})", req.copy, m));
        const double p = cfg.p_loss[req.point];
        const DecodingContext ctx(code);

        Rng rng = make_trial_rng(cfg.seed, req.point, req.trial);
        PhotonAssignment a;
        if (copies) {
            a = singleton_assignment(code.n);
        } else if (cfg.resample_assignment) {
            a = make_assignment(code, cfg.strategy, m, rng());
        } else {
            a = make_assignment(code, cfg.strategy, m, cfg.assignment_seed.value_or(cfg.seed));
        }
        ErasurePattern e = req.erasure ? ErasurePattern::from_qubits(code.n, checked_qubits(*req.erasure, code.n, "--erasure"))
                                       : sample_loss(a, ChannelConfig{p}, rng);
        PauliFrame frame;
        if (req.error_x || req.error_z) {
            std::vector<std::size_t> xs = req.error_x ? checked_qubits(*req.error_x, code.n, "--error-x") : std::vector<std::size_t>{};
            std::vector<std::size_t> zs = req.error_z ? checked_qubits(*req.error_z, code.n, "--error-z") : std::vector<std::size_t>{};
            frame = PauliFrame(BitVector::from_support(code.n, xs), BitVector::from_support(code.n, zs));
        } else {
            std::size_t draws = copies ? req.copy + 1 : 1;
            for (std::size_t i = 0; i < draws; ++i) frame = erasure_to_pauli(e, rng);
        }

        fmt::print(io.out, "code: {} (n={} k={})\n", code.name, code.n, code.k);
        fmt::print(io.out, "assignment: {} m={} ({} photons)\n", copies ? std::string(kCopiesStrategy) : a.strategy, m,
                   a.num_photons());
        fmt::print(io.out, "trial: seed={} point={} trial={} p_loss={}\n", cfg.seed, req.point, req.trial, p);
        fmt::print(io.out, "decoder: {} metric: {}\n", to_string(cfg.decoder), to_string(cfg.metric));
        fmt::print(io.out, "erasure ({} qubits): {}\n", e.count(), list_or_dash(e.qubits()));
        if (!frame.x.is_subset_of(e.mask) || !frame.z.is_subset_of(e.mask)) {
            fmt::print(io.out, "warning: error is not supported on the erasure\n");
        }
        fmt::print(io.out, "error x: {}\n", list_or_dash(frame.x.support()));
        fmt::print(io.out, "error z: {}\n", list_or_dash(frame.z.support()));
        DecodeTrace trace;
        TrialRecord record;
        TrialOutcome out = evaluate(ctx, e, frame, cfg.decoder, cfg.metric, &record, &trace);
        fmt::print(io.out, "syndrome x-checks: {}\n", list_or_dash(record.syndromes.x_checks.support()));
        fmt::print(io.out, "syndrome z-checks: {}\n", list_or_dash(record.syndromes.z_checks.support()));
        fmt::print(io.out, "trace:\n");
        for (const std::string& line : trace.lines) fmt::print(io.out, "  {}\n", line);
        if (record.decoded.ok()) {
            fmt::print(io.out, "correction x: {}\n", list_or_dash(record.decoded.correction.x.support()));
            fmt::print(io.out, "correction z: {}\n", list_or_dash(record.decoded.correction.z.support()));
        }
        if (!out.detail.empty()) fmt::print(io.out, "detail: {}\n", out.detail);
        fmt::print(io.out, "result: {}\n", to_string(out.status));
        return kExitOk;
    }, io.err);
}

}  // namespace muxqec::cli
