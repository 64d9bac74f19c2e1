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

#include "muxqec/assignment.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "muxqec/rng.h"

namespace muxqec {

std::vector<std::size_t> PhotonAssignment::photon_of() const {
    std::vector<std::size_t> owner(code_n, std::numeric_limits<std::size_t>::max());
    for (std::size_t p = 0; p < photons.size(); ++p) {
        for (std::size_t q : photons[p]) owner.at(q) = p;
    }
    return owner;
}

namespace {

constexpr std::array<std::pair<SurfaceStrategy, std::string_view>, 7> kSurfaceNames{{
    {SurfaceStrategy::MinPair, "min-pair"},
    {SurfaceStrategy::MaxPair, "max-pair"},
    {SurfaceStrategy::Random, "random"},
    {SurfaceStrategy::RandomThreshold, "random-threshold"},
    {SurfaceStrategy::StabilizerZ, "stabilizer-z"},
    {SurfaceStrategy::StabilizerX, "stabilizer-x"},
    {SurfaceStrategy::StabilizerMixed, "stabilizer-mixed"},
}};

constexpr std::array<std::pair<HgpStrategy, std::string_view>, 7> kHgpNames{{
    {HgpStrategy::Random, "random"},
    {HgpStrategy::StabilizerX, "stabilizer-x"},
    {HgpStrategy::StabilizerZ, "stabilizer-z"},
    {HgpStrategy::StabilizerMixed, "stabilizer-mixed"},
    {HgpStrategy::Sudoku, "sudoku"},
    {HgpStrategy::RowColumn, "row-column"},
    {HgpStrategy::Diagonal, "diagonal"},
}};

Rng assignment_rng(std::uint64_t seed) { return Rng(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)); }

PhotonAssignment from_order(const std::vector<std::size_t>& order, std::size_t m, std::string strategy) {
    PhotonAssignment a;
    a.m = m;
    a.code_n = order.size();
    a.strategy = std::move(strategy);
    for (std::size_t start = 0; start < order.size(); start += m) {
        std::size_t stop = std::min(order.size(), start + m);
        a.photons.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                               order.begin() + static_cast<std::ptrdiff_t>(stop));
    }
    return a;
}

void check_m(std::size_t m, std::size_t n) {
    if (m == 0) throw ConfigError("multiplexing number m must be >= 1");
    if (m > n) throw ConfigError(fmt::format("m = {} exceeds the {} qubits of the code", m, n));
}

std::size_t take_random(std::vector<std::size_t>& pool, Rng& rng) {
    std::size_t i = uniform_index(rng, pool.size());
    std::size_t q = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    return q;
}

PhotonAssignment min_pair(std::size_t d) {
    PhotonAssignment a;
    a.m = 2;
    a.code_n = 2 * d * d;
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            std::size_t h = toric_edge_index(d, {EdgeOrientation::Horizontal, (x + 1) % d, y});
            std::size_t v = toric_edge_index(d, {EdgeOrientation::Vertical, x, y});
            a.photons.push_back({std::min(h, v), std::max(h, v)});
        }
    }
    return a;
}

PhotonAssignment max_pair(std::size_t d) {
    if (d < 4 || d % 2 != 0) throw ConfigError(fmt::format("max-pair needs even d >= 4, got d = {}", d));
    // For d % 4 == 0 the diagonal shift (d/2-1, d/2-1) has even orbits; for
    // d % 4 == 2 it does not, and (d/2, d/2-2) has the same torus length.
    std::size_t si = d % 4 == 0 ? d / 2 - 1 : d / 2;
    std::size_t sj = d % 4 == 0 ? d / 2 - 1 : d / 2 - 2;
    PhotonAssignment a;
    a.m = 2;
    a.code_n = 2 * d * d;
    for (auto orient : {EdgeOrientation::Horizontal, EdgeOrientation::Vertical}) {
        std::vector<bool> seen(d * d, false);
        for (std::size_t start = 0; start < d * d; ++start) {
            if (seen[start]) continue;
            std::vector<std::size_t> orbit;
            std::size_t i = start / d, j = start % d;
            while (!seen[i * d + j]) {
                seen[i * d + j] = true;
                orbit.push_back(toric_edge_index(d, {orient, i, j}));
                i = (i + si) % d;
                j = (j + sj) % d;
            }
            for (std::size_t t = 0; t + 1 < orbit.size(); t += 2) {
                a.photons.push_back({std::min(orbit[t], orbit[t + 1]), std::max(orbit[t], orbit[t + 1])});
            }
        }
    }
    return a;
}

PhotonAssignment random_threshold(std::size_t d, std::size_t m, Rng& rng) {
    const std::size_t n = 2 * d * d;
    PhotonAssignment a;
    a.m = m;
    a.code_n = n;
    int threshold = static_cast<int>(d / 2) - 1;
    if (threshold < 0) threshold = 0;
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> waiting;
    while (!pool.empty()) {
        Photon p{take_random(pool, rng)};
        while (p.size() < m && !pool.empty()) {
            while (p.size() < m && !pool.empty()) {
                std::size_t cand = take_random(pool, rng);
                bool far = std::all_of(p.begin(), p.end(), [&](std::size_t q) {
                    return static_cast<int>(toric_edge_distance(d, q, cand)) > threshold;
                });
                (far ? p : waiting).push_back(cand);
            }
            pool.insert(pool.end(), waiting.begin(), waiting.end());
            waiting.clear();
            if (p.size() < m && !pool.empty() && threshold > 0) --threshold;
        }
        std::sort(p.begin(), p.end());
        a.photons.push_back(std::move(p));
        a.thresholds.push_back(threshold);
    }
    return a;
}

// Plus-shaped tiles on the doubled 2d x 2d grid. Centers lie on the lines
// X + Y = 4k; even centers are vertices (stars), odd centers are faces.
PhotonAssignment surface_stabilizer(SurfaceStrategy s, std::size_t d, std::size_t m) {
    if (d % 2 != 0) throw ConfigError(fmt::format("{} needs even d, got d = {}", to_string(s), d));
    if (s == SurfaceStrategy::StabilizerMixed && d % 4 != 0) {
        throw ConfigError(fmt::format("stabilizer-mixed needs d divisible by 4, got d = {}", d));
    }
    const std::size_t w = 2 * d;
    auto arm = [&](std::size_t x, std::size_t y) {
        if (x % 2 == 1) return toric_edge_index(d, {EdgeOrientation::Horizontal, ((x + 1) / 2) % d, y / 2});
        return toric_edge_index(d, {EdgeOrientation::Vertical, x / 2, (y - 1) / 2});
    };
    std::vector<std::size_t> order;
    order.reserve(2 * d * d);
    for (std::size_t k = 0; k < d / 2; ++k) {
        bool star = s == SurfaceStrategy::StabilizerX || (s == SurfaceStrategy::StabilizerMixed && k % 2 == 0);
        for (std::size_t x = star ? 0 : 1; x < w; x += 2) {
            std::size_t y = (4 * k + w - x) % w;
            std::array<std::size_t, 4> tile{arm((x + 1) % w, y), arm((x + w - 1) % w, y), arm(x, (y + 1) % w),
                                            arm(x, (y + w - 1) % w)};
            std::sort(tile.begin(), tile.end());
            order.insert(order.end(), tile.begin(), tile.end());
        }
    }
    return from_order(order, m, std::string(to_string(s)));
}

PhotonAssignment hgp_stabilizer(HgpStrategy s, const CssCode& code, std::size_t m, Rng& rng) {
    std::vector<BitVector> rows;
    auto add_rows = [&](const BinaryMatrix& h) {
        for (std::size_t r = 0; r < h.rows(); ++r) {
            if (!h.row_is_zero(r)) rows.push_back(h.row(r));
        }
    };
    if (s != HgpStrategy::StabilizerZ) add_rows(code.hx);
    if (s != HgpStrategy::StabilizerX) add_rows(code.hz);
    // Greedy selection over a random row order picks a uniformly random
    // surviving row at every step and drops rows that overlap it.
    std::vector<std::size_t> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    BitVector used(code.n);
    std::vector<std::size_t> order;
    order.reserve(code.n);
    for (std::size_t r : perm) {
        BitVector overlap = rows[r] & used;
        if (overlap.any()) continue;
        used |= rows[r];
        for (std::size_t q : rows[r].support()) order.push_back(q);
    }
    for (std::size_t q = 0; q < code.n; ++q) {
        if (!used.get(q)) order.push_back(q);
    }
    return from_order(order, m, std::string(to_string(s)));
}

PhotonAssignment sudoku(const CssCode& code, std::size_t m, Rng& rng) {
    const HgpMeta& meta = *code.hgp;
    std::vector<HgpCoord> coords(code.n);
    for (std::size_t q = 0; q < code.n; ++q) coords[q] = meta.coord(q);
    auto compatible = [&](std::size_t a, std::size_t b) {
        const HgpCoord& x = coords[a];
        const HgpCoord& y = coords[b];
        return (x.row != y.row && x.col != y.col) || x.block != y.block;
    };
    PhotonAssignment a;
    a.m = m;
    a.code_n = code.n;
    a.strategy = "sudoku";
    std::vector<std::size_t> pool(code.n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> waiting;
    while (!pool.empty()) {
        Photon p{take_random(pool, rng)};
        while (p.size() < m && !pool.empty()) {
            std::size_t cand = take_random(pool, rng);
            bool ok = std::all_of(p.begin(), p.end(), [&](std::size_t q) { return compatible(q, cand); });
            (ok ? p : waiting).push_back(cand);
        }
        pool.insert(pool.end(), waiting.begin(), waiting.end());
        waiting.clear();
        bool relaxed = false;
        while (p.size() < m && !pool.empty()) {
            p.push_back(take_random(pool, rng));
            ++a.fallback_count;
            relaxed = true;
        }
        std::sort(p.begin(), p.end());
        a.photons.push_back(std::move(p));
        a.relaxed.push_back(relaxed);
    }
    return a;
}

void append_diagonals(std::vector<std::size_t>& out, const HgpMeta& meta, QubitBlock block) {
    const std::size_t h = meta.block_rows(block);
    const std::size_t w = meta.block_cols(block);
    if (h <= w) {
        for (std::size_t k = 0; k < w; ++k) {
            for (std::size_t i = 0; i < h; ++i) out.push_back(meta.index({block, i, (i + k) % w}));
        }
    } else {
        for (std::size_t k = 0; k < h; ++k) {
            for (std::size_t j = 0; j < w; ++j) out.push_back(meta.index({block, (j + k) % h, j}));
        }
    }
}

}  // namespace

std::string_view to_string(SurfaceStrategy s) {
    for (const auto& [tag, name] : kSurfaceNames) {
        if (tag == s) return name;
    }
    return "unknown";
}

std::string_view to_string(HgpStrategy s) {
    for (const auto& [tag, name] : kHgpNames) {
        if (tag == s) return name;
    }
    return "unknown";
}

std::optional<SurfaceStrategy> parse_surface_strategy(std::string_view name) {
    for (const auto& [tag, n] : kSurfaceNames) {
        if (n == name) return tag;
    }
    return std::nullopt;
}

std::optional<HgpStrategy> parse_hgp_strategy(std::string_view name) {
    for (const auto& [tag, n] : kHgpNames) {
        if (n == name) return tag;
    }
    return std::nullopt;
}

PhotonAssignment assign_surface(SurfaceStrategy strategy, std::size_t d, std::size_t m, std::uint64_t seed) {
    if (d < 2) throw ConfigError(fmt::format("toric lattice side must be >= 2, got {}", d));
    const std::size_t n = 2 * d * d;
    check_m(m, n);
    Rng rng = assignment_rng(seed);
    PhotonAssignment a;
    switch (strategy) {
        case SurfaceStrategy::MinPair:
        case SurfaceStrategy::MaxPair:
            if (m != 2) throw ConfigError(fmt::format("{} requires m = 2, got m = {}", to_string(strategy), m));
            a = strategy == SurfaceStrategy::MinPair ? min_pair(d) : max_pair(d);
            break;
        case SurfaceStrategy::Random: {
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            shuffle(order, rng);
            a = from_order(order, m, "");
            break;
        }
        case SurfaceStrategy::RandomThreshold:
            a = random_threshold(d, m, rng);
            break;
        case SurfaceStrategy::StabilizerZ:
        case SurfaceStrategy::StabilizerX:
        case SurfaceStrategy::StabilizerMixed:
            a = surface_stabilizer(strategy, d, m);
            break;
    }
    a.strategy = std::string(to_string(strategy));
    return a;
}

PhotonAssignment assign_hgp(HgpStrategy strategy, const CssCode& code, std::size_t m, std::uint64_t seed) {
    if (!code.hgp) throw UnsupportedCode("code '" + code.name + "' has no hypergraph-product layout");
    check_m(m, code.n);
    Rng rng = assignment_rng(seed);
    PhotonAssignment a;
    switch (strategy) {
        case HgpStrategy::Random: {
            std::vector<std::size_t> order(code.n);
            std::iota(order.begin(), order.end(), 0);
            shuffle(order, rng);
            a = from_order(order, m, "");
            break;
        }
        case HgpStrategy::StabilizerX:
        case HgpStrategy::StabilizerZ:
        case HgpStrategy::StabilizerMixed:
            a = hgp_stabilizer(strategy, code, m, rng);
            break;
        case HgpStrategy::Sudoku:
            a = sudoku(code, m, rng);
            break;
        case HgpStrategy::RowColumn: {
            std::vector<std::size_t> order(code.n);
            std::iota(order.begin(), order.end(), 0);
            a = from_order(order, m, "");
            break;
        }
        case HgpStrategy::Diagonal:
            a = from_order(diagonal_order(code), m, "");
            break;
    }
    a.strategy = std::string(to_string(strategy));
    return a;
}

PhotonAssignment singleton_assignment(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return from_order(order, 1, "none");
}

PhotonAssignment make_assignment(const CssCode& code, std::string_view strategy, std::size_t m, std::uint64_t seed) {
    if (strategy == "none") {
        if (m != 1) throw ConfigError(fmt::format("strategy 'none' requires m = 1, got m = {}", m));
        return singleton_assignment(code.n);
    }
    if (code.toric_d) {
        if (auto s = parse_surface_strategy(strategy)) return assign_surface(*s, *code.toric_d, m, seed);
    }
    if (auto s = parse_hgp_strategy(strategy)) {
        if (!code.hgp) throw ConfigError(fmt::format("strategy '{}' needs a hypergraph-product code", strategy));
        return assign_hgp(*s, code, m, seed);
    }
    if (parse_surface_strategy(strategy)) {
        throw ConfigError(fmt::format("strategy '{}' is only defined for toric codes", strategy));
    }
    throw ConfigError(fmt::format("unknown assignment strategy '{}'", strategy));
}

std::vector<std::size_t> diagonal_order(const CssCode& code) {
    if (!code.hgp) throw UnsupportedCode("code '" + code.name + "' has no hypergraph-product layout");
    std::vector<std::size_t> order;
    order.reserve(code.n);
    append_diagonals(order, *code.hgp, QubitBlock::First);
    append_diagonals(order, *code.hgp, QubitBlock::Second);
    return order;
}

std::string ViolationReport::describe() const {
    if (ok()) return "ok";
    std::string out;
    auto part = [&](std::string_view label, const std::vector<std::size_t>& v) {
        if (v.empty()) return;
        if (!out.empty()) out += "; ";
        out += fmt::format("{} {}", label, fmt::join(v, ","));
    };
    part("duplicated qubits", duplicated);
    part("missing qubits", missing);
    part("out-of-range qubits", out_of_range);
    part("badly sized photons", bad_size);
    return out;
}

ViolationReport validate(const PhotonAssignment& a) {
    ViolationReport report;
    std::vector<std::size_t> hits(a.code_n, 0);
    for (std::size_t p = 0; p < a.photons.size(); ++p) {
        const Photon& ph = a.photons[p];
        bool last = p + 1 == a.photons.size();
        if (ph.empty() || ph.size() > a.m || (ph.size() < a.m && !last)) report.bad_size.push_back(p);
        for (std::size_t q : ph) {
            if (q >= a.code_n) {
                report.out_of_range.push_back(q);
            } else if (++hits[q] == 2) {
                report.duplicated.push_back(q);
            }
        }
    }
    for (std::size_t q = 0; q < a.code_n; ++q) {
        if (hits[q] == 0) report.missing.push_back(q);
    }
    std::sort(report.duplicated.begin(), report.duplicated.end());
    return report;
}

DistanceStats intra_photon_distances(const PhotonAssignment& a, std::size_t d) {
    DistanceStats st;
    std::size_t pairs = 0;
    double total = 0;
    st.min = std::numeric_limits<std::size_t>::max();
    for (const Photon& p : a.photons) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                std::size_t dist = toric_edge_distance(d, p[i], p[j]);
                st.min = std::min(st.min, dist);
                st.max = std::max(st.max, dist);
                total += static_cast<double>(dist);
                ++pairs;
            }
        }
    }
    if (pairs == 0) return {};
    st.mean = total / static_cast<double>(pairs);
    return st;
}

}  // namespace muxqec
