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


#include <algorithm>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "muxqec/assignment.h"
#include "muxqec/code_spec.h"
#include "oracle.h"

namespace muxqec {
namespace {

BinaryMatrix load(const std::string& name) {
    std::ifstream in(std::string(MUXQEC_FIXTURES) + "/" + name);
    return BinaryMatrix::parse_text(in);
}

CssCode small_hgp() { return hgp(load("small_hgp_h1.txt"), load("small_hgp_h2.txt")); }

const CssCode& code16() {
    static const CssCode c = build_code("random:16x16:w3,3:1:sym");
    return c;
}

std::set<std::vector<std::size_t>> row_supports(const BinaryMatrix& h) {
    std::set<std::vector<std::size_t>> out;
    for (std::size_t r = 0; r < h.rows(); ++r) out.insert(h.row_support(r));
    return out;
}

void expect_partition(const PhotonAssignment& a, std::size_t n, std::size_t m) {
    EXPECT_EQ(a.code_n, n);
    EXPECT_EQ(a.m, m);
    EXPECT_TRUE(validate(a).ok()) << validate(a).describe();
    EXPECT_EQ(a.num_photons(), (n + m - 1) / m);
    std::vector<int> seen(n, 0);
    for (const Photon& p : a.photons) {
        for (std::size_t q : p) {
            ASSERT_LT(q, n);
            ++seen[q];
        }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST(Surface, MinPairPairsEdgesAtOneVertex) {
    const std::size_t d = 4;
    PhotonAssignment a = assign_surface(SurfaceStrategy::MinPair, d, 2, 0);
    expect_partition(a, 2 * d * d, 2);
    ASSERT_EQ(a.num_photons(), 16u);
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            std::size_t h = toric_edge_index(d, {EdgeOrientation::Horizontal, (x + 1) % d, y});
            std::size_t v = toric_edge_index(d, {EdgeOrientation::Vertical, x, y});
            Photon want{std::min(h, v), std::max(h, v)};
            EXPECT_NE(std::find(a.photons.begin(), a.photons.end(), want), a.photons.end());
        }
    }
    DistanceStats s = intra_photon_distances(a, d);
    EXPECT_EQ(s.min, 1u);
    EXPECT_EQ(s.max, 1u);
}

TEST(Surface, MaxPairDistanceIsDMinusTwo) {
    for (std::size_t d : {4, 6, 8, 10, 12}) {
        PhotonAssignment a = assign_surface(SurfaceStrategy::MaxPair, d, 2, 0);
        expect_partition(a, 2 * d * d, 2);
        for (const Photon& p : a.photons) {
            ASSERT_EQ(p.size(), 2u);
            EXPECT_EQ(toric_edge_coord(d, p[0]).orientation, toric_edge_coord(d, p[1]).orientation);
            EXPECT_EQ(toric_edge_distance(d, p[0], p[1]), d - 2) << "d=" << d;
            EXPECT_DOUBLE_EQ(oracle::edge_distance(d, p[0], p[1]), static_cast<double>(d - 2));
        }
        EXPECT_GT(intra_photon_distances(a, d).min, 1u);
    }
    EXPECT_THROW(assign_surface(SurfaceStrategy::MaxPair, 5, 2, 0), ConfigError);
    EXPECT_THROW(assign_surface(SurfaceStrategy::MaxPair, 2, 2, 0), ConfigError);
    EXPECT_THROW(assign_surface(SurfaceStrategy::MaxPair, 4, 3, 0), ConfigError);
    EXPECT_THROW(assign_surface(SurfaceStrategy::MinPair, 4, 4, 0), ConfigError);
}

TEST(Surface, RandomSmallLattice) {
    PhotonAssignment a = assign_surface(SurfaceStrategy::Random, 2, 2, 11);
    expect_partition(a, 8, 2);
    EXPECT_EQ(a.num_photons(), 4u);
}

TEST(Surface, RandomThresholdRespectsSealedThreshold) {
    const std::size_t d = 10;
    for (std::size_t m : {2, 4, 5}) {
        PhotonAssignment a = assign_surface(SurfaceStrategy::RandomThreshold, d, m, 3);
        expect_partition(a, 2 * d * d, m);
        ASSERT_EQ(a.thresholds.size(), a.num_photons());
        EXPECT_LE(a.thresholds.front(), 4);
        int first_sealed = a.thresholds.front();
        EXPECT_TRUE(std::is_sorted(a.thresholds.rbegin(), a.thresholds.rend()));
        for (std::size_t i = 0; i < a.num_photons(); ++i) {
            const Photon& p = a.photons[i];
            for (std::size_t x = 0; x < p.size(); ++x) {
                for (std::size_t y = x + 1; y < p.size(); ++y) {
                    EXPECT_GT(static_cast<int>(toric_edge_distance(d, p[x], p[y])), a.thresholds[i]);
                }
            }
        }
        if (m == 2) EXPECT_EQ(first_sealed, 4);
    }
}

TEST(Surface, StabilizerTilesAreChecks) {
    for (std::size_t d : {4, 6, 8}) {
        CssCode c = toric(d);
        auto z_rows = row_supports(c.hz);
        auto x_rows = row_supports(c.hx);
        for (auto [s, rows] : {std::pair{SurfaceStrategy::StabilizerZ, &z_rows},
                               std::pair{SurfaceStrategy::StabilizerX, &x_rows}}) {
            PhotonAssignment a = assign_surface(s, d, 4, 0);
            expect_partition(a, c.n, 4);
            for (const Photon& p : a.photons) EXPECT_TRUE(rows->count(p)) << to_string(s) << " d=" << d;
        }
    }
    CssCode c = toric(8);
    auto z_rows = row_supports(c.hz);
    auto x_rows = row_supports(c.hx);
    PhotonAssignment mixed = assign_surface(SurfaceStrategy::StabilizerMixed, 8, 4, 0);
    expect_partition(mixed, c.n, 4);
    std::size_t stars = 0;
    for (const Photon& p : mixed.photons) {
        EXPECT_TRUE(z_rows.count(p) || x_rows.count(p));
        stars += x_rows.count(p);
    }
    EXPECT_EQ(stars, mixed.num_photons() / 2);
    EXPECT_THROW(assign_surface(SurfaceStrategy::StabilizerZ, 5, 4, 0), ConfigError);
    EXPECT_THROW(assign_surface(SurfaceStrategy::StabilizerX, 7, 4, 0), ConfigError);
    EXPECT_THROW(assign_surface(SurfaceStrategy::StabilizerMixed, 6, 4, 0), ConfigError);
}

TEST(Hgp, DiagonalSmallHgp) {
    CssCode c = small_hgp();
    PhotonAssignment a = assign_hgp(HgpStrategy::Diagonal, c, 4, 0);
    std::vector<Photon> want{{0, 5, 10, 15}, {1, 6, 11, 12}, {2, 7, 8, 13}, {3, 4, 9, 14}, {16, 17, 18, 19}};
    std::vector<Photon> got = a.photons;
    for (Photon& p : got) std::sort(p.begin(), p.end());
    EXPECT_EQ(got, want);
}

TEST(Hgp, DiagonalOrder) {
    CssCode c = small_hgp();
    std::vector<std::size_t> order = diagonal_order(c);
    std::vector<std::size_t> head(order.begin(), order.begin() + 8);
    EXPECT_EQ(head, (std::vector<std::size_t>{0, 5, 10, 15, 1, 6, 11, 12}));
    std::vector<std::size_t> tail(order.begin() + 16, order.end());
    EXPECT_EQ(tail, (std::vector<std::size_t>{16, 19, 17, 18}));
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);

    CssCode t = hgp(BinaryMatrix::from_rows({"111"}), BinaryMatrix::from_rows({"1", "1"}));
    std::vector<std::size_t> o = diagonal_order(t);
    EXPECT_EQ(o.size(), t.n);
    std::sort(o.begin(), o.end());
    for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(o[i], i);
    EXPECT_THROW(diagonal_order(make_css_code(c.hx, c.hz)), UnsupportedCode);
}

TEST(Hgp, DiagonalAvoidsSharedLines) {
    const CssCode& c = code16();
    PhotonAssignment a = assign_hgp(HgpStrategy::Diagonal, c, 16, 0);
    expect_partition(a, c.n, 16);
    for (const Photon& p : a.photons) {
        std::set<std::pair<int, std::size_t>> rows, cols;
        for (std::size_t q : p) {
            HgpCoord k = hgp_coord(c, q);
            rows.insert({static_cast<int>(k.block), k.row});
            cols.insert({static_cast<int>(k.block), k.col});
        }
        EXPECT_EQ(rows.size(), p.size());
        EXPECT_EQ(cols.size(), p.size());
    }
}

TEST(Hgp, RowColumnFullRows) {
    const CssCode& c = code16();
    PhotonAssignment a = assign_hgp(HgpStrategy::RowColumn, c, 16, 0);
    expect_partition(a, c.n, 16);
    for (const Photon& p : a.photons) {
        HgpCoord first = hgp_coord(c, p.front());
        for (std::size_t q : p) {
            HgpCoord k = hgp_coord(c, q);
            EXPECT_EQ(k.block, first.block);
            EXPECT_EQ(k.row, first.row);
        }
    }
}

TEST(Hgp, SudokuCompatibility) {
    for (const CssCode* c : {&code16()}) {
        for (std::size_t m : {4, 16}) {
            for (std::uint64_t seed : {1, 2, 3}) {
                PhotonAssignment a = assign_hgp(HgpStrategy::Sudoku, *c, m, seed);
                expect_partition(a, c->n, m);
                ASSERT_EQ(a.relaxed.size(), a.num_photons());
                if (a.fallback_count == 0) {
                    EXPECT_TRUE(std::none_of(a.relaxed.begin(), a.relaxed.end(), [](bool b) { return b; }));
                }
                for (std::size_t i = 0; i < a.num_photons(); ++i) {
                    if (a.relaxed[i]) continue;
                    const Photon& p = a.photons[i];
                    for (std::size_t x = 0; x < p.size(); ++x) {
                        for (std::size_t y = x + 1; y < p.size(); ++y) {
                            HgpCoord u = hgp_coord(*c, p[x]);
                            HgpCoord v = hgp_coord(*c, p[y]);
                            if (u.block != v.block) continue;
                            EXPECT_NE(u.row, v.row);
                            EXPECT_NE(u.col, v.col);
                        }
                    }
                }
            }
        }
    }
}

TEST(Hgp, StabilizerPhotonsAreChecks) {
    CssCode c = toric(6);
    auto x_rows = row_supports(c.hx);
    auto z_rows = row_supports(c.hz);
    for (auto [s, want_x, want_z] : {std::tuple{HgpStrategy::StabilizerX, true, false},
                                     std::tuple{HgpStrategy::StabilizerZ, false, true},
                                     std::tuple{HgpStrategy::StabilizerMixed, true, true}}) {
        PhotonAssignment a = assign_hgp(s, c, 4, 9);
        expect_partition(a, c.n, 4);
        // Leading photons come from disjoint checks; the leftover tail is unconstrained.
        std::size_t check_photons = 0;
        for (const Photon& p : a.photons) {
            bool is_x = x_rows.count(p) > 0;
            bool is_z = z_rows.count(p) > 0;
            if (!want_x) EXPECT_FALSE(is_x && !is_z);
            if (!want_z) EXPECT_FALSE(is_z && !is_x);
            check_photons += is_x || is_z;
        }
        EXPECT_GT(check_photons, 0u);
        EXPECT_TRUE(x_rows.count(a.photons[0]) || z_rows.count(a.photons[0]));
    }
}

TEST(Assignment, PartitionForAllStrategies) {
    CssCode t = toric(8);
    for (std::string_view s : {"min-pair", "max-pair"}) expect_partition(make_assignment(t, s, 2, 5), t.n, 2);
    for (std::string_view s : {"random", "random-threshold", "stabilizer-x", "stabilizer-z", "stabilizer-mixed"}) {
        for (std::size_t m : {1, 3, 4, 7}) expect_partition(make_assignment(t, s, m, 5), t.n, m);
    }
    const CssCode& c = code16();
    for (HgpStrategy s : {HgpStrategy::Random, HgpStrategy::StabilizerX, HgpStrategy::StabilizerZ,
                          HgpStrategy::StabilizerMixed, HgpStrategy::Sudoku, HgpStrategy::RowColumn,
                          HgpStrategy::Diagonal}) {
        for (std::size_t m : {1, 2, 5, 16, 33}) expect_partition(assign_hgp(s, c, m, 5), c.n, m);
    }
    expect_partition(make_assignment(t, "none", 1, 0), t.n, 1);
}

TEST(Assignment, Deterministic) {
    CssCode t = toric(6);
    for (std::string_view s : {"random", "random-threshold"}) {
        PhotonAssignment a = make_assignment(t, s, 3, 42);
        PhotonAssignment b = make_assignment(t, s, 3, 42);
        EXPECT_EQ(a.photons, b.photons);
        EXPECT_NE(a.photons, make_assignment(t, s, 3, 43).photons);
    }
    PhotonAssignment a = make_assignment(code16(), "sudoku", 4, 42);
    EXPECT_EQ(a.photons, make_assignment(code16(), "sudoku", 4, 42).photons);
}

TEST(Assignment, PhotonCount) {
    CssCode t = toric(10);
    EXPECT_EQ(make_assignment(t, "random", 4, 0).num_photons(), 50u);
    EXPECT_EQ(make_assignment(t, "random", 3, 0).num_photons(), 67u);
    EXPECT_EQ(make_assignment(t, "random", 3, 0).photons.back().size(), 2u);
}

TEST(Assignment, PhotonOf) {
    PhotonAssignment a = make_assignment(toric(4), "random", 5, 1);
    std::vector<std::size_t> of = a.photon_of();
    for (std::size_t p = 0; p < a.num_photons(); ++p) {
        for (std::size_t q : a.photons[p]) EXPECT_EQ(of[q], p);
    }
}

TEST(Assignment, ValidateReportsViolations) {
    PhotonAssignment bad;
    bad.m = 2;
    bad.code_n = 4;
    bad.photons = {{0, 1}, {1, 2}};
    ViolationReport r = validate(bad);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.duplicated, (std::vector<std::size_t>{1}));
    EXPECT_EQ(r.missing, (std::vector<std::size_t>{3}));
    EXPECT_NE(r.describe().find("duplicated qubits 1"), std::string::npos);

    bad.photons = {{0}, {1, 2, 3}};
    r = validate(bad);
    EXPECT_EQ(r.bad_size, (std::vector<std::size_t>{0, 1}));
    bad.photons = {{0, 1}, {2, 9}};
    EXPECT_EQ(validate(bad).out_of_range, (std::vector<std::size_t>{9}));

    PhotonAssignment rem = assign_hgp(HgpStrategy::Random, hgp(BinaryMatrix::from_rows({"11"}),
                                                               BinaryMatrix::from_rows({"11"})),
                                      2, 0);
    EXPECT_TRUE(validate(rem).ok());
    EXPECT_EQ(rem.num_photons(), 3u);
    EXPECT_EQ(rem.photons.back().size(), 1u);
    EXPECT_EQ(validate(rem).describe(), "ok");
}

TEST(Assignment, Errors) {
    CssCode t = toric(4);
    EXPECT_THROW(make_assignment(t, "random", 0, 0), ConfigError);
    EXPECT_THROW(make_assignment(t, "random", 33, 0), ConfigError);
    EXPECT_THROW(make_assignment(t, "no-such", 2, 0), ConfigError);
    EXPECT_THROW(make_assignment(t, "none", 2, 0), ConfigError);
    CssCode plain = make_css_code(t.hx, t.hz);
    EXPECT_THROW(make_assignment(plain, "sudoku", 2, 0), ConfigError);
    EXPECT_THROW(make_assignment(plain, "min-pair", 2, 0), ConfigError);
    EXPECT_THROW(make_assignment(code16(), "max-pair", 2, 0), ConfigError);
    EXPECT_THROW(assign_hgp(HgpStrategy::Sudoku, plain, 2, 0), UnsupportedCode);
    EXPECT_NO_THROW(make_assignment(t, "sudoku", 4, 0));
}

}  // namespace
}  // namespace muxqec
