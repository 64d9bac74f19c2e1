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


#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "muxqec/assignment.h"
#include "muxqec/css_code.h"
#include "muxqec/decoder.h"
#include "muxqec/erasure.h"

namespace muxqec {
namespace {

TEST(SampleLoss, Extremes) {
    PhotonAssignment a = make_assignment(toric(4), "random", 4, 0);
    Rng rng(1);
    EXPECT_TRUE(sample_loss(a, {0.0}, rng).empty());
    EXPECT_EQ(sample_loss(a, {1.0}, rng).count(), a.code_n);
    EXPECT_THROW(sample_loss(a, {-0.1}, rng), std::invalid_argument);
    EXPECT_THROW(sample_loss(a, {1.5}, rng), std::invalid_argument);
    EXPECT_THROW(sample_loss(a, {std::nan("")}, rng), std::invalid_argument);
}

TEST(SampleLoss, PerQubitRateWithSingletons) {
    PhotonAssignment a = singleton_assignment(200);
    Rng rng(7);
    const double p = 0.3;
    const int trials = 2000;
    std::size_t lost = 0;
    for (int t = 0; t < trials; ++t) lost += sample_loss(a, {p}, rng).count();
    double rate = static_cast<double>(lost) / (200.0 * trials);
    double sd = std::sqrt(p * (1 - p) / (200.0 * trials));
    EXPECT_NEAR(rate, p, 5 * sd);
}

TEST(SampleLoss, PhotonsLostWhole) {
    PhotonAssignment a = make_assignment(toric(6), "random", 4, 3);
    Rng rng(5);
    std::size_t photons_lost = 0;
    const int trials = 3000;
    for (int t = 0; t < trials; ++t) {
        ErasurePattern e = sample_loss(a, {0.2}, rng);
        for (const Photon& p : a.photons) {
            std::size_t hit = 0;
            for (std::size_t q : p) hit += e.contains(q);
            EXPECT_TRUE(hit == 0 || hit == p.size());
            photons_lost += hit > 0;
        }
    }
    double rate = static_cast<double>(photons_lost) / (static_cast<double>(a.num_photons()) * trials);
    EXPECT_NEAR(rate, 0.2, 5 * std::sqrt(0.16 / (static_cast<double>(a.num_photons()) * trials)));
}

TEST(SampleLoss, Reproducible) {
    PhotonAssignment a = make_assignment(toric(5), "random", 2, 0);
    Rng r1 = make_trial_rng(9, 2, 17);
    Rng r2 = make_trial_rng(9, 2, 17);
    ErasurePattern e1 = sample_loss(a, {0.4}, r1);
    EXPECT_EQ(e1, sample_loss(a, {0.4}, r2));
    EXPECT_EQ(erasure_to_pauli(e1, r1), erasure_to_pauli(e1, r2));
    Rng r3 = make_trial_rng(9, 2, 18);
    Rng r4 = make_trial_rng(9, 3, 17);
    EXPECT_NE(r3(), r4());
}

TEST(ErasureToPauli, SupportInsideErasure) {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        ErasurePattern e(BitVector(150));
        for (std::size_t q = 0; q < 150; ++q) {
            if (uniform01(rng) < 0.35) e.mask.set(q);
        }
        PauliFrame f = erasure_to_pauli(e, rng);
        EXPECT_TRUE(f.x.is_subset_of(e.mask));
        EXPECT_TRUE(f.z.is_subset_of(e.mask));
    }
    PauliFrame none = erasure_to_pauli(ErasurePattern(10), rng);
    EXPECT_TRUE(none.x.none() && none.z.none());
}

TEST(ErasureToPauli, UniformPaulis) {
    const std::size_t n = 100;
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;
    ErasurePattern e = ErasurePattern::from_qubits(n, all);
    Rng rng(13);
    std::array<std::size_t, 4> counts{};
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) {
        PauliFrame f = erasure_to_pauli(e, rng);
        for (std::size_t q = 0; q < n; ++q) ++counts[f.x.get(q) + 2 * f.z.get(q)];
    }
    const double total = static_cast<double>(n) * trials;
    const double sd = std::sqrt(0.25 * 0.75 / total);
    for (std::size_t c : counts) EXPECT_NEAR(static_cast<double>(c) / total, 0.25, 5 * sd);
}

TEST(Syndrome, LinearAndMatchesMeasure) {
    CssCode c = toric(4);
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        BitVector a(c.n), b(c.n);
        for (std::size_t q = 0; q < c.n; ++q) {
            a.set(q, rng() & 1);
            b.set(q, rng() & 1);
        }
        EXPECT_EQ(syndrome(c.hx, a ^ b), syndrome(c.hx, a) ^ syndrome(c.hx, b));
        Syndromes s = measure(c, PauliFrame(a, b));
        EXPECT_EQ(s.x_checks, c.hx * b);
        EXPECT_EQ(s.z_checks, c.hz * a);
    }
    for (std::size_t r = 0; r < c.hz.rows(); ++r) EXPECT_TRUE(syndrome(c.hx, c.hz.row(r)).none());
}

TEST(ErasurePattern, FromQubits) {
    std::vector<std::size_t> q{1, 4};
    ErasurePattern e = ErasurePattern::from_qubits(6, q);
    EXPECT_EQ(e.n(), 6u);
    EXPECT_EQ(e.count(), 2u);
    EXPECT_EQ(e.qubits(), q);
    EXPECT_TRUE(e.contains(4));
    EXPECT_FALSE(e.contains(0));
}

}  // namespace
}  // namespace muxqec
