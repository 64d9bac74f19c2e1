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

#ifndef MUXQEC_ASSIGNMENT_H
#define MUXQEC_ASSIGNMENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "muxqec/css_code.h"

namespace muxqec {

/// Raised for an incompatible (strategy, code, m) combination.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Photon = std::vector<std::size_t>;

/// Partition of the qubits [0, code_n) into photons of m qubits, the last one
/// possibly smaller.
struct PhotonAssignment {
    std::size_t m = 1;
    std::size_t code_n = 0;
    std::vector<Photon> photons;
    std::string strategy;

    /// random-threshold only: threshold in force when each photon was sealed.
    std::vector<int> thresholds;
    /// sudoku only: photons completed by the unconstrained fallback.
    std::vector<bool> relaxed;
    /// sudoku only: number of qubits placed by the fallback.
    std::size_t fallback_count = 0;

    std::size_t num_photons() const { return photons.size(); }
    /// photon_of()[q] is the photon holding qubit q.
    std::vector<std::size_t> photon_of() const;
};

enum class SurfaceStrategy { MinPair, MaxPair, Random, RandomThreshold, StabilizerZ, StabilizerX, StabilizerMixed };

enum class HgpStrategy { Random, StabilizerX, StabilizerZ, StabilizerMixed, Sudoku, RowColumn, Diagonal };

std::string_view to_string(SurfaceStrategy s);
std::string_view to_string(HgpStrategy s);
std::optional<SurfaceStrategy> parse_surface_strategy(std::string_view name);
std::optional<HgpStrategy> parse_hgp_strategy(std::string_view name);

/// Toric-lattice strategies.
///
/// min-pair: the photon of vertex (x, y) holds the horizontal edge to (x+1, y)
/// and the vertical edge to (x, y+1). max-pair: edges of one orientation are
/// paired along orbits of a fixed shift of torus length d-2; needs even d >= 4.
/// random-threshold: rejection sampling with a waiting list, threshold starting
/// at d/2 - 1 and lowered only when no waiting candidate qualifies.
/// stabilizer-*: the lattice is tiled by weight-4 stars (X) and faces (Z) on
/// anti-diagonal lines; pure variants need even d, mixed needs d % 4 == 0.
PhotonAssignment assign_surface(SurfaceStrategy strategy, std::size_t d, std::size_t m, std::uint64_t seed);

/// HGP strategies; the code must carry an HGP layout.
///
/// row-column chunks the natural index order, so a photon of m = block width
/// is an entire Tanner-graph row. diagonal chunks diagonal_order(); m larger
/// than the shortest block side is allowed and then puts some same-line qubits
/// together.
PhotonAssignment assign_hgp(HgpStrategy strategy, const CssCode& code, std::size_t m, std::uint64_t seed);

/// Every qubit in its own photon, in index order.
PhotonAssignment singleton_assignment(std::size_t n);

/// Resolves a strategy name against the code family. Toric codes prefer the
/// lattice strategies; "none" requires m = 1.
PhotonAssignment make_assignment(const CssCode& code, std::string_view strategy, std::size_t m, std::uint64_t seed);

/// Wrap-around diagonal slices of block one, then of block two. For an h x w
/// block with h <= w, slice k holds (i, (i+k) mod w); otherwise rows and
/// columns swap roles.
std::vector<std::size_t> diagonal_order(const CssCode& code);

struct ViolationReport {
    std::vector<std::size_t> duplicated;
    std::vector<std::size_t> missing;
    std::vector<std::size_t> out_of_range;
    /// Photons that are empty, larger than m, or short without being last.
    std::vector<std::size_t> bad_size;

    bool ok() const { return duplicated.empty() && missing.empty() && out_of_range.empty() && bad_size.empty(); }
    std::string describe() const;
};

ViolationReport validate(const PhotonAssignment& a);

/// Pairwise torus distance statistics, for toric assignments.
struct DistanceStats {
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
};
DistanceStats intra_photon_distances(const PhotonAssignment& a, std::size_t d);

}  // namespace muxqec

#endif  // MUXQEC_ASSIGNMENT_H
