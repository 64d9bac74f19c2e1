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

#ifndef MUXQEC_CSS_CODE_H
#define MUXQEC_CSS_CODE_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "muxqec/gf2.h"

namespace muxqec {

/// Raised when a construction yields parameters inconsistent with what was requested.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation needs structure (HGP layout, toric lattice) the code lacks.
struct UnsupportedCode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class QubitBlock { First, Second };

struct HgpCoord {
    QubitBlock block;
    std::size_t row;
    std::size_t col;
    friend bool operator==(const HgpCoord&, const HgpCoord&) = default;
};

/// Shape of a hypergraph product built from H1 (r1 x n1) and H2 (r2 x n2).
///
/// Qubits of the first block form an n1 x n2 grid stored row-major at
/// indices [0, n1*n2); the second block is an r1 x r2 grid stored row-major
/// after it.
struct HgpMeta {
    std::size_t r1 = 0;
    std::size_t n1 = 0;
    std::size_t r2 = 0;
    std::size_t n2 = 0;

    std::size_t first_block_size() const { return n1 * n2; }
    std::size_t num_qubits() const { return n1 * n2 + r1 * r2; }
    HgpCoord coord(std::size_t q) const;
    std::size_t index(const HgpCoord& c) const;
    std::size_t block_rows(QubitBlock b) const { return b == QubitBlock::First ? n1 : r1; }
    std::size_t block_cols(QubitBlock b) const { return b == QubitBlock::First ? n2 : r2; }
};

/// A CSS code with cached ranks and a symplectic logical basis.
///
/// Invariants upheld by every factory: hx·hzᵀ = 0, k = n - rank(hx) - rank(hz),
/// logical_x[i]·logical_z[j] = δij, logical_x ⊂ ker(hz) \ rowspace(hx) and
/// logical_z ⊂ ker(hx) \ rowspace(hz).
struct CssCode {
    BinaryMatrix hx;
    BinaryMatrix hz;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t rank_x = 0;
    std::size_t rank_z = 0;
    std::vector<BitVector> logical_x;
    std::vector<BitVector> logical_z;
    std::optional<HgpMeta> hgp;
    /// Lattice side when the code is toric(d).
    std::optional<std::size_t> toric_d;
    std::string name;
};

struct LogicalBasis {
    std::vector<BitVector> x;
    std::vector<BitVector> z;
};

/// Canonical logical operators: kernel bases quotiented by the opposite
/// rowspace, then paired by symplectic Gram-Schmidt (lowest index first).
LogicalBasis logical_basis(const BinaryMatrix& hx, const BinaryMatrix& hz);
inline LogicalBasis logical_basis(const CssCode& code) { return logical_basis(code.hx, code.hz); }

/// Builds a code from arbitrary check matrices; throws ConstructionError if they do not commute.
CssCode make_css_code(BinaryMatrix hx, BinaryMatrix hz, std::string name = "css");

/// HX = (H1⊗I_n2 | I_r1⊗H2ᵀ), HZ = (I_n1⊗H2 | H1ᵀ⊗I_r2).
CssCode hgp(const BinaryMatrix& h1, const BinaryMatrix& h2);

/// d x d circulant with ones at (i, i) and (i, i+1 mod d).
BinaryMatrix cycle_matrix(std::size_t d);

/// [[2d², 2, d]] toric code as HGP(cycle(d), cycle(d)).
CssCode toric(std::size_t d);

HgpCoord hgp_coord(const CssCode& code, std::size_t q);

enum class EdgeOrientation { Horizontal, Vertical };

struct EdgeCoord {
    EdgeOrientation orientation;
    std::size_t i;
    std::size_t j;
    friend bool operator==(const EdgeCoord&, const EdgeCoord&) = default;
};

/// Toric qubits are lattice edges. Horizontal edges come first (q = i*d + j)
/// and match the first HGP block; vertical edges follow (q - d² = i*d + j).
///
/// With lattice vertices labelled (x, y) = (X-check row of cycle(d), column),
/// horizontal edge (i, j) joins (i-1, j) and (i, j); vertical edge (i, j)
/// joins (i, j) and (i, j+1).
EdgeCoord toric_edge_coord(std::size_t d, std::size_t q);
std::size_t toric_edge_index(std::size_t d, const EdgeCoord& e);

/// Torus Manhattan distance between edge midpoints in lattice units.
std::size_t toric_edge_distance(std::size_t d, std::size_t a, std::size_t b);

}  // namespace muxqec

#endif  // MUXQEC_CSS_CODE_H
