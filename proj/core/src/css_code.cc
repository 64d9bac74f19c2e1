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

#include "muxqec/css_code.h"

#include <algorithm>
#include <utility>

namespace muxqec {

HgpCoord HgpMeta::coord(std::size_t q) const {
    if (q >= num_qubits()) throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
    if (q < first_block_size()) return {QubitBlock::First, q / n2, q % n2};
    std::size_t off = q - first_block_size();
    return {QubitBlock::Second, off / r2, off % r2};
}

std::size_t HgpMeta::index(const HgpCoord& c) const {
    if (c.block == QubitBlock::First) {
        if (c.row >= n1 || c.col >= n2) throw std::out_of_range("first-block coordinate out of range");
        return c.row * n2 + c.col;
    }
    if (c.row >= r1 || c.col >= r2) throw std::out_of_range("second-block coordinate out of range");
    return first_block_size() + c.row * r2 + c.col;
}

namespace {

// Keeps the members of `kernel` that are independent modulo rowspace(`quotient`).
std::vector<BitVector> quotient_representatives(const std::vector<BitVector>& kernel, const BinaryMatrix& quotient) {
    SpanBasis span(quotient.cols());
    for (std::size_t r = 0; r < quotient.rows(); ++r) span.insert(quotient.row(r));
    std::vector<BitVector> reps;
    for (const auto& v : kernel) {
        if (span.insert(v)) reps.push_back(v);
    }
    return reps;
}

}  // namespace

LogicalBasis logical_basis(const BinaryMatrix& hx, const BinaryMatrix& hz) {
    auto xs = quotient_representatives(nullspace_basis(hz), hx);
    auto zs = quotient_representatives(nullspace_basis(hx), hz);
    if (xs.size() != zs.size()) {
        throw ConstructionError("logical basis: " + std::to_string(xs.size()) + " X vs " + std::to_string(zs.size()) +
                                " Z representatives");
    }

    // Symplectic Gram-Schmidt over the pairing x·z.
    const std::size_t k = xs.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t xi = k;
        std::size_t zj = k;
        for (std::size_t a = i; a < k && xi == k; ++a) {
            for (std::size_t b = i; b < k; ++b) {
                if (xs[a].dot(zs[b])) {
                    xi = a;
                    zj = b;
                    break;
                }
            }
        }
        if (xi == k) throw ConstructionError("logical basis: degenerate symplectic pairing");
        std::swap(xs[i], xs[xi]);
        std::swap(zs[i], zs[zj]);
        for (std::size_t a = i + 1; a < k; ++a) {
            if (xs[a].dot(zs[i])) xs[a] ^= xs[i];
        }
        for (std::size_t b = i + 1; b < k; ++b) {
            if (xs[i].dot(zs[b])) zs[b] ^= zs[i];
        }
    }
    return {std::move(xs), std::move(zs)};
}

CssCode make_css_code(BinaryMatrix hx, BinaryMatrix hz, std::string name) {
    if (hx.cols() != hz.cols()) {
        throw ConstructionError("HX has " + std::to_string(hx.cols()) + " columns but HZ has " +
                                std::to_string(hz.cols()));
    }
    if (!(hx * hz.transpose()).is_zero()) throw ConstructionError("HX·HZᵀ != 0; checks do not commute");
    CssCode code;
    code.n = hx.cols();
    code.rank_x = rank(hx);
    code.rank_z = rank(hz);
    code.k = code.n - code.rank_x - code.rank_z;
    auto basis = logical_basis(hx, hz);
    if (basis.x.size() != code.k) throw ConstructionError("logical basis size disagrees with k");
    code.logical_x = std::move(basis.x);
    code.logical_z = std::move(basis.z);
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.name = std::move(name);
    return code;
}

CssCode hgp(const BinaryMatrix& h1, const BinaryMatrix& h2) {
    if (h1.rows() == 0 || h1.cols() == 0 || h2.rows() == 0 || h2.cols() == 0) {
        throw std::invalid_argument("hgp: classical matrices must be non-empty");
    }
    const std::size_t r1 = h1.rows(), n1 = h1.cols(), r2 = h2.rows(), n2 = h2.cols();
    BinaryMatrix hx = BinaryMatrix::hstack(h1.kron(BinaryMatrix::identity(n2)),
                                           BinaryMatrix::identity(r1).kron(h2.transpose()));
    BinaryMatrix hz = BinaryMatrix::hstack(BinaryMatrix::identity(n1).kron(h2),
                                           h1.transpose().kron(BinaryMatrix::identity(r2)));
    std::string name = "hgp(" + std::to_string(r1) + "x" + std::to_string(n1) + "," + std::to_string(r2) + "x" +
                       std::to_string(n2) + ")";
    CssCode code = make_css_code(std::move(hx), std::move(hz), std::move(name));
    code.hgp = HgpMeta{r1, n1, r2, n2};
    return code;
}

BinaryMatrix cycle_matrix(std::size_t d) {
    BinaryMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m.flip(i, i);
        m.flip(i, (i + 1) % d);
    }
    return m;
}

CssCode toric(std::size_t d) {
    if (d < 2) throw std::invalid_argument("toric: lattice side d must be >= 2, got " + std::to_string(d));
    BinaryMatrix c = cycle_matrix(d);
    CssCode code = hgp(c, c);
    if (code.n != 2 * d * d || code.k != 2) {
        throw ConstructionError("toric(" + std::to_string(d) + ") produced n=" + std::to_string(code.n) +
                                " k=" + std::to_string(code.k));
    }
    code.toric_d = d;
    code.name = "toric(" + std::to_string(d) + ")";
    return code;
}

HgpCoord hgp_coord(const CssCode& code, std::size_t q) {
    if (!code.hgp) throw UnsupportedCode("hgp_coord: code '" + code.name + "' has no hypergraph-product layout");
    return code.hgp->coord(q);
}

EdgeCoord toric_edge_coord(std::size_t d, std::size_t q) {
    const std::size_t half = d * d;
    if (q >= 2 * half) throw std::out_of_range("toric edge index " + std::to_string(q) + " out of range");
    if (q < half) return {EdgeOrientation::Horizontal, q / d, q % d};
    return {EdgeOrientation::Vertical, (q - half) / d, (q - half) % d};
}

std::size_t toric_edge_index(std::size_t d, const EdgeCoord& e) {
    if (e.i >= d || e.j >= d) throw std::out_of_range("toric edge coordinate out of range");
    std::size_t base = e.orientation == EdgeOrientation::Horizontal ? 0 : d * d;
    return base + e.i * d + e.j;
}

namespace {

// Midpoint on the doubled 2d x 2d grid.
std::pair<std::size_t, std::size_t> doubled_midpoint(std::size_t d, std::size_t q) {
    EdgeCoord e = toric_edge_coord(d, q);
    const std::size_t w = 2 * d;
    if (e.orientation == EdgeOrientation::Horizontal) return {(2 * e.i + w - 1) % w, 2 * e.j};
    return {2 * e.i, 2 * e.j + 1};
}

std::size_t ring_distance(std::size_t a, std::size_t b, std::size_t w) {
    std::size_t diff = a > b ? a - b : b - a;
    return std::min(diff, w - diff);
}

}  // namespace

std::size_t toric_edge_distance(std::size_t d, std::size_t a, std::size_t b) {
    auto [ax, ay] = doubled_midpoint(d, a);
    auto [bx, by] = doubled_midpoint(d, b);
    return (ring_distance(ax, bx, 2 * d) + ring_distance(ay, by, 2 * d)) / 2;
}

}  // namespace muxqec
