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

#ifndef MUXQEC_VH_DECODER_H
#define MUXQEC_VH_DECODER_H

#include <cstddef>
#include <vector>

#include "muxqec/decoder.h"

namespace muxqec {

enum class LineAxis { Vertical, Horizontal };

struct SharedCheck {
    std::size_t neighbor;
    std::size_t check;
};

/// Residual qubits of one line of the HGP Tanner grid.
///
/// The grid places block one at the top left (n1 x n2), block two at the
/// bottom right (r1 x r2), X checks at the bottom left and Z checks at the
/// top right. A vertical set's `line` is its grid column and a horizontal
/// set's is its grid row. For Z errors a block-one qubit lies on the vertical
/// line of its column and a block-two qubit on the horizontal line of its row;
/// for X errors the roles swap. Every check lies on one line of each axis, so
/// two sets share at most one check.
struct ClassicalStoppingSet {
    LineAxis axis;
    std::size_t line;
    std::vector<std::size_t> qubits;
    /// Checks touched by the qubits, ascending.
    std::vector<std::size_t> checks;
    /// Checks also touched by another set.
    std::vector<SharedCheck> shared;
};

std::vector<ClassicalStoppingSet> vh_partition(const DecodingContext& ctx, const BitVector& residual, ErrorType t);
std::vector<ClassicalStoppingSet> vh_partition(const CssCode& code, const ErasurePattern& residual, ErrorType t);

struct VhResult {
    std::vector<ClassicalStoppingSet> sets;
    /// Qubits whose values were determined.
    BitVector resolved;
    /// Values on resolved qubits.
    BitVector correction;
    /// Sets left with two or more unsolved neighbours.
    std::vector<std::size_t> cycle;
    /// Sets whose local system had no solution.
    std::vector<std::size_t> inconsistent;

    bool complete() const { return cycle.empty() && inconsistent.empty() && unresolved == 0; }
    std::size_t unresolved = 0;
};

/// Sequential Gaussian solve of the stopping sets of residual errors of type t.
///
/// The worklist takes the unsolved set with the fewest unsolved neighbours.
/// With none it is solved outright. With exactly one it is solved on its
/// other checks and hands its neighbour either a fixed contribution on the
/// shared check or, when its kernel can toggle that check, a free column.
/// Solving is exact on acyclic arrangements of sets. Sets that only ever see
/// two or more unsolved neighbours form the reported cycle; they and anything
/// that handed work to them stay unresolved.
VhResult vh_solve(const DecodingContext& ctx, ErrorType t, const BitVector& residual, const BitVector& syndrome,
                  DecodeTrace* trace = nullptr);

/// vh_solve on each requested half with the same erasure.
DecodeOutcome vh_decode(const DecodingContext& ctx, const ErasurePattern& residual, const Syndromes& s,
                        Sides sides = {}, DecodeTrace* trace = nullptr);

}  // namespace muxqec

#endif  // MUXQEC_VH_DECODER_H
