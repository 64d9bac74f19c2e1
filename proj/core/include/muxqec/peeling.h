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

#ifndef MUXQEC_PEELING_H
#define MUXQEC_PEELING_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "muxqec/decoder.h"

namespace muxqec {

/// Incremental peeling on the erasure-induced subgraph of a Tanner graph.
///
/// Dangling checks are retired lowest index first. Bits leave the erasure
/// either by peeling or through fix_bit(), which callers use to impose values
/// found elsewhere.
class PeelState {
   public:
    PeelState(const TannerGraph& graph, BitVector erased, BitVector syndrome, DecodeTrace* trace = nullptr);

    /// Peels until no dangling check remains.
    void run();
    /// Removes erased bit b, setting its correction bit to `value`.
    void fix_bit(std::size_t b, bool value);

    const BitVector& erased() const { return erased_; }
    const BitVector& correction() const { return correction_; }
    /// Syndrome of the error still unexplained by correction().
    const BitVector& syndrome() const { return syndrome_; }
    std::size_t remaining() const { return remaining_; }
    std::size_t degree(std::size_t c) const { return degree_[c]; }

   private:
    const TannerGraph* graph_;
    BitVector erased_;
    BitVector correction_;
    BitVector syndrome_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint32_t> heap_;
    std::size_t remaining_ = 0;
    DecodeTrace* trace_;

    void push(std::uint32_t c);
};

struct PeelResult {
    BitVector correction;
    ErasurePattern residual;
    BitVector residual_syndrome;
};

PeelResult peel(const TannerGraph& graph, const ErasurePattern& e, const BitVector& s, DecodeTrace* trace = nullptr);
PeelResult peel(const BinaryMatrix& h, const ErasurePattern& e, const BitVector& s);

/// Lowest-index generator of the given type whose support lies inside the
/// erasure. Only single generators are searched, not their products.
std::optional<std::size_t> find_erased_stabilizer(const CssCode& code, const ErasurePattern& e, PauliType type);

/// Peeling interleaved with stabilizer breaking for errors of type t: while
/// stalled with an erased generator of the equivalent stabilizer type, its
/// lowest qubit is declared error-free and peeling resumes.
class PrunedPeeler {
   public:
    PrunedPeeler(const DecodingContext& ctx, ErrorType t, const ErasurePattern& e, const BitVector& s,
                 DecodeTrace* trace = nullptr);

    /// Runs to the joint fixpoint; returns the number of break steps taken.
    std::size_t run();
    PeelState& state() { return state_; }
    const PeelState& state() const { return state_; }

   private:
    const DecodingContext* ctx_;
    ErrorType type_;
    PeelState state_;
    std::size_t cursor_ = 0;
    DecodeTrace* trace_;
};

struct PrunedPeelResult {
    PeelResult x_errors;
    PeelResult z_errors;
    std::size_t breaks = 0;
};

PrunedPeelResult pruned_peel(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s,
                             DecodeTrace* trace = nullptr);

}  // namespace muxqec

#endif  // MUXQEC_PEELING_H
