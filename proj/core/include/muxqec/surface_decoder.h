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

#ifndef MUXQEC_SURFACE_DECODER_H
#define MUXQEC_SURFACE_DECODER_H

#include "muxqec/decoder.h"

namespace muxqec {

/// Primal lattice: vertices are X checks, so it carries Z errors. Dual
/// lattice: vertices are Z checks (faces), carrying X errors.
enum class Lattice { Primal, Dual };

/// Erased edges of a spanning forest of the erasure subgraph, grown
/// breadth-first from the lowest-index vertex, lowest-index edge first.
/// The graph must be a lattice (every bit in exactly two checks).
BitVector spanning_forest(const TannerGraph& graph, const BitVector& erased);
BitVector spanning_forest(const CssCode& code, const ErasurePattern& e, Lattice lattice);

/// Spanning-forest peeling. Linear time and maximum likelihood for erasures
/// on lattice codes; DecoderFailure only when a component's syndrome has odd
/// parity, which no erasure-supported error produces.
DecodeOutcome surface_ml_decode(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s,
                                Sides sides = {}, DecodeTrace* trace = nullptr);
DecodeOutcome surface_ml_decode(const CssCode& code, const ErasurePattern& e, const Syndromes& s);

}  // namespace muxqec

#endif  // MUXQEC_SURFACE_DECODER_H
