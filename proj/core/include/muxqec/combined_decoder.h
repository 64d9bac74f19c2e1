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

#ifndef MUXQEC_COMBINED_DECODER_H
#define MUXQEC_COMBINED_DECODER_H

#include "muxqec/decoder.h"

namespace muxqec {

/// Peeling, pruned peeling and the VH solver, repeated until the erasure is
/// empty (Success) or a round makes no progress (DecoderFailure). Codes
/// without an HGP layout stop after pruned peeling.
DecodeOutcome combined_decode(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s,
                              Sides sides = {}, DecodeTrace* trace = nullptr);
DecodeOutcome combined_decode(const CssCode& code, const ErasurePattern& e, const Syndromes& s);

}  // namespace muxqec

#endif  // MUXQEC_COMBINED_DECODER_H
