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

#ifndef MUXQEC_ML_ORACLE_H
#define MUXQEC_ML_ORACLE_H

#include <optional>

#include "muxqec/decoder.h"

namespace muxqec {

/// Solves H|_E · x = s by Gaussian elimination, where H detects errors of
/// type t, and lifts x back to all n qubits. Absent iff inconsistent.
std::optional<BitVector> ml_oracle_decode(const CssCode& code, const ErasurePattern& e, const BitVector& s,
                                          ErrorType t);

/// Gaussian elimination on every requested half; DecoderFailure only when a
/// system is inconsistent.
DecodeOutcome ml_decode(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s, Sides sides = {},
                        DecodeTrace* trace = nullptr);

/// True iff some operator supported on the erasure commutes with every check
/// but is not a stabilizer. t = Z asks about Z-type logicals (kernel of H_X
/// modulo the rowspace of H_Z); t = X about X-type.
bool erasure_covers_logical(const CssCode& code, const ErasurePattern& e, ErrorType t);

/// True iff v lies in the rowspace of h.
bool in_rowspace(const BinaryMatrix& h, const BitVector& v);

}  // namespace muxqec

#endif  // MUXQEC_ML_ORACLE_H
