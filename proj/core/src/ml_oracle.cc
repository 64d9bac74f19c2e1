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

#include "muxqec/ml_oracle.h"

#include <fmt/format.h>

namespace muxqec {

namespace {

const BinaryMatrix& detecting(const CssCode& code, ErrorType t) { return t == ErrorType::Z ? code.hx : code.hz; }

BitVector lift(const BitVector& local, const std::vector<std::size_t>& cols, std::size_t n) {
    BitVector out(n);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (local.get(i)) out.set(cols[i]);
    }
    return out;
}

SpanBasis rowspace_basis(const BinaryMatrix& h) {
    SpanBasis span(h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r) span.insert(h.row(r));
    return span;
}

}  // namespace

std::optional<BitVector> ml_oracle_decode(const CssCode& code, const ErasurePattern& e, const BitVector& s,
                                          ErrorType t) {
    const BinaryMatrix& h = detecting(code, t);
    std::vector<std::size_t> cols = e.qubits();
    auto local = solve(restrict_columns(h, cols), s);
    if (!local) return std::nullopt;
    return lift(*local, cols, code.n);
}

DecodeOutcome ml_decode(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s, Sides sides,
                        DecodeTrace* trace) {
    const CssCode& code = ctx.code();
    DecodeOutcome out;
    out.correction = PauliFrame(code.n);
    out.residual_x = ErasurePattern(code.n);
    out.residual_z = ErasurePattern(code.n);
    for (ErrorType t : {ErrorType::Z, ErrorType::X}) {
        if (!sides.has(t)) continue;
        auto x = ml_oracle_decode(code, e, syndrome_for(s, t), t);
        if (!x) {
            out.status = DecodeStatus::DecoderFailure;
            out.failure = fmt::format("{} system inconsistent", to_string(t));
            (t == ErrorType::X ? out.residual_x : out.residual_z) = e;
            continue;
        }
        if (trace) trace->add(fmt::format("gaussian ({} errors): weight {} solution", to_string(t), x->popcount()));
        frame_part(out.correction, t) = std::move(*x);
    }
    return out;
}

bool erasure_covers_logical(const CssCode& code, const ErasurePattern& e, ErrorType t) {
    const BinaryMatrix& h = detecting(code, t);
    const BinaryMatrix& stabs = t == ErrorType::Z ? code.hz : code.hx;
    std::vector<std::size_t> cols = e.qubits();
    if (cols.empty()) return false;
    auto kernel = nullspace_basis(restrict_columns(h, cols));
    if (kernel.empty()) return false;
    SpanBasis span = rowspace_basis(stabs);
    for (const auto& k : kernel) {
        if (!span.contains(lift(k, cols, code.n))) return true;
    }
    return false;
}

bool in_rowspace(const BinaryMatrix& h, const BitVector& v) { return rowspace_basis(h).contains(v); }

}  // namespace muxqec
