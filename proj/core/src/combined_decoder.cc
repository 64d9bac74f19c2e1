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

#include "muxqec/combined_decoder.h"

#include <fmt/format.h>

#include "muxqec/peeling.h"
#include "muxqec/vh_decoder.h"

namespace muxqec {

DecodeOutcome combined_decode(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s, Sides sides,
                              DecodeTrace* trace) {
    const CssCode& code = ctx.code();
    DecodeOutcome out;
    out.correction = PauliFrame(code.n);
    out.residual_x = ErasurePattern(code.n);
    out.residual_z = ErasurePattern(code.n);
    for (ErrorType t : {ErrorType::Z, ErrorType::X}) {
        if (!sides.has(t)) continue;
        PrunedPeeler peeler(ctx, t, e, syndrome_for(s, t), trace);
        PeelState& st = peeler.state();
        std::string failure;
        while (true) {
            peeler.run();
            if (st.remaining() == 0) {
                if (st.syndrome().any()) failure = "syndrome left unexplained";
                break;
            }
            if (!code.hgp) {
                failure = fmt::format("stopping set of {} qubits", st.remaining());
                break;
            }
            VhResult vh = vh_solve(ctx, t, st.erased(), st.syndrome(), trace);
            if (vh.resolved.none()) {
                failure = fmt::format("stopping set of {} qubits: {} sets in a cycle", st.remaining(), vh.cycle.size());
                break;
            }
            for (std::size_t q : vh.resolved.support()) st.fix_bit(q, vh.correction.get(q));
        }
        frame_part(out.correction, t) = st.correction();
        (t == ErrorType::X ? out.residual_x : out.residual_z) = ErasurePattern(st.erased());
        if (!failure.empty()) {
            out.status = DecodeStatus::DecoderFailure;
            if (!out.failure.empty()) out.failure += "; ";
            out.failure += fmt::format("{} errors: {}", to_string(t), failure);
            if (trace) trace->add(fmt::format("fail: {} errors, {}", to_string(t), failure));
        }
    }
    return out;
}

DecodeOutcome combined_decode(const CssCode& code, const ErasurePattern& e, const Syndromes& s) {
    DecodingContext ctx(code);
    return combined_decode(ctx, e, s);
}

}  // namespace muxqec
