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

#include "muxqec/surface_decoder.h"

#include <stdexcept>

#include <fmt/format.h>

#include "muxqec/peeling.h"

namespace muxqec {

BitVector spanning_forest(const TannerGraph& graph, const BitVector& erased) {
    if (!graph.is_lattice()) throw UnsupportedCode("spanning_forest: every qubit must touch exactly two checks");
    const std::size_t nv = graph.num_checks();
    BitVector forest(graph.num_bits());
    std::vector<bool> seen(nv, false);
    std::vector<std::uint32_t> queue;
    queue.reserve(nv);
    for (std::size_t root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        bool touched = false;
        for (std::uint32_t b : graph.check_bits(root)) touched = touched || erased.get(b);
        if (!touched) continue;
        seen[root] = true;
        queue.clear();
        queue.push_back(static_cast<std::uint32_t>(root));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t u = queue[head];
            for (std::uint32_t b : graph.check_bits(u)) {
                if (!erased.get(b)) continue;
                auto ends = graph.bit_checks(b);
                std::uint32_t w = ends[0] == u ? ends[1] : ends[0];
                if (seen[w]) continue;
                seen[w] = true;
                forest.set(b);
                queue.push_back(w);
            }
        }
    }
    return forest;
}

BitVector spanning_forest(const CssCode& code, const ErasurePattern& e, Lattice lattice) {
    TannerGraph g(lattice == Lattice::Primal ? code.hx : code.hz);
    return spanning_forest(g, e.mask);
}

DecodeOutcome surface_ml_decode(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s, Sides sides,
                                DecodeTrace* trace) {
    const std::size_t n = ctx.code().n;
    DecodeOutcome out;
    out.correction = PauliFrame(n);
    out.residual_x = ErasurePattern(n);
    out.residual_z = ErasurePattern(n);
    for (ErrorType t : {ErrorType::Z, ErrorType::X}) {
        if (!sides.has(t)) continue;
        const TannerGraph& g = ctx.graph(t);
        BitVector forest = spanning_forest(g, e.mask);
        if (trace) {
            trace->add(fmt::format("forest ({} errors): {} of {} erased edges", to_string(t), forest.popcount(),
                                   e.count()));
        }
        PeelState st(g, forest, syndrome_for(s, t), trace);
        st.run();
        if (st.remaining() != 0) throw std::logic_error("surface_ml_decode: forest peeling left a residual");
        frame_part(out.correction, t) = st.correction();
        if (st.syndrome().any()) {
            out.status = DecodeStatus::DecoderFailure;
            out.failure = fmt::format("{} syndrome has odd parity on a component", to_string(t));
        }
    }
    return out;
}

DecodeOutcome surface_ml_decode(const CssCode& code, const ErasurePattern& e, const Syndromes& s) {
    DecodingContext ctx(code);
    return surface_ml_decode(ctx, e, s);
}

}  // namespace muxqec
