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

#include "muxqec/peeling.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

namespace muxqec {

PeelState::PeelState(const TannerGraph& graph, BitVector erased, BitVector syndrome, DecodeTrace* trace)
    : graph_(&graph),
      erased_(std::move(erased)),
      correction_(graph.num_bits()),
      syndrome_(std::move(syndrome)),
      degree_(graph.num_checks(), 0),
      trace_(trace) {
    if (erased_.size() != graph.num_bits()) throw std::invalid_argument("peel: erasure length != number of bits");
    if (syndrome_.size() != graph.num_checks()) throw std::invalid_argument("peel: syndrome length != number of checks");
    for (std::size_t b : erased_.support()) {
        ++remaining_;
        for (std::uint32_t c : graph.bit_checks(b)) ++degree_[c];
    }
    for (std::size_t c = 0; c < degree_.size(); ++c) {
        if (degree_[c] == 1) heap_.push_back(static_cast<std::uint32_t>(c));
    }
    // Ascending order is already a valid min-heap.
}

void PeelState::push(std::uint32_t c) {
    heap_.push_back(c);
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
}

void PeelState::fix_bit(std::size_t b, bool value) {
    if (!erased_.get(b)) throw std::logic_error("fix_bit: bit " + std::to_string(b) + " is not erased");
    erased_.set(b, false);
    --remaining_;
    if (value) correction_.flip(b);
    for (std::uint32_t c : graph_->bit_checks(b)) {
        if (value) syndrome_.flip(c);
        if (--degree_[c] == 1) push(c);
    }
}

void PeelState::run() {
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
        std::uint32_t c = heap_.back();
        heap_.pop_back();
        if (degree_[c] != 1) continue;
        std::size_t bit = 0;
        for (std::uint32_t b : graph_->check_bits(c)) {
            if (erased_.get(b)) {
                bit = b;
                break;
            }
        }
        bool value = syndrome_.get(c);
        if (trace_) trace_->add(fmt::format("peel: dangling check {} fixes bit {} = {}", c, bit, value ? 1 : 0));
        fix_bit(bit, value);
    }
}

PeelResult peel(const TannerGraph& graph, const ErasurePattern& e, const BitVector& s, DecodeTrace* trace) {
    PeelState st(graph, e.mask, s, trace);
    st.run();
    return {st.correction(), ErasurePattern(st.erased()), st.syndrome()};
}

PeelResult peel(const BinaryMatrix& h, const ErasurePattern& e, const BitVector& s) {
    TannerGraph g(h);
    return peel(g, e, s);
}

std::optional<std::size_t> find_erased_stabilizer(const CssCode& code, const ErasurePattern& e, PauliType type) {
    const BinaryMatrix& h = type == PauliType::X ? code.hx : code.hz;
    if (e.n() != h.cols()) throw std::invalid_argument("find_erased_stabilizer: erasure length mismatch");
    for (std::size_t r = 0; r < h.rows(); ++r) {
        if (h.row_is_zero(r)) continue;
        if (h.row(r).is_subset_of(e.mask)) return r;
    }
    return std::nullopt;
}

PrunedPeeler::PrunedPeeler(const DecodingContext& ctx, ErrorType t, const ErasurePattern& e, const BitVector& s,
                           DecodeTrace* trace)
    : ctx_(&ctx), type_(t), state_(ctx.graph(t), e.mask, s, trace), trace_(trace) {}

std::size_t PrunedPeeler::run() {
    const auto& rows = ctx_->stabilizer_rows(type_);
    std::size_t breaks = 0;
    while (true) {
        state_.run();
        if (state_.remaining() == 0) break;
        // The erasure only shrinks, so a generator that stopped being covered
        // never becomes covered again and the scan can resume where it left off.
        const BitVector& erased = state_.erased();
        while (cursor_ < rows.size() && (rows[cursor_].none() || !rows[cursor_].is_subset_of(erased))) ++cursor_;
        if (cursor_ == rows.size()) break;
        std::size_t q = rows[cursor_].support().front();
        if (trace_) {
            trace_->add(fmt::format("prune: erased {} stabilizer {} broken at qubit {}",
                                    type_ == ErrorType::Z ? "Z" : "X", cursor_, q));
        }
        state_.fix_bit(q, false);
        ++breaks;
    }
    return breaks;
}

PrunedPeelResult pruned_peel(const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s,
                             DecodeTrace* trace) {
    PrunedPeelResult out;
    for (ErrorType t : {ErrorType::X, ErrorType::Z}) {
        PrunedPeeler p(ctx, t, e, syndrome_for(s, t), trace);
        out.breaks += p.run();
        PeelResult r{p.state().correction(), ErasurePattern(p.state().erased()), p.state().syndrome()};
        (t == ErrorType::X ? out.x_errors : out.z_errors) = std::move(r);
    }
    return out;
}

}  // namespace muxqec
