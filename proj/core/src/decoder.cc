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

#include "muxqec/decoder.h"

#include "muxqec/combined_decoder.h"
#include "muxqec/ml_oracle.h"
#include "muxqec/surface_decoder.h"

namespace muxqec {

std::string_view to_string(ErrorType t) { return t == ErrorType::X ? "X" : "Z"; }

Syndromes measure(const CssCode& code, const PauliFrame& frame) {
    return {syndrome(code.hx, frame.z), syndrome(code.hz, frame.x)};
}

TannerGraph::TannerGraph(const BinaryMatrix& h) {
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();
    check_start_.assign(rows + 1, 0);
    bit_start_.assign(cols + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c : h.row_support(r)) {
            check_adj_.push_back(static_cast<std::uint32_t>(c));
            ++bit_start_[c + 1];
        }
        check_start_[r + 1] = check_adj_.size();
    }
    for (std::size_t c = 0; c < cols; ++c) bit_start_[c + 1] += bit_start_[c];
    bit_adj_.resize(check_adj_.size());
    std::vector<std::size_t> fill(bit_start_.begin(), bit_start_.end() - 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = check_start_[r]; i < check_start_[r + 1]; ++i) {
            bit_adj_[fill[check_adj_[i]]++] = static_cast<std::uint32_t>(r);
        }
    }
    lattice_ = cols > 0;
    for (std::size_t c = 0; c < cols && lattice_; ++c) lattice_ = bit_start_[c + 1] - bit_start_[c] == 2;
}

DecodingContext::DecodingContext(const CssCode& code) : code_(&code), graph_x_(code.hx), graph_z_(code.hz) {
    rows_x_.reserve(code.hx.rows());
    for (std::size_t r = 0; r < code.hx.rows(); ++r) rows_x_.push_back(code.hx.row(r));
    rows_z_.reserve(code.hz.rows());
    for (std::size_t r = 0; r < code.hz.rows(); ++r) rows_z_.push_back(code.hz.row(r));
}

std::string_view to_string(DecoderKind k) {
    switch (k) {
        case DecoderKind::SurfaceMl:
            return "surface-ml";
        case DecoderKind::Combined:
            return "combined";
        case DecoderKind::MlOracle:
            return "ml-oracle";
    }
    return "unknown";
}

std::optional<DecoderKind> parse_decoder(std::string_view name) {
    if (name == "surface-ml") return DecoderKind::SurfaceMl;
    if (name == "combined") return DecoderKind::Combined;
    if (name == "ml-oracle") return DecoderKind::MlOracle;
    return std::nullopt;
}

DecodeOutcome decode(DecoderKind kind, const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s,
                     Sides sides, DecodeTrace* trace) {
    switch (kind) {
        case DecoderKind::SurfaceMl:
            return surface_ml_decode(ctx, e, s, sides, trace);
        case DecoderKind::Combined:
            return combined_decode(ctx, e, s, sides, trace);
        case DecoderKind::MlOracle:
            return ml_decode(ctx, e, s, sides, trace);
    }
    return {};
}

}  // namespace muxqec
