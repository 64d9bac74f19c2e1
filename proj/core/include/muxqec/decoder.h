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

#ifndef MUXQEC_DECODER_H
#define MUXQEC_DECODER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "muxqec/css_code.h"
#include "muxqec/erasure.h"
#include "muxqec/gf2.h"

namespace muxqec {

/// Which half of the Pauli frame is being decoded. Z errors are seen by the
/// X checks (H_X) and are equivalent up to Z stabilizers (rows of H_Z).
enum class ErrorType { X, Z };

/// Stabilizer (or check) type: rows of H_X or of H_Z.
enum class PauliType { X, Z };

std::string_view to_string(ErrorType t);

struct Syndromes {
    /// H_X · frame.z
    BitVector x_checks;
    /// H_Z · frame.x
    BitVector z_checks;
};

Syndromes measure(const CssCode& code, const PauliFrame& frame);

/// Which halves of the frame to decode.
struct Sides {
    bool x_errors = true;
    bool z_errors = true;
    bool has(ErrorType t) const { return t == ErrorType::X ? x_errors : z_errors; }
};

enum class DecodeStatus { Success, DecoderFailure };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Success;
    /// Predicted error; meaningful on Success.
    PauliFrame correction;
    /// Qubits left undetermined, per decoded half (diagnostic).
    ErasurePattern residual_x;
    ErasurePattern residual_z;
    std::string failure;

    bool ok() const { return status == DecodeStatus::Success; }
};

/// Human-readable step log for single-trial replays.
struct DecodeTrace {
    std::vector<std::string> lines;
    void add(std::string line) { lines.push_back(std::move(line)); }
};

/// Bit/check incidence of a parity-check matrix in compressed form.
class TannerGraph {
   public:
    TannerGraph() = default;
    explicit TannerGraph(const BinaryMatrix& h);

    std::size_t num_checks() const { return check_start_.empty() ? 0 : check_start_.size() - 1; }
    std::size_t num_bits() const { return bit_start_.empty() ? 0 : bit_start_.size() - 1; }
    /// Bits of check c in ascending order.
    std::span<const std::uint32_t> check_bits(std::size_t c) const {
        return {check_adj_.data() + check_start_[c], check_start_[c + 1] - check_start_[c]};
    }
    /// Checks of bit b in ascending order.
    std::span<const std::uint32_t> bit_checks(std::size_t b) const {
        return {bit_adj_.data() + bit_start_[b], bit_start_[b + 1] - bit_start_[b]};
    }
    /// True when every bit touches exactly two checks, so bits are graph edges.
    bool is_lattice() const { return lattice_; }

   private:
    std::vector<std::size_t> check_start_;
    std::vector<std::uint32_t> check_adj_;
    std::vector<std::size_t> bit_start_;
    std::vector<std::uint32_t> bit_adj_;
    bool lattice_ = false;
};

/// Per-code decoder tables, built once and shared read-only across trials.
/// The referenced code must outlive the context.
class DecodingContext {
   public:
    explicit DecodingContext(const CssCode& code);

    const CssCode& code() const { return *code_; }
    /// Check matrix that detects errors of type t.
    const BinaryMatrix& checks(ErrorType t) const { return t == ErrorType::Z ? code_->hx : code_->hz; }
    const TannerGraph& graph(ErrorType t) const { return t == ErrorType::Z ? graph_x_ : graph_z_; }
    /// Stabilizers that errors of type t are equivalent up to.
    const BinaryMatrix& stabilizers(ErrorType t) const { return t == ErrorType::Z ? code_->hz : code_->hx; }
    const std::vector<BitVector>& stabilizer_rows(ErrorType t) const {
        return t == ErrorType::Z ? rows_z_ : rows_x_;
    }
    /// Logical operators an error of type t is tested against.
    const std::vector<BitVector>& dual_logicals(ErrorType t) const {
        return t == ErrorType::Z ? code_->logical_x : code_->logical_z;
    }

   private:
    const CssCode* code_;
    TannerGraph graph_x_;
    TannerGraph graph_z_;
    std::vector<BitVector> rows_x_;
    std::vector<BitVector> rows_z_;
};

inline const BitVector& syndrome_for(const Syndromes& s, ErrorType t) {
    return t == ErrorType::Z ? s.x_checks : s.z_checks;
}
inline BitVector& frame_part(PauliFrame& f, ErrorType t) { return t == ErrorType::Z ? f.z : f.x; }
inline const BitVector& frame_part(const PauliFrame& f, ErrorType t) { return t == ErrorType::Z ? f.z : f.x; }

enum class DecoderKind { SurfaceMl, Combined, MlOracle };

std::string_view to_string(DecoderKind k);
std::optional<DecoderKind> parse_decoder(std::string_view name);

/// Dispatches to surface_ml_decode, combined_decode or ml_decode.
DecodeOutcome decode(DecoderKind kind, const DecodingContext& ctx, const ErasurePattern& e, const Syndromes& s,
                     Sides sides = {}, DecodeTrace* trace = nullptr);

}  // namespace muxqec

#endif  // MUXQEC_DECODER_H
