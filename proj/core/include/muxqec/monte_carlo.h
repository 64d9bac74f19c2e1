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

#ifndef MUXQEC_MONTE_CARLO_H
#define MUXQEC_MONTE_CARLO_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "muxqec/assignment.h"
#include "muxqec/decoder.h"
#include "muxqec/erasure.h"
#include "muxqec/rng.h"

namespace muxqec {

enum class TrialStatus { Success, LogicalError, DecoderFailure };

/// logical-z counts Z errors only and is the default. logical-any and erf
/// both decode both halves; a failure of either half counts once.
enum class Metric { LogicalZ, LogicalX, LogicalAny, Erf };

std::string_view to_string(TrialStatus s);
std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);
Sides sides_for(Metric m);

struct TrialOutcome {
    TrialStatus status = TrialStatus::Success;
    /// z_flips[i]: the residual Z error anticommutes with logical_x[i].
    std::vector<bool> z_flips;
    /// x_flips[i]: the residual X error anticommutes with logical_z[i].
    std::vector<bool> x_flips;
    /// The decoder reported Success with a correction that misses the syndrome.
    bool decoder_bug = false;
    std::string detail;
};

/// Everything sampled and computed in one trial, for replays.
struct TrialRecord {
    ErasurePattern erasure;
    PauliFrame frame;
    Syndromes syndromes;
    DecodeOutcome decoded;
};

/// True iff residual_z anticommutes with some logical X. Throws
/// std::logic_error unless H_X · residual_z = 0.
bool logical_z_error(const CssCode& code, const BitVector& residual_z);
/// True iff residual_x anticommutes with some logical Z. Throws
/// std::logic_error unless H_Z · residual_x = 0.
bool logical_x_error(const CssCode& code, const BitVector& residual_x);

/// Decodes and classifies a given erasure and frame.
TrialOutcome evaluate(const DecodingContext& ctx, const ErasurePattern& e, const PauliFrame& frame,
                      DecoderKind decoder, Metric metric, TrialRecord* record = nullptr,
                      DecodeTrace* trace = nullptr);

/// sample_loss, erasure_to_pauli, syndromes, decode, classify.
TrialOutcome run_trial(const DecodingContext& ctx, const PhotonAssignment& a, const ChannelConfig& cfg,
                       DecoderKind decoder, Metric metric, Rng& rng, TrialRecord* record = nullptr,
                       DecodeTrace* trace = nullptr);

struct Estimate {
    std::size_t failures = 0;
    std::size_t trials = 0;
    /// failures / trials
    double rate = 0.0;
    /// Agresti-Coull centre (failures + z²/2) / (trials + z²).
    double center = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double z = 1.96;
};

/// Agresti-Coull interval, clamped to [0, 1]. Throws std::invalid_argument
/// for trials = 0 or failures > trials.
Estimate agresti_coull(std::size_t failures, std::size_t trials, double z = 1.96);

/// Strategy name for scenario A: m independent codewords whose qubit j
/// share photon j. Each codeword is decoded separately and counted as one
/// trial, so a point reports trials x m outcomes.
inline constexpr std::string_view kCopiesStrategy = "copies";

struct SweepConfig {
    std::string code_label;
    std::string strategy = "random";
    std::vector<std::size_t> m_values{1};
    std::vector<double> p_loss;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    /// Seed for assignment construction; the master seed when absent.
    std::optional<std::uint64_t> assignment_seed;
    /// Draw a fresh assignment for every trial instead of one per m.
    bool resample_assignment = false;
    DecoderKind decoder = DecoderKind::SurfaceMl;
    Metric metric = Metric::LogicalZ;
    std::size_t workers = 1;
    double z = 1.96;
};

struct SweepRow {
    double p_loss = 0.0;
    std::size_t m = 1;
    std::string strategy;
    std::string code;
    std::string decoder;
    std::uint64_t seed = 0;
    std::size_t photons = 0;
    std::size_t logical_errors = 0;
    std::size_t decoder_failures = 0;
    std::size_t decoder_bugs = 0;
    Estimate estimate;
};

/// Throws ConfigError when the configuration cannot run on this code.
void validate_sweep(const CssCode& code, const SweepConfig& cfg);

/// Rows ordered by m, then grid point. Trial t of grid point i draws from
/// make_trial_rng(seed, i, t); results do not depend on cfg.workers.
std::vector<SweepRow> sweep(const CssCode& code, const SweepConfig& cfg);

/// Grid start, start + step, ..., stop; count = round((stop - start) / step) + 1.
std::vector<double> linear_grid(double start, double stop, double step);

}  // namespace muxqec

#endif  // MUXQEC_MONTE_CARLO_H
