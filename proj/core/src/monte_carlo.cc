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

#include "muxqec/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace muxqec {

std::string_view to_string(TrialStatus s) {
    switch (s) {
        case TrialStatus::Success:
            return "Success";
        case TrialStatus::LogicalError:
            return "LogicalError";
        case TrialStatus::DecoderFailure:
            return "DecoderFailure";
    }
    return "unknown";
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::LogicalZ:
            return "logical-z";
        case Metric::LogicalX:
            return "logical-x";
        case Metric::LogicalAny:
            return "logical-any";
        case Metric::Erf:
            return "erf";
    }
    return "unknown";
}

std::optional<Metric> parse_metric(std::string_view name) {
    if (name == "logical-z") return Metric::LogicalZ;
    if (name == "logical-x") return Metric::LogicalX;
    if (name == "logical-any") return Metric::LogicalAny;
    if (name == "erf") return Metric::Erf;
    return std::nullopt;
}

Sides sides_for(Metric m) {
    switch (m) {
        case Metric::LogicalZ:
            return {false, true};
        case Metric::LogicalX:
            return {true, false};
        case Metric::LogicalAny:
        case Metric::Erf:
            return {true, true};
    }
    return {};
}

namespace {

bool anticommutes_with_any(const BitVector& residual, const std::vector<BitVector>& logicals) {
    return std::any_of(logicals.begin(), logicals.end(), [&](const BitVector& l) { return residual.dot(l); });
}

}  // namespace

bool logical_z_error(const CssCode& code, const BitVector& residual_z) {
    if ((code.hx * residual_z).any()) throw std::logic_error("logical_z_error: residual has nonzero X-check syndrome");
    return anticommutes_with_any(residual_z, code.logical_x);
}

bool logical_x_error(const CssCode& code, const BitVector& residual_x) {
    if ((code.hz * residual_x).any()) throw std::logic_error("logical_x_error: residual has nonzero Z-check syndrome");
    return anticommutes_with_any(residual_x, code.logical_z);
}

TrialOutcome evaluate(const DecodingContext& ctx, const ErasurePattern& e, const PauliFrame& frame,
                      DecoderKind decoder, Metric metric, TrialRecord* record, DecodeTrace* trace) {
    const Sides sides = sides_for(metric);
    Syndromes syn = measure(ctx.code(), frame);
    DecodeOutcome dec = decode(decoder, ctx, e, syn, sides, trace);
    TrialOutcome out;
    if (!dec.ok()) {
        out.status = TrialStatus::DecoderFailure;
        out.detail = dec.failure;
    } else {
        bool flipped = false;
        for (ErrorType t : {ErrorType::Z, ErrorType::X}) {
            if (!sides.has(t)) continue;
            BitVector residual = frame_part(frame, t) ^ frame_part(dec.correction, t);
            if ((ctx.checks(t) * residual).any() || !frame_part(dec.correction, t).is_subset_of(e.mask)) {
                out.status = TrialStatus::DecoderFailure;
                out.decoder_bug = true;
                out.detail = fmt::format("{} correction misses the syndrome or leaves the erasure", to_string(t));
                break;
            }
            auto& flags = t == ErrorType::Z ? out.z_flips : out.x_flips;
            for (const BitVector& l : ctx.dual_logicals(t)) {
                flags.push_back(residual.dot(l));
                flipped = flipped || flags.back();
            }
        }
        if (!out.decoder_bug && flipped) out.status = TrialStatus::LogicalError;
    }
    if (trace) trace->add(fmt::format("outcome: {}", to_string(out.status)));
    if (record) {
        record->erasure = e;
        record->frame = frame;
        record->syndromes = std::move(syn);
        record->decoded = std::move(dec);
    }
    return out;
}

TrialOutcome run_trial(const DecodingContext& ctx, const PhotonAssignment& a, const ChannelConfig& cfg,
                       DecoderKind decoder, Metric metric, Rng& rng, TrialRecord* record, DecodeTrace* trace) {
    if (a.code_n != ctx.code().n) throw std::invalid_argument("run_trial: assignment does not match the code length");
    ErasurePattern e = sample_loss(a, cfg, rng);
    PauliFrame frame = erasure_to_pauli(e, rng);
    return evaluate(ctx, e, frame, decoder, metric, record, trace);
}

Estimate agresti_coull(std::size_t failures, std::size_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("agresti_coull: trials must be >= 1");
    if (failures > trials) throw std::invalid_argument("agresti_coull: failures exceed trials");
    Estimate e;
    e.failures = failures;
    e.trials = trials;
    e.z = z;
    const double n = static_cast<double>(trials);
    const double z2 = z * z;
    const double nt = n + z2;
    e.rate = static_cast<double>(failures) / n;
    e.center = (static_cast<double>(failures) + z2 / 2.0) / nt;
    const double half = z * std::sqrt(e.center * (1.0 - e.center) / nt);
    e.ci_low = std::clamp(e.center - half, 0.0, 1.0);
    e.ci_high = std::clamp(e.center + half, 0.0, 1.0);
    return e;
}

std::vector<double> linear_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw ConfigError("p_loss grid step must be positive");
    if (stop < start) throw ConfigError("p_loss grid stop must not be below start");
    const auto count = static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return grid;
}

void validate_sweep(const CssCode& code, const SweepConfig& cfg) {
    if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
    if (cfg.p_loss.empty()) throw ConfigError("p_loss grid is empty");
    for (double p : cfg.p_loss) {
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(fmt::format("p_loss {} outside [0, 1]", p));
    }
    if (cfg.m_values.empty()) throw ConfigError("no multiplexing numbers given");
    if (!(cfg.z >= 0.0)) throw ConfigError("z must be non-negative");
    if (cfg.decoder == DecoderKind::SurfaceMl) {
        if (!TannerGraph(code.hx).is_lattice() || !TannerGraph(code.hz).is_lattice()) {
            throw ConfigError("decoder surface-ml needs a lattice code such as toric:<d>");
        }
    }
    for (std::size_t m : cfg.m_values) {
        if (m == 0) throw ConfigError("multiplexing number m must be >= 1");
        if (cfg.strategy != kCopiesStrategy) {
            PhotonAssignment a = make_assignment(code, cfg.strategy, m, cfg.assignment_seed.value_or(cfg.seed));
            if (auto report = validate(a); !report.ok()) {
                throw std::logic_error("assignment violates the partition invariants: " + report.describe());
            }
        }
    }
}

namespace {

struct Counts {
    std::size_t trials = 0;
    std::size_t logical = 0;
    std::size_t failures = 0;
    std::size_t bugs = 0;

    void add(const TrialOutcome& o) {
        ++trials;
        logical += o.status == TrialStatus::LogicalError;
        failures += o.status == TrialStatus::DecoderFailure;
        bugs += o.decoder_bug;
    }
    Counts& operator+=(const Counts& o) {
        trials += o.trials;
        logical += o.logical;
        failures += o.failures;
        bugs += o.bugs;
        return *this;
    }
};

}  // namespace

std::vector<SweepRow> sweep(const CssCode& code, const SweepConfig& cfg) {
    validate_sweep(code, cfg);
    const DecodingContext ctx(code);
    const bool copies = cfg.strategy == kCopiesStrategy;
    const std::uint64_t aseed = cfg.assignment_seed.value_or(cfg.seed);
    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, cfg.trials));
    std::vector<SweepRow> rows;
    for (std::size_t m : cfg.m_values) {
        const PhotonAssignment base =
            copies ? singleton_assignment(code.n) : make_assignment(code, cfg.strategy, m, aseed);
        for (std::size_t point = 0; point < cfg.p_loss.size(); ++point) {
            const ChannelConfig channel{cfg.p_loss[point]};
            auto work = [&](std::size_t t0, std::size_t t1, Counts& counts) {
                for (std::size_t t = t0; t < t1; ++t) {
                    Rng rng = make_trial_rng(cfg.seed, point, t);
                    if (copies) {
                        ErasurePattern e = sample_loss(base, channel, rng);
                        for (std::size_t c = 0; c < m; ++c) {
                            PauliFrame frame = erasure_to_pauli(e, rng);
                            counts.add(evaluate(ctx, e, frame, cfg.decoder, cfg.metric));
                        }
                    } else if (cfg.resample_assignment) {
                        PhotonAssignment a = make_assignment(code, cfg.strategy, m, rng());
                        counts.add(run_trial(ctx, a, channel, cfg.decoder, cfg.metric, rng));
                    } else {
                        counts.add(run_trial(ctx, base, channel, cfg.decoder, cfg.metric, rng));
                    }
                }
            };
            std::vector<Counts> partial(workers);
            if (workers == 1) {
                work(0, cfg.trials, partial[0]);
            } else {
                std::vector<std::thread> pool;
                std::vector<std::exception_ptr> errors(workers);
                const std::size_t chunk = (cfg.trials + workers - 1) / workers;
                for (std::size_t w = 0; w < workers; ++w) {
                    std::size_t t0 = std::min(cfg.trials, w * chunk);
                    std::size_t t1 = std::min(cfg.trials, t0 + chunk);
                    pool.emplace_back([&, w, t0, t1] {
                        try {
                            work(t0, t1, partial[w]);
                        } catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                }
                for (auto& th : pool) th.join();
                for (auto& err : errors) {
                    if (err) std::rethrow_exception(err);
                }
            }
            Counts total;
            for (const Counts& c : partial) total += c;
            SweepRow row;
            row.p_loss = channel.p_loss;
            row.m = m;
            row.strategy = cfg.strategy;
            row.code = cfg.code_label.empty() ? code.name : cfg.code_label;
            row.decoder = std::string(to_string(cfg.decoder));
            row.seed = cfg.seed;
            row.photons = copies ? code.n : base.num_photons();
            row.logical_errors = total.logical;
            row.decoder_failures = total.failures;
            row.decoder_bugs = total.bugs;
            row.estimate = agresti_coull(total.logical + total.failures, total.trials, cfg.z);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace muxqec
