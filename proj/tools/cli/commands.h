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

#ifndef MUXQEC_CLI_COMMANDS_H
#define MUXQEC_CLI_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "experiment.h"

namespace muxqec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

/// Runs `body`, mapping configuration errors (std::invalid_argument and
/// subclasses, YAML problems) to exit 2 and anything else to exit 1.
int guarded(const std::function<int()>& body, std::ostream& err);

/// Validates everything, runs the sweep, then writes CSV and JSON atomically.
/// Without a CSV path the CSV goes to `out`; the summary table goes to `err`.
int cmd_simulate(const ExperimentSpec& spec, Streams io);

int cmd_code_info(const CodeSource& code, bool dump, Streams io);

struct AssignRequest {
    CodeSource code;
    std::string strategy = "random";
    std::size_t m = 1;
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> output;
};

/// Photon partition as JSON, to `output` or `out`.
int cmd_assign(const AssignRequest& req, Streams io);

struct DecodeOneRequest {
    ExperimentSpec spec;
    /// Index into spec.sweep.p_loss; also the rng stream.
    std::size_t point = 0;
    std::size_t trial = 0;
    /// Which of the m copies to show for the copies strategy.
    std::size_t copy = 0;
    /// Replace the sampled erasure; the frame is then drawn on it unless given.
    std::optional<std::vector<std::size_t>> erasure;
    std::optional<std::vector<std::size_t>> error_x;
    std::optional<std::vector<std::size_t>> error_z;
};

/// Replays one trial of a sweep (first m value) with a full decoder trace.
int cmd_decode_one(const DecodeOneRequest& req, Streams io);

}  // namespace muxqec::cli

#endif  // MUXQEC_CLI_COMMANDS_H
