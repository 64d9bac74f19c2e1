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

#ifndef MUXQEC_CLI_EXPERIMENT_H
#define MUXQEC_CLI_EXPERIMENT_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "muxqec/assignment.h"
#include "muxqec/css_code.h"
#include "muxqec/monte_carlo.h"

namespace muxqec::cli {

/// A configuration problem, already prefixed with "file:line:col: " when it
/// came from a config file. Reported with exit code 2.
struct ConfigFileError : ConfigError {
    using ConfigError::ConfigError;
};

/// Either a build_code() description or inline classical seed matrices.
struct CodeSource {
    std::string spec;
    std::optional<BinaryMatrix> h1;
    std::optional<BinaryMatrix> h2;

    bool inline_matrices() const { return h1.has_value(); }
    std::string label() const;
    CssCode build() const;
};

enum class LogLevel { Quiet, Info };

struct ExperimentSpec {
    CodeSource code;
    SweepConfig sweep;
    std::optional<std::filesystem::path> csv_path;
    std::optional<std::filesystem::path> json_path;
    LogLevel log_level = LogLevel::Info;
};

/// Command-line values; every set field replaces the file value.
struct Overrides {
    std::optional<std::string> code;
    std::optional<std::string> strategy;
    std::optional<std::string> m;
    std::optional<std::string> p_loss;
    std::optional<std::string> decoder;
    std::optional<std::string> metric;
    std::optional<std::string> trials;
    std::optional<std::string> seed;
    std::optional<std::string> assignment_seed;
    std::optional<std::string> workers;
    std::optional<std::string> z;
    std::optional<std::string> csv;
    std::optional<std::string> json;
    bool resample_assignment = false;
    bool quiet = false;
};

/// Reads a YAML experiment file. A results JSON written by `simulate` is also
/// accepted; its embedded "config" object is used.
ExperimentSpec load_experiment(const std::filesystem::path& path);
ExperimentSpec parse_experiment(std::string_view text, std::string_view source = "<config>");

/// Worker count when neither file nor flag sets one: MUXQEC_WORKERS if set,
/// otherwise the hardware concurrency.
std::size_t default_workers();

/// Precedence, lowest first: built-in defaults, MUXQEC_WORKERS, file, flags.
void apply_overrides(ExperimentSpec& spec, const Overrides& o);

/// "0.1,0.2,0.3" or "start:stop:step".
std::vector<double> parse_grid(std::string_view text, std::string_view field = "p_loss");
/// "1,2,4"
std::vector<std::size_t> parse_m_list(std::string_view text, std::string_view field = "m");
std::uint64_t parse_u64(std::string_view text, std::string_view field);
/// Positive integer; names the field in the error.
std::size_t parse_count(std::string_view text, std::string_view field);
double parse_real(std::string_view text, std::string_view field);
std::vector<std::size_t> parse_index_list(std::string_view text, std::string_view field);

/// Resolved configuration in the same schema the YAML reader accepts.
/// Worker count and output paths are left out since they do not change results.
std::string config_json(const ExperimentSpec& spec);

}  // namespace muxqec::cli

#endif  // MUXQEC_CLI_EXPERIMENT_H
