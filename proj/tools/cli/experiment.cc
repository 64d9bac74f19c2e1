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

#include "experiment.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include "muxqec/code_spec.h"

namespace muxqec::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

BinaryMatrix matrix_from_text(std::string_view text, std::string_view field) {
    try {
        return BinaryMatrix::parse_text(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(fmt::format("{}: {}", field, e.what()));
    }
}

/// Wraps a YAML document so every error names its source position.
class Reader {
   public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& node, std::string_view msg) const {
        const YAML::Mark mark = node.Mark();
        if (mark.line < 0) throw ConfigFileError(fmt::format("{}: {}", source_, msg));
        throw ConfigFileError(fmt::format("{}:{}:{}: {}", source_, mark.line + 1, mark.column + 1, msg));
    }

    std::string text(const YAML::Node& node, std::string_view field) const {
        if (!node.IsScalar()) fail(node, fmt::format("{}: expected a scalar value", field));
        return node.Scalar();
    }

    template <typename F>
    auto convert(const YAML::Node& node, std::string_view field, F&& parse) const {
        std::string value = text(node, field);
        try {
            return parse(value, field);
        } catch (const ConfigError& e) {
            fail(node, e.what());
        }
    }

    bool boolean(const YAML::Node& node, std::string_view field) const {
        std::string v = text(node, field);
        if (v == "true" || v == "yes" || v == "on") return true;
        if (v == "false" || v == "no" || v == "off") return false;
        fail(node, fmt::format("{}: expected true or false, got '{}'", field, v));
    }

    BinaryMatrix matrix(const YAML::Node& node, std::string_view field) const {
        try {
            if (node.IsSequence()) {
                std::vector<std::string> rows;
                for (const auto& r : node) rows.push_back(text(r, field));
                return BinaryMatrix::from_rows(rows);
            }
            return matrix_from_text(text(node, field), field);
        } catch (const ConfigFileError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            fail(node, fmt::format("{}: {}", field, e.what()));
        }
    }

   private:
    std::string source_;
};

void read_code(const Reader& rd, const YAML::Node& node, CodeSource& code) {
    if (node.IsScalar()) {
        code = CodeSource{node.Scalar(), std::nullopt, std::nullopt};
        return;
    }
    if (!node.IsMap()) rd.fail(node, "code: expected a code description or a map with h1 and h2");
    for (const auto& kv : node) {
        const std::string key = kv.first.Scalar();
        if (key != "h1" && key != "h2") rd.fail(kv.first, fmt::format("code: unknown key '{}'", key));
    }
    if (!node["h1"]) rd.fail(node, "code: missing h1");
    CodeSource out;
    out.h1 = rd.matrix(node["h1"], "code.h1");
    if (!node["h2"] || (node["h2"].IsScalar() && node["h2"].Scalar() == "T")) {
        out.h2 = out.h1->transpose();
    } else {
        out.h2 = rd.matrix(node["h2"], "code.h2");
    }
    code = std::move(out);
}

std::vector<double> read_grid(const Reader& rd, const YAML::Node& node) {
    std::vector<double> grid;
    try {
        if (node.IsScalar()) {
            grid = rd.convert(node, "p_loss", parse_grid);
        } else if (node.IsSequence()) {
            for (const auto& v : node) grid.push_back(rd.convert(v, "p_loss", parse_real));
        } else if (node.IsMap()) {
            for (const auto& kv : node) {
                const std::string key = kv.first.Scalar();
                if (key != "start" && key != "stop" && key != "step") {
                    rd.fail(kv.first, fmt::format("p_loss: unknown key '{}'", key));
                }
            }
            for (const char* key : {"start", "stop", "step"}) {
                if (!node[key]) rd.fail(node, fmt::format("p_loss: missing {}", key));
            }
            grid = linear_grid(rd.convert(node["start"], "p_loss.start", parse_real),
                               rd.convert(node["stop"], "p_loss.stop", parse_real),
                               rd.convert(node["step"], "p_loss.step", parse_real));
        } else {
            rd.fail(node, "p_loss: expected a number, a list or {start, stop, step}");
        }
    } catch (const ConfigFileError&) {
        throw;
    } catch (const ConfigError& e) {
        rd.fail(node, e.what());
    }
    if (grid.empty()) rd.fail(node, "p_loss: grid is empty");
    for (double p : grid) {
        if (!(p >= 0.0 && p <= 1.0)) rd.fail(node, fmt::format("p_loss: {} outside [0, 1]", p));
    }
    return grid;
}

std::vector<std::size_t> read_m(const Reader& rd, const YAML::Node& node) {
    std::vector<std::size_t> out;
    if (node.IsSequence()) {
        for (const auto& v : node) out.push_back(rd.convert(v, "m", parse_count));
    } else {
        out = rd.convert(node, "m", parse_m_list);
    }
    if (out.empty()) rd.fail(node, "m: list is empty");
    return out;
}

DecoderKind decoder_from(std::string_view name, std::string_view field) {
    if (auto d = parse_decoder(name)) return *d;
    throw ConfigError(fmt::format("{}: unknown decoder '{}' (surface-ml, combined, ml-oracle)", field, name));
}

Metric metric_from(std::string_view name, std::string_view field) {
    if (auto m = parse_metric(name)) return *m;
    throw ConfigError(fmt::format("{}: unknown metric '{}' (logical-z, logical-x, logical-any, erf)", field, name));
}

ExperimentSpec read_experiment(const Reader& rd, const YAML::Node& root_in) {
    YAML::Node root = root_in;
    if (root.IsMap() && root["config"] && root["rows"]) root = root["config"];
    if (!root.IsMap()) rd.fail(root, "expected a map of settings");
    ExperimentSpec spec;
    spec.sweep.workers = default_workers();
    bool have_code = false;
    for (const auto& kv : root) {
        const std::string key = kv.first.Scalar();
        const YAML::Node& v = kv.second;
        if (key == "code") {
            read_code(rd, v, spec.code);
            have_code = true;
        } else if (key == "strategy") {
            spec.sweep.strategy = rd.text(v, key);
        } else if (key == "m") {
            spec.sweep.m_values = read_m(rd, v);
        } else if (key == "p_loss") {
            spec.sweep.p_loss = read_grid(rd, v);
        } else if (key == "trials") {
            spec.sweep.trials = rd.convert(v, key, parse_count);
        } else if (key == "seed") {
            spec.sweep.seed = rd.convert(v, key, parse_u64);
        } else if (key == "assignment_seed") {
            if (!v.IsNull()) spec.sweep.assignment_seed = rd.convert(v, key, parse_u64);
        } else if (key == "resample_assignment") {
            spec.sweep.resample_assignment = rd.boolean(v, key);
        } else if (key == "decoder") {
            spec.sweep.decoder = rd.convert(v, key, decoder_from);
        } else if (key == "metric") {
            spec.sweep.metric = rd.convert(v, key, metric_from);
        } else if (key == "z") {
            spec.sweep.z = rd.convert(v, key, parse_real);
            if (spec.sweep.z < 0.0) rd.fail(v, "z: must be non-negative");
        } else if (key == "workers") {
            spec.sweep.workers = rd.convert(v, key, parse_count);
        } else if (key == "log_level") {
            std::string level = rd.text(v, key);
            if (level == "quiet") {
                spec.log_level = LogLevel::Quiet;
            } else if (level == "info") {
                spec.log_level = LogLevel::Info;
            } else {
                rd.fail(v, fmt::format("log_level: expected quiet or info, got '{}'", level));
            }
        } else if (key == "output") {
            if (!v.IsMap()) rd.fail(v, "output: expected a map with csv and/or json");
            for (const auto& out : v) {
                const std::string k = out.first.Scalar();
                if (k == "csv") {
                    spec.csv_path = rd.text(out.second, "output.csv");
                } else if (k == "json") {
                    spec.json_path = rd.text(out.second, "output.json");
                } else {
                    rd.fail(out.first, fmt::format("output: unknown key '{}'", k));
                }
            }
        } else {
            rd.fail(kv.first, fmt::format("unknown key '{}'", key));
        }
    }
    if (!have_code) rd.fail(root, "missing required key 'code'");
    if (spec.sweep.p_loss.empty()) rd.fail(root, "missing required key 'p_loss'");
    spec.sweep.code_label = spec.code.label();
    return spec;
}

}  // namespace

std::string CodeSource::label() const {
    if (!inline_matrices()) return spec;
    return fmt::format("hgp:inline:{}x{}:{}x{}", h1->rows(), h1->cols(), h2->rows(), h2->cols());
}

CssCode CodeSource::build() const {
    if (!inline_matrices()) return build_code(spec);
    CssCode code = hgp(*h1, *h2);
    code.name = label();
    return code;
}

ExperimentSpec load_experiment(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigFileError(fmt::format("{}: cannot open config file", path.string()));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_experiment(buf.str(), path.string());
}

ExperimentSpec parse_experiment(std::string_view text, std::string_view source) {
    Reader rd{std::string(source)};
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ConfigFileError(fmt::format("{}:{}:{}: {}", source, e.mark.line + 1, e.mark.column + 1, e.msg));
    }
    return read_experiment(rd, root);
}

std::size_t default_workers() {
    if (const char* env = std::getenv("MUXQEC_WORKERS"); env && *env) {
        return parse_count(env, "MUXQEC_WORKERS");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void apply_overrides(ExperimentSpec& spec, const Overrides& o) {
    if (o.code) {
        spec.code = CodeSource{*o.code, std::nullopt, std::nullopt};
        spec.sweep.code_label = spec.code.label();
    }
    if (o.strategy) spec.sweep.strategy = *o.strategy;
    if (o.m) spec.sweep.m_values = parse_m_list(*o.m, "--m");
    if (o.p_loss) spec.sweep.p_loss = parse_grid(*o.p_loss, "--p-loss");
    if (o.decoder) spec.sweep.decoder = decoder_from(*o.decoder, "--decoder");
    if (o.metric) spec.sweep.metric = metric_from(*o.metric, "--metric");
    if (o.trials) spec.sweep.trials = parse_count(*o.trials, "--trials");
    if (o.seed) spec.sweep.seed = parse_u64(*o.seed, "--seed");
    if (o.assignment_seed) spec.sweep.assignment_seed = parse_u64(*o.assignment_seed, "--assignment-seed");
    if (o.workers) spec.sweep.workers = parse_count(*o.workers, "--workers");
    if (o.z) {
        spec.sweep.z = parse_real(*o.z, "--z");
        if (spec.sweep.z < 0.0) throw ConfigError("--z: must be non-negative");
    }
    if (o.csv) spec.csv_path = *o.csv;
    if (o.json) spec.json_path = *o.json;
    if (o.resample_assignment) spec.sweep.resample_assignment = true;
    if (o.quiet) spec.log_level = LogLevel::Quiet;
}

std::vector<double> parse_grid(std::string_view text, std::string_view field) {
    auto range = split(text, ':');
    if (range.size() == 3) {
        return linear_grid(parse_real(range[0], field), parse_real(range[1], field), parse_real(range[2], field));
    }
    if (range.size() != 1) throw ConfigError(fmt::format("{}: expected a list or start:stop:step", field));
    std::vector<double> out;
    for (auto v : split(text, ',')) out.push_back(parse_real(v, field));
    for (double p : out) {
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(fmt::format("{}: {} outside [0, 1]", field, p));
    }
    return out;
}

std::vector<std::size_t> parse_m_list(std::string_view text, std::string_view field) {
    std::vector<std::size_t> out;
    for (auto v : split(text, ',')) out.push_back(parse_count(v, field));
    return out;
}

std::uint64_t parse_u64(std::string_view text, std::string_view field) {
    text = trim(text);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(fmt::format("{}: expected a non-negative integer, got '{}'", field, text));
    }
    return v;
}

std::size_t parse_count(std::string_view text, std::string_view field) {
    text = trim(text);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(fmt::format("{}: expected a positive integer, got '{}'", field, text));
    }
    if (v < 1) throw ConfigError(fmt::format("{}: must be a positive integer, got {}", field, v));
    return static_cast<std::size_t>(v);
}

double parse_real(std::string_view text, std::string_view field) {
    std::string s(trim(text));
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw ConfigError(fmt::format("{}: expected a number, got '{}'", field, s));
    }
    return v;
}

std::vector<std::size_t> parse_index_list(std::string_view text, std::string_view field) {
    std::vector<std::size_t> out;
    if (trim(text).empty()) return out;
    for (auto v : split(text, ',')) {
        auto range = split(v, '-');
        if (range.size() == 2) {
            std::uint64_t a = parse_u64(range[0], field);
            std::uint64_t b = parse_u64(range[1], field);
            if (b < a) throw ConfigError(fmt::format("{}: empty range '{}'", field, v));
            for (std::uint64_t i = a; i <= b; ++i) out.push_back(i);
        } else {
            out.push_back(parse_u64(v, field));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string config_json(const ExperimentSpec& spec) {
    nlohmann::ordered_json j;
    if (spec.code.inline_matrices()) {
        j["code"] = {{"h1", spec.code.h1->to_text()}, {"h2", spec.code.h2->to_text()}};
    } else {
        j["code"] = spec.code.spec;
    }
    const SweepConfig& s = spec.sweep;
    j["strategy"] = s.strategy;
    j["m"] = s.m_values;
    j["p_loss"] = s.p_loss;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["assignment_seed"] = s.assignment_seed.value_or(s.seed);
    j["resample_assignment"] = s.resample_assignment;
    j["decoder"] = std::string(to_string(s.decoder));
    j["metric"] = std::string(to_string(s.metric));
    j["z"] = s.z;
    return j.dump();
}

}  // namespace muxqec::cli
