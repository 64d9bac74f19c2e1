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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.h"
#include "cli/experiment.h"

namespace {

using namespace muxqec::cli;

void add_sweep_flags(CLI::App* app, Overrides& o) {
    app->add_option("--code", o.code, "Code description, e.g. toric:10 or random:16x16:w3,3:1:sym");
    app->add_option("--strategy", o.strategy, "Photon assignment strategy");
    app->add_option("--m", o.m, "Multiplexing numbers, comma separated");
    app->add_option("--p-loss", o.p_loss, "Photon loss grid: list or start:stop:step");
    app->add_option("--decoder", o.decoder, "surface-ml, combined or ml-oracle");
    app->add_option("--metric", o.metric, "logical-z, logical-x, logical-any or erf");
    app->add_option("--trials", o.trials, "Trials per grid point");
    app->add_option("--seed", o.seed, "Master seed");
    app->add_option("--assignment-seed", o.assignment_seed, "Seed for assignment construction");
    app->add_flag("--resample-assignment", o.resample_assignment, "Draw a new assignment every trial");
    app->add_option("--z", o.z, "Normal quantile for the intervals");
}

ExperimentSpec resolve(const std::optional<std::string>& config, const Overrides& o, bool default_grid) {
    ExperimentSpec spec;
    if (config) {
        spec = load_experiment(*config);
    } else {
        spec.sweep.workers = default_workers();
        if (default_grid) spec.sweep.p_loss = {0.0};
    }
    apply_overrides(spec, o);
    if (spec.code.spec.empty() && !spec.code.inline_matrices()) {
        throw muxqec::ConfigError("no code given (config key 'code' or --code)");
    }
    if (spec.sweep.p_loss.empty()) throw muxqec::ConfigError("no p_loss grid given (config key 'p_loss' or --p-loss)");
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-loss erasure simulations for multiplexed CSS codes", "muxqec"};
    app.set_version_flag("--version", "muxqec 0.1.0");
    app.require_subcommand(1);

    std::optional<std::string> sim_config;
    Overrides sim;
    auto* simulate = app.add_subcommand("simulate", "Run a sweep and write CSV/JSON results");
    simulate->add_option("config", sim_config, "YAML config, or a results JSON to rerun");
    add_sweep_flags(simulate, sim);
    simulate->add_option("--workers", sim.workers, "Worker threads (default: $MUXQEC_WORKERS or all cores)");
    simulate->add_option("--csv", sim.csv, "CSV output path (default: stdout)");
    simulate->add_option("--json", sim.json, "JSON output path");
    simulate->add_flag("-q,--quiet", sim.quiet, "No summary table");

    std::string info_code;
    bool info_dump = false;
    auto* code_info = app.add_subcommand("code-info", "Print code parameters");
    code_info->add_option("code", info_code, "Code description")->required();
    code_info->add_flag("--dump", info_dump, "Also print H_X and H_Z in the text matrix format");

    AssignRequest assign_req;
    std::string assign_code;
    std::optional<std::string> assign_m;
    std::optional<std::string> assign_seed;
    std::optional<std::string> assign_out;
    auto* assign = app.add_subcommand("assign", "Print a photon assignment as JSON");
    assign->add_option("--code", assign_code, "Code description")->required();
    assign->add_option("--strategy", assign_req.strategy, "Assignment strategy")->required();
    assign->add_option("--m", assign_m, "Qubits per photon")->required();
    assign->add_option("--seed", assign_seed, "Assignment seed (default 1)");
    assign->add_option("--output", assign_out, "Output path (default: stdout)");

    std::optional<std::string> one_config;
    Overrides one;
    std::optional<std::string> point;
    std::optional<std::string> trial;
    std::optional<std::string> copy;
    std::optional<std::string> erasure;
    std::optional<std::string> error_x;
    std::optional<std::string> error_z;
    auto* decode_one = app.add_subcommand("decode-one", "Replay one trial with a decoder trace");
    decode_one->add_option("config", one_config, "YAML config, or a results JSON");
    add_sweep_flags(decode_one, one);
    decode_one->add_option("--point", point, "Grid point index (default 0)");
    decode_one->add_option("--trial", trial, "Trial index (default 0)");
    decode_one->add_option("--copy", copy, "Codeword copy for the copies strategy (default 0)");
    decode_one->add_option("--erasure", erasure, "Explicit erased qubits, e.g. 0,3-5");
    decode_one->add_option("--error-x", error_x, "Explicit X error support");
    decode_one->add_option("--error-z", error_z, "Explicit Z error support");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    Streams io{std::cout, std::cerr};
    if (*simulate) {
        std::optional<ExperimentSpec> spec;
        int rc = guarded([&] {
            spec = resolve(sim_config, sim, false);
            return kExitOk;
        }, std::cerr);
        return rc != kExitOk ? rc : cmd_simulate(*spec, io);
    }
    if (*code_info) {
        return cmd_code_info(CodeSource{info_code, std::nullopt, std::nullopt}, info_dump, io);
    }
    if (*assign) {
        int rc = guarded([&] {
            assign_req.code = CodeSource{assign_code, std::nullopt, std::nullopt};
            assign_req.m = parse_count(*assign_m, "--m");
            if (assign_seed) assign_req.seed = parse_u64(*assign_seed, "--seed");
            if (assign_out) assign_req.output = *assign_out;
            return kExitOk;
        }, std::cerr);
        return rc != kExitOk ? rc : cmd_assign(assign_req, io);
    }
    DecodeOneRequest req;
    int rc = guarded([&] {
        req.spec = resolve(one_config, one, true);
        if (point) req.point = parse_u64(*point, "--point");
        if (trial) req.trial = parse_u64(*trial, "--trial");
        if (copy) req.copy = parse_u64(*copy, "--copy");
        if (erasure) req.erasure = parse_index_list(*erasure, "--erasure");
        if (error_x) req.error_x = parse_index_list(*error_x, "--error-x");
        if (error_z) req.error_z = parse_index_list(*error_z, "--error-z");
        return kExitOk;
    }, std::cerr);
    return rc != kExitOk ? rc : cmd_decode_one(req, io);
}
