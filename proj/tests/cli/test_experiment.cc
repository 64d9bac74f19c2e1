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


#include <cstdlib>

#include <gtest/gtest.h>

#include "cli/experiment.h"

namespace muxqec::cli {
namespace {

const std::string kConfigs = std::string(MUXQEC_FIXTURES) + "/configs";

std::string error_of(std::string_view text) {
    try {
        parse_experiment(text, "cfg.yaml");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

TEST(ParseExperiment, MinimalUsesDefaults) {
    ExperimentSpec s = parse_experiment("code: toric:4\np_loss: 0.1\n");
    EXPECT_EQ(s.code.spec, "toric:4");
    EXPECT_EQ(s.sweep.p_loss, (std::vector<double>{0.1}));
    EXPECT_EQ(s.sweep.strategy, "random");
    EXPECT_EQ(s.sweep.m_values, (std::vector<std::size_t>{1}));
    EXPECT_EQ(s.sweep.decoder, DecoderKind::SurfaceMl);
    EXPECT_EQ(s.sweep.metric, Metric::LogicalZ);
    EXPECT_DOUBLE_EQ(s.sweep.z, 1.96);
    EXPECT_FALSE(s.sweep.assignment_seed.has_value());
    EXPECT_EQ(s.sweep.code_label, "toric:4");
}

TEST(ParseExperiment, ToricSweepFile) {
    ExperimentSpec s = load_experiment(kConfigs + "/toric_sweep.yaml");
    EXPECT_EQ(s.sweep.m_values, (std::vector<std::size_t>{1, 2, 4}));
    ASSERT_EQ(s.sweep.p_loss.size(), 11u);
    EXPECT_DOUBLE_EQ(s.sweep.p_loss.front(), 0.3);
    EXPECT_DOUBLE_EQ(s.sweep.p_loss.back(), 0.5);
    EXPECT_EQ(s.sweep.trials, 10000u);
    EXPECT_EQ(s.sweep.seed, 7u);
}

TEST(ParseExperiment, AllKeys) {
    ExperimentSpec s = parse_experiment(R"(code: toric:6
strategy: max-pair
m: "2"
p_loss: "0.1:0.3:0.1"
trials: 50
seed: 9
assignment_seed: 4
resample_assignment: true
decoder: ml-oracle
metric: logical-any
z: 2.5
workers: 3
log_level: quiet
output: {csv: a.csv, json: b.json}
)");
    EXPECT_EQ(s.sweep.strategy, "max-pair");
    EXPECT_EQ(s.sweep.m_values, (std::vector<std::size_t>{2}));
    EXPECT_EQ(s.sweep.p_loss.size(), 3u);
    EXPECT_EQ(s.sweep.assignment_seed, 4u);
    EXPECT_TRUE(s.sweep.resample_assignment);
    EXPECT_EQ(s.sweep.decoder, DecoderKind::MlOracle);
    EXPECT_EQ(s.sweep.metric, Metric::LogicalAny);
    EXPECT_DOUBLE_EQ(s.sweep.z, 2.5);
    EXPECT_EQ(s.sweep.workers, 3u);
    EXPECT_EQ(s.log_level, LogLevel::Quiet);
    EXPECT_EQ(s.csv_path->string(), "a.csv");
    EXPECT_EQ(s.json_path->string(), "b.json");
}

TEST(ParseExperiment, InlineMatrices) {
    ExperimentSpec s = load_experiment(kConfigs + "/small_hgp.yaml");
    ASSERT_TRUE(s.code.inline_matrices());
    CssCode c = s.code.build();
    EXPECT_EQ(c.n, 20u);
    EXPECT_EQ(s.code.label(), "hgp:inline:2x4:2x4");
    ExperimentSpec t = parse_experiment("code: {h1: \"2 3\\n110\\n011\\n\", h2: T}\np_loss: 0\n");
    EXPECT_EQ(t.code.h2->rows(), 3u);
    EXPECT_EQ(t.code.build().n, 12u);
}

TEST(ParseExperiment, NegativeTrialsNamesFieldAndLine) {
    EXPECT_EQ(error_of("code: toric:4\np_loss: [0.1]\ntrials: -5\n"),
              "cfg.yaml:3:9: trials: must be a positive integer, got -5");
    EXPECT_THROW(load_experiment(kConfigs + "/negative_trials.yaml"), ConfigFileError);
}

TEST(ParseExperiment, LineAnchoredErrors) {
    EXPECT_EQ(error_of("code: toric:4\np_loss: 0.1\nbogus: 1\n"), "cfg.yaml:3:1: unknown key 'bogus'");
    EXPECT_EQ(error_of("code: toric:4\np_loss: [0.1, 1.5]\n"), "cfg.yaml:2:9: p_loss: 1.5 outside [0, 1]");
    EXPECT_EQ(error_of("code: toric:4\np_loss: 0.1\ndecoder: magic\n"),
              "cfg.yaml:3:10: decoder: unknown decoder 'magic' (surface-ml, combined, ml-oracle)");
    EXPECT_EQ(error_of("p_loss: 0.1\n"), "cfg.yaml:1:1: missing required key 'code'");
    EXPECT_EQ(error_of("code: toric:4\n"), "cfg.yaml:1:1: missing required key 'p_loss'");
    EXPECT_NE(error_of("code: toric:4\np_loss: [0.1\n").find("cfg.yaml:"), std::string::npos);
    EXPECT_EQ(error_of("code: {h1: [\"12\"]}\np_loss: 0\n").rfind("cfg.yaml:1:", 0), 0u);
    EXPECT_EQ(error_of("code: toric:4\np_loss: 0\noutput: {pdf: x}\n"), "cfg.yaml:3:10: output: unknown key 'pdf'");
}

TEST(ParseExperiment, RunsFromResultsJson) {
    ExperimentSpec s = parse_experiment("code: toric:5\np_loss: [0.2, 0.4]\nm: [1, 2]\nseed: 11\n");
    std::string doc = R"({"config": )" + config_json(s) + R"(, "rows": []})";
    ExperimentSpec back = parse_experiment(doc);
    EXPECT_EQ(back.code.spec, "toric:5");
    EXPECT_EQ(back.sweep.p_loss, s.sweep.p_loss);
    EXPECT_EQ(back.sweep.m_values, s.sweep.m_values);
    EXPECT_EQ(back.sweep.seed, 11u);
    EXPECT_EQ(back.sweep.assignment_seed, 11u);
    EXPECT_EQ(config_json(back), config_json(s));
}

TEST(ParseExperiment, InlineConfigRoundTrips) {
    ExperimentSpec s = load_experiment(kConfigs + "/small_hgp.yaml");
    ExperimentSpec back = parse_experiment(config_json(s));
    EXPECT_EQ(*back.code.h1, *s.code.h1);
    EXPECT_EQ(*back.code.h2, *s.code.h2);
}

TEST(Overrides, FlagsBeatFile) {
    ExperimentSpec s = parse_experiment("code: toric:4\np_loss: 0.1\ntrials: 10\nworkers: 2\n");
    Overrides o;
    o.code = "toric:6";
    o.trials = "25";
    o.p_loss = "0.1,0.2";
    o.m = "1,2";
    o.workers = "5";
    o.assignment_seed = "8";
    o.quiet = true;
    apply_overrides(s, o);
    EXPECT_EQ(s.code.spec, "toric:6");
    EXPECT_EQ(s.sweep.code_label, "toric:6");
    EXPECT_EQ(s.sweep.trials, 25u);
    EXPECT_EQ(s.sweep.p_loss.size(), 2u);
    EXPECT_EQ(s.sweep.workers, 5u);
    EXPECT_EQ(s.sweep.assignment_seed, 8u);
    EXPECT_EQ(s.log_level, LogLevel::Quiet);
    Overrides bad;
    bad.trials = "-1";
    EXPECT_THROW(apply_overrides(s, bad), ConfigError);
}

TEST(Overrides, WorkerEnvironmentIsTheDefault) {
    ::setenv("MUXQEC_WORKERS", "3", 1);
    EXPECT_EQ(default_workers(), 3u);
    EXPECT_EQ(parse_experiment("code: toric:4\np_loss: 0.1\n").sweep.workers, 3u);
    EXPECT_EQ(parse_experiment("code: toric:4\np_loss: 0.1\nworkers: 2\n").sweep.workers, 2u);
    ::setenv("MUXQEC_WORKERS", "zero", 1);
    EXPECT_THROW(default_workers(), ConfigError);
    ::unsetenv("MUXQEC_WORKERS");
    EXPECT_GE(default_workers(), 1u);
}

TEST(Parsers, Values) {
    EXPECT_EQ(parse_grid("0.1, 0.2"), (std::vector<double>{0.1, 0.2}));
    EXPECT_EQ(parse_grid("0:1:0.25").size(), 5u);
    EXPECT_THROW(parse_grid("0:1"), ConfigError);
    EXPECT_THROW(parse_grid("x"), ConfigError);
    EXPECT_EQ(parse_m_list("1,2, 4"), (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_THROW(parse_m_list("0"), ConfigError);
    EXPECT_EQ(parse_u64("0", "seed"), 0u);
    EXPECT_THROW(parse_u64("-1", "seed"), ConfigError);
    EXPECT_THROW(parse_count("3x", "trials"), ConfigError);
    EXPECT_DOUBLE_EQ(parse_real(" 2.5 ", "z"), 2.5);
    EXPECT_EQ(parse_index_list("5,0,3-4", "e"), (std::vector<std::size_t>{0, 3, 4, 5}));
    EXPECT_TRUE(parse_index_list("", "e").empty());
    EXPECT_THROW(parse_index_list("4-2", "e"), ConfigError);
}

}  // namespace
}  // namespace muxqec::cli
