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


#include <benchmark/benchmark.h>

#include "muxqec/code_spec.h"
#include "muxqec/decoder.h"
#include "muxqec/peeling.h"

namespace {

using namespace muxqec;

struct Instance {
    ErasurePattern erasure;
    Syndromes syndromes;
};

std::vector<Instance> instances(const CssCode& c, double p, std::size_t count) {
    std::vector<Instance> out;
    PhotonAssignment a = singleton_assignment(c.n);
    for (std::size_t t = 0; t < count; ++t) {
        Rng rng = make_trial_rng(1, 0, t);
        ErasurePattern e = sample_loss(a, {p}, rng);
        PauliFrame f = erasure_to_pauli(e, rng);
        out.push_back({e, measure(c, f)});
    }
    return out;
}

void run_decoder(benchmark::State& state, const std::string& spec, DecoderKind kind) {
    const CssCode c = build_code(spec);
    const DecodingContext ctx(c);
    const double p = static_cast<double>(state.range(0)) / 100.0;
    const auto inst = instances(c, p, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        const Instance& x = inst[i++ % inst.size()];
        benchmark::DoNotOptimize(decode(kind, ctx, x.erasure, x.syndromes));
    }
}

void BM_SurfaceMl(benchmark::State& state) { run_decoder(state, "toric:" + std::to_string(state.range(1)), DecoderKind::SurfaceMl); }
BENCHMARK(BM_SurfaceMl)->ArgsProduct({{20, 40}, {10, 20, 40}});

void BM_CombinedToric(benchmark::State& state) { run_decoder(state, "toric:10", DecoderKind::Combined); }
BENCHMARK(BM_CombinedToric)->Arg(20)->Arg(40);

void BM_CombinedHgp(benchmark::State& state) { run_decoder(state, "random:16x16:w3,3:1:sym", DecoderKind::Combined); }
BENCHMARK(BM_CombinedHgp)->Arg(10)->Arg(25);

void BM_MlOracleHgp(benchmark::State& state) { run_decoder(state, "random:16x16:w3,3:1:sym", DecoderKind::MlOracle); }
BENCHMARK(BM_MlOracleHgp)->Arg(10)->Arg(25);

void BM_Peel(benchmark::State& state) {
    const CssCode c = toric(20);
    const DecodingContext ctx(c);
    const auto inst = instances(c, 0.3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        const Instance& x = inst[i++ % inst.size()];
        benchmark::DoNotOptimize(peel(ctx.graph(ErrorType::Z), x.erasure, x.syndromes.x_checks));
    }
}
BENCHMARK(BM_Peel);

}  // namespace

BENCHMARK_MAIN();
