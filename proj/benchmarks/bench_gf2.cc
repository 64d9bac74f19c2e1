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
#include "muxqec/gf2.h"

namespace {

using namespace muxqec;

void BM_Rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    BinaryMatrix m = random_matrix(n, n, 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_Solve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    BinaryMatrix m = random_matrix(n / 2, n, 0.1, 2);
    BitVector x(n);
    for (std::size_t i = 0; i < n; i += 3) x.set(i);
    BitVector s = m * x;
    for (auto _ : state) benchmark::DoNotOptimize(solve(m, s));
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(128, 1024);

void BM_Hgp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_code("random:16x16:w3,3:1:sym"));
}
BENCHMARK(BM_Hgp);

}  // namespace
