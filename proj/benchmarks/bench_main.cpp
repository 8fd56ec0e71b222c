// Copyright 2026 The qzoo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qzoo/classify.hpp"
#include "qzoo/measures.hpp"
#include "qzoo/product_search.hpp"
#include "qzoo/zoo.hpp"

namespace {

using namespace qzoo;

void BM_QRelBB84(benchmark::State& state) {
  const auto rho = build("bb84_rho0").state;
  SearchConfig config;
  config.restarts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_rel(rho, config).value);
}
BENCHMARK(BM_QRelBB84)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_QRelUpb(benchmark::State& state) {
  const auto rho = build("rho_upb").state;
  for (auto _ : state) benchmark::DoNotOptimize(q_rel(rho).value);
}
BENCHMARK(BM_QRelUpb)->Unit(benchmark::kMillisecond);

void BM_IsClassical(benchmark::State& state, const char* name) {
  const auto rho = build(name).state;
  for (auto _ : state) benchmark::DoNotOptimize(is_classical(rho).decision);
}
BENCHMARK_CAPTURE(BM_IsClassical, classical_demo, "classical_demo");
BENCHMARK_CAPTURE(BM_IsClassical, bb84_rho0, "bb84_rho0");
BENCHMARK_CAPTURE(BM_IsClassical, werner, "werner");

void BM_ClassifyZoo(benchmark::State& state) {
  const auto rho = build("rho_upb").state;
  for (auto _ : state) benchmark::DoNotOptimize(classify_zoo(rho).verdict);
}
BENCHMARK(BM_ClassifyZoo)->Unit(benchmark::kMillisecond);

void BM_SeesawUpbComplement(benchmark::State& state) {
  const auto shifts = shifts_upb();
  const CMatrix v = shifts.matrix();
  const auto n = static_cast<Eigen::Index>(shifts.profile().total());
  const CMatrix complement = CMatrix::Identity(n, n) - v * v.adjoint();
  ProductSearchConfig config;
  config.restarts = static_cast<std::size_t>(state.range(0));
  config.stop_at_first_hit = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(maximize_product_overlap(complement, shifts.profile(), config).best_overlap);
}
BENCHMARK(BM_SeesawUpbComplement)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
