// SPDX-License-Identifier: Apache-2.0
//
// dmaswipt: DMA-aided multiuser MISO power-splitting SWIPT optimization
// Copyright (C) 2026 The dmaswipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <random>

#include "dmaswipt/alternating_optimizer.hpp"
#include "dmaswipt/dma_weight_optimizer.hpp"
#include "dmaswipt/lorentzian_mapping.hpp"
#include "dmaswipt/precoder_optimizer.hpp"
#include "dmaswipt/scenario.hpp"

using namespace dmaswipt;

namespace {

ScenarioConfig scaled(int n_cols) {
  ScenarioConfig c = ScenarioConfig::desk_scale();
  c.geometry.n_cols = n_cols;
  return c;
}

DmaWeights random_weights(std::mt19937_64& rng, int nr, int nc) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  CVec q(nr * nc);
  for (int n = 0; n < q.size(); ++n) q(n) = lorentzian_weight(u(rng));
  return DmaWeights::lorentzian(q, nr, nc);
}

void BM_PrecoderSolve(benchmark::State& state) {
  const auto c = scaled(static_cast<int>(state.range(0)));
  const SystemModel sys = c.system(c.resolved_users());
  std::mt19937_64 rng(1);
  const auto q = random_weights(rng, sys.n_rows, sys.n_cols);
  PrecoderProblemInputs in;
  in.gram = precoder_gram(sys.h, q);
  in.channels = effective_channels(sys.channels, sys.h, q);
  in.targets = sys.targets;
  in.rf_threshold = sys.rf_threshold;
  in.mode = PsMode::optimal();
  for (auto _ : state) benchmark::DoNotOptimize(optimize_precoder_ps(in).objective);
}
BENCHMARK(BM_PrecoderSolve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_DmaSolve(benchmark::State& state) {
  const auto c = scaled(static_cast<int>(state.range(0)));
  const SystemModel sys = c.system(c.resolved_users());
  std::mt19937_64 rng(2);
  const auto q = random_weights(rng, sys.n_rows, sys.n_cols);
  PrecoderProblemInputs pin{precoder_gram(sys.h, q), effective_channels(sys.channels, sys.h, q),
                            sys.targets, sys.rf_threshold, PsMode::equal()};
  const auto pre = optimize_precoder_ps(pin);
  DmaProblemInputs in{pre.precoders, pre.rho, sys.channels, sys.h, sys.n_rows, sys.n_cols,
                      sys.targets, sys.rf_threshold};
  for (auto _ : state) benchmark::DoNotOptimize(optimize_dma_weights(in).objective);
}
BENCHMARK(BM_DmaSolve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Arlch(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  const int size = static_cast<int>(state.range(0));
  CVec v(size);
  for (int i = 0; i < size; ++i) v(i) = {n(rng), n(rng)};
  const auto q = DmaWeights::unconstrained(v, 1, size);
  for (auto _ : state) benchmark::DoNotOptimize(map_arlch(q).radius);
}
BENCHMARK(BM_Arlch)->Arg(32)->Arg(512);

void BM_AlternatingRun(benchmark::State& state) {
  const auto c = scaled(8);
  const SystemModel sys = c.system(c.resolved_users());
  auto cfg = c.optimizer(parse_scheme_variant("arlch"));
  for (auto _ : state) benchmark::DoNotOptimize(run_alternating(sys, cfg).best_power);
}
BENCHMARK(BM_AlternatingRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
