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

#ifndef DMASWIPT_EXPERIMENTS_HPP
#define DMASWIPT_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dmaswipt/alternating_optimizer.hpp"
#include "dmaswipt/scenario.hpp"

namespace dmaswipt {

// One line of a result table: one (point, realization, scheme) run.
struct ResultRow {
  std::string scenario_id;
  std::uint64_t seed = 0;
  std::string scheme;
  std::string ps_mode;
  int users = 0;
  double sweep_value = 0.0;
  double ptx_dbm = 0.0;  // NaN when infeasible
  bool feasible = false;
  std::vector<double> sinr_margins;
  std::vector<double> eh_margins;
  int iterations = 0;
  double wall_clock_s = -1.0;  // negative: not recorded

  // Not serialized.
  bool solver_failure = false;
};

struct ExperimentOptions {
  int parallel = 1;
  bool timing = false;
};

// splitmix64-based derivation of per-task streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0);

// Runs fn(0..n-1) on up to 'threads' workers. Exceptions are rethrown
// after all workers stop, lowest task index first.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

// Runs one variant and records its full trace as well.
struct SingleRun {
  ResultRow row;
  RunRecord record;
};

SingleRun run_single(const ScenarioConfig& config,
                     const ExperimentOptions& options);

std::vector<ResultRow> run_eh_sweep(const ScenarioConfig& config,
                                    const ExperimentOptions& options);
std::vector<ResultRow> run_separation_sweep(const ScenarioConfig& config,
                                            const ExperimentOptions& options);
std::vector<ResultRow> run_sinr_montecarlo(const ScenarioConfig& config,
                                           const ExperimentOptions& options);

// Users of Monte Carlo realization r: radius uniform in the configured
// annulus, angle from boresight uniform in (-pi/2, pi/2), in the xz-plane.
std::vector<UserPosition> sample_users(const ScenarioConfig& config,
                                       std::uint64_t realization_seed);

struct SummaryRow {
  double sweep_value = 0.0;
  std::string scheme;  // variant label
  double mean_ptx_dbm = 0.0;
  int realizations = 0;  // used in the mean
  int excluded = 0;      // realizations where some variant was infeasible
};

// Per sweep value, averages P_Tx [dBm] of every variant over the
// realizations in which all variants are feasible.
std::vector<SummaryRow> summarize_montecarlo(const std::vector<ResultRow>& rows);

enum class TableOutcome { Ok, AllInfeasible, SolverFailure };
TableOutcome classify(const std::vector<ResultRow>& rows);

}  // namespace dmaswipt

#endif  // DMASWIPT_EXPERIMENTS_HPP
