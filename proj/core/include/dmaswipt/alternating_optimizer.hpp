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

#ifndef DMASWIPT_ALTERNATING_OPTIMIZER_HPP
#define DMASWIPT_ALTERNATING_OPTIMIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dmaswipt/dma_model.hpp"
#include "dmaswipt/energy_harvesting.hpp"
#include "dmaswipt/geometry.hpp"
#include "dmaswipt/lorentzian_mapping.hpp"
#include "dmaswipt/precoder_optimizer.hpp"

namespace dmaswipt {

// Everything the optimizers need about one downlink instance: array layout,
// H, per-user channels, QoS targets and the RF-power thresholds obtained by
// inverting the EH model.
struct SystemModel {
  int n_rows = 0;
  int n_cols = 0;
  PropagationMatrix h;
  std::vector<CVec> channels;
  QosTargets targets;
  std::vector<double> rf_threshold;

  int users() const { return static_cast<int>(channels.size()); }
  int elements() const { return n_rows * n_cols; }
};

// Throws InfeasibleThresholdError if the EH model cannot reach E_k^th.
SystemModel make_system_model(const ArrayGeometry& geometry,
                              const WaveguideModel& waveguide,
                              const std::vector<UserPosition>& users,
                              const QosTargets& targets, const EhModel& eh);

struct OptimizerConfig {
  int max_iterations = 20;
  std::uint64_t seed = 1;
  MappingScheme scheme = MappingScheme::Arlch;
  PsMode ps_mode = PsMode::optimal();
  double solver_tolerance = 1e-8;
  double stop_threshold = 1e-3;
  int stop_patience = 3;
  int max_initializations = 6;  // first draw plus 5 retries
  double margin_tolerance = kMarginTolerance;

  void validate() const;
};

struct StageTimings {
  double init_s = 0.0;
  double dma_s = 0.0;
  double mapping_s = 0.0;
  double precoder_s = 0.0;
};

struct RunRecord {
  // P_Tx^(t) of each scored iterate, t = 0 being the initial solve; NaN marks
  // an iteration whose solve failed or whose candidate did not verify.
  std::vector<double> power_trace;
  // Value of P_Tx^(f) under the "P^(t) <= P^(t-1)" update rule.
  std::vector<double> accepted_trace;
  // Best verified power so far (nonincreasing).
  std::vector<double> best_trace;
  double best_power = 0.0;

  DmaWeights weights;
  PrecoderSet precoders;
  PsRatios rho;
  UserMargins margins;
  bool feasible = false;
  bool solver_failure = false;

  std::vector<double> precoder_rank_ratio;  // of the best iterate
  std::vector<double> dma_rank_ratio;       // per (13) solve
  StageTimings timings;
  int iterations = 0;
  int initializations = 0;
};

RunRecord run_alternating(const SystemModel& system,
                          const OptimizerConfig& config);

// Single solve of the precoder problem with Z = I_N and P_k = gamma_k
// gamma_k^H, i.e. one RF chain per element.
RunRecord run_fd_baseline(const SystemModel& system,
                          const OptimizerConfig& config);

// Re-solves the precoder problem of 'config' at each candidate weight vector
// and keeps the best verified result. Used when another run's weights are
// known to be feasible for this run's constraints (a restricted PS mode, or
// a harder EH target); appends any improvement to the traces.
RunRecord refine_over_weights(const SystemModel& system,
                              const OptimizerConfig& config, RunRecord record,
                              const std::vector<DmaWeights>& candidates);

UserMargins evaluate(const SystemModel& system, const DmaWeights& weights,
                     const PrecoderSet& precoders, const PsRatios& rho);

}  // namespace dmaswipt

#endif  // DMASWIPT_ALTERNATING_OPTIMIZER_HPP
