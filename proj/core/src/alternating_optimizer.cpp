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

#include "dmaswipt/alternating_optimizer.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "dmaswipt/dma_weight_optimizer.hpp"
#include "dmaswipt/errors.hpp"

namespace dmaswipt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

PrecoderSolution solve_precoders(const SystemModel& sys, const DmaWeights& q,
                                 const OptimizerConfig& cfg,
                                 const conic::SolverOptions& opt) {
  PrecoderProblemInputs in;
  in.gram = precoder_gram(sys.h, q);
  in.channels = effective_channels(sys.channels, sys.h, q);
  in.targets = sys.targets;
  in.rf_threshold = sys.rf_threshold;
  in.mode = cfg.ps_mode;
  return optimize_precoder_ps(in, opt);
}

struct Iterate {
  DmaWeights weights;
  PrecoderSolution precoder;
  double power = kNaN;
};

}  // namespace

SystemModel make_system_model(const ArrayGeometry& geometry,
                              const WaveguideModel& waveguide,
                              const std::vector<UserPosition>& users,
                              const QosTargets& targets, const EhModel& eh) {
  geometry.validate();
  waveguide.validate(geometry);
  targets.validate();
  if (targets.users() != static_cast<int>(users.size()))
    throw DimensionError("one QoS target per user required");
  SystemModel sys;
  sys.n_rows = geometry.n_rows;
  sys.n_cols = geometry.n_cols;
  sys.h = propagation_matrix(waveguide, geometry);
  sys.channels = channel_vectors(geometry, users);
  sys.targets = targets;
  for (double e : targets.eh_threshold)
    sys.rf_threshold.push_back(required_rf_power(eh, e));
  return sys;
}

void OptimizerConfig::validate() const {
  if (max_iterations < 1) throw DomainError("T_max must be >= 1");
  if (max_initializations < 1)
    throw DomainError("at least one initialization is required");
  if (!(solver_tolerance > 0.0)) throw DomainError("solver tolerance must be > 0");
  if (!(stop_threshold >= 0.0) || stop_patience < 1)
    throw DomainError("bad stopping rule");
}

UserMargins evaluate(const SystemModel& system, const DmaWeights& weights,
                     const PrecoderSet& precoders, const PsRatios& rho) {
  const auto a = effective_channels(system.channels, system.h, weights);
  return precoder_margins(a, precoders, rho, system.targets,
                          system.rf_threshold);
}

RunRecord run_alternating(const SystemModel& sys, const OptimizerConfig& cfg) {
  cfg.validate();
  RunRecord rec;
  if (sys.users() == 0) {
    rec.feasible = true;
    return rec;
  }
  if (sys.users() > sys.n_rows)
    throw UnsupportedConfigurationError("more users than microstrips");

  conic::SolverOptions opt;
  opt.tolerance = cfg.solver_tolerance;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  const int n = sys.elements();

  // Step 1: random Lorentzian start, redrawn while (12) has no verified
  // solution.
  Iterate cur;
  bool started = false;
  {
    Stopwatch sw;
    for (int init = 0; init < cfg.max_initializations && !started; ++init) {
      CVec q(n);
      for (int e = 0; e < n; ++e) q(e) = lorentzian_weight(phase(rng));
      cur.weights = DmaWeights::lorentzian(std::move(q), sys.n_rows, sys.n_cols);
      cur.precoder = solve_precoders(sys, cur.weights, cfg, opt);
      ++rec.initializations;
      if (cur.precoder.status == conic::SolveStatus::NumericalFailure)
        rec.solver_failure = true;
      started = cur.precoder.optimal() && cur.precoder.verified;
    }
    rec.timings.init_s = sw.seconds();
  }
  if (!started) {
    rec.power_trace.push_back(kNaN);
    rec.best_power = kNaN;
    rec.weights = cur.weights;
    return rec;
  }
  rec.solver_failure = false;
  cur.power = transmit_power(sys.h, cur.weights, cur.precoder.precoders);

  Iterate best = cur;
  double accepted = cur.power;
  double previous = cur.power;
  rec.power_trace.push_back(cur.power);
  rec.accepted_trace.push_back(accepted);
  rec.best_trace.push_back(best.power);

  int stale = 0;
  for (int t = 1; t <= cfg.max_iterations; ++t) {
    rec.iterations = t;
    DmaProblemInputs din;
    din.precoders = cur.precoder.precoders;
    din.rho = cur.precoder.rho;
    din.channels = sys.channels;
    din.h = sys.h;
    din.n_rows = sys.n_rows;
    din.n_cols = sys.n_cols;
    din.targets = sys.targets;
    din.rf_threshold = sys.rf_threshold;

    Stopwatch sw_dma;
    const DmaWeightSolution dsol = optimize_dma_weights(din, opt);
    rec.timings.dma_s += sw_dma.seconds();
    if (!dsol.optimal()) {
      rec.solver_failure =
          dsol.status == conic::SolveStatus::NumericalFailure;
      rec.power_trace.push_back(kNaN);
      rec.accepted_trace.push_back(accepted);
      rec.best_trace.push_back(best.power);
      break;
    }
    rec.dma_rank_ratio.push_back(dsol.rank_ratio);

    Stopwatch sw_map;
    Iterate next;
    next.weights = map_weights(dsol.weights, cfg.scheme);
    rec.timings.mapping_s += sw_map.seconds();

    Stopwatch sw_pre;
    next.precoder = solve_precoders(sys, next.weights, cfg, opt);
    rec.timings.precoder_s += sw_pre.seconds();
    if (!next.precoder.optimal() || !next.precoder.verified) {
      rec.solver_failure =
          next.precoder.status == conic::SolveStatus::NumericalFailure;
      rec.power_trace.push_back(kNaN);
      rec.accepted_trace.push_back(accepted);
      rec.best_trace.push_back(best.power);
      break;
    }
    next.power = transmit_power(sys.h, next.weights, next.precoder.precoders);
    rec.power_trace.push_back(next.power);

    if (next.power <= previous) accepted = next.power;
    const double gain = (best.power - next.power) / best.power;
    if (next.power < best.power) best = next;
    rec.accepted_trace.push_back(accepted);
    rec.best_trace.push_back(best.power);
    previous = next.power;
    cur = std::move(next);

    stale = gain < cfg.stop_threshold ? stale + 1 : 0;
    if (stale >= cfg.stop_patience) break;
  }

  rec.best_power = best.power;
  rec.weights = best.weights;
  rec.precoders = best.precoder.precoders;
  rec.rho = best.precoder.rho;
  rec.precoder_rank_ratio = best.precoder.rank_ratio;
  rec.margins = evaluate(sys, rec.weights, rec.precoders, rec.rho);
  rec.feasible = rec.margins.satisfied(cfg.margin_tolerance);
  return rec;
}

RunRecord refine_over_weights(const SystemModel& sys,
                              const OptimizerConfig& cfg, RunRecord rec,
                              const std::vector<DmaWeights>& candidates) {
  conic::SolverOptions opt;
  opt.tolerance = cfg.solver_tolerance;
  bool improved = false;
  for (const auto& q : candidates) {
    if (q.size() != sys.elements()) continue;
    Stopwatch sw;
    const PrecoderSolution sol = solve_precoders(sys, q, cfg, opt);
    rec.timings.precoder_s += sw.seconds();
    if (!sol.optimal() || !sol.verified) continue;
    const double power = transmit_power(sys.h, q, sol.precoders);
    if (rec.feasible && !(power < rec.best_power)) continue;
    rec.best_power = power;
    rec.weights = q;
    rec.precoders = sol.precoders;
    rec.rho = sol.rho;
    rec.precoder_rank_ratio = sol.rank_ratio;
    rec.margins = evaluate(sys, q, rec.precoders, rec.rho);
    rec.feasible = rec.margins.satisfied(cfg.margin_tolerance);
    improved = true;
  }
  if (improved) {
    rec.power_trace.push_back(rec.best_power);
    rec.accepted_trace.push_back(rec.best_power);
    rec.best_trace.push_back(rec.best_power);
  }
  return rec;
}

RunRecord run_fd_baseline(const SystemModel& sys, const OptimizerConfig& cfg) {
  cfg.validate();
  RunRecord rec;
  if (sys.users() == 0) {
    rec.feasible = true;
    return rec;
  }
  conic::SolverOptions opt;
  opt.tolerance = cfg.solver_tolerance;
  const int n = sys.elements();

  Stopwatch sw;
  PrecoderProblemInputs in;
  in.gram = CMat::Identity(n, n);
  in.channels = sys.channels;
  in.targets = sys.targets;
  in.rf_threshold = sys.rf_threshold;
  in.mode = cfg.ps_mode;
  const PrecoderSolution sol = optimize_precoder_ps(in, opt);
  rec.timings.precoder_s = sw.seconds();
  rec.initializations = 1;
  if (!sol.optimal() || !sol.verified) {
    rec.solver_failure = sol.status == conic::SolveStatus::NumericalFailure;
    rec.power_trace.push_back(kNaN);
    rec.best_power = kNaN;
    return rec;
  }
  double power = 0.0;
  for (const auto& w : sol.precoders) power += w.squaredNorm();
  rec.power_trace = {power};
  rec.accepted_trace = {power};
  rec.best_trace = {power};
  rec.best_power = power;
  rec.precoders = sol.precoders;
  rec.rho = sol.rho;
  rec.precoder_rank_ratio = sol.rank_ratio;
  rec.margins = sol.margins;
  rec.feasible = sol.margins.satisfied(cfg.margin_tolerance);
  return rec;
}

}  // namespace dmaswipt
