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

#ifndef DMASWIPT_PRECODER_OPTIMIZER_HPP
#define DMASWIPT_PRECODER_OPTIMIZER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dmaswipt/conic.hpp"
#include "dmaswipt/dma_model.hpp"
#include "dmaswipt/types.hpp"

namespace dmaswipt {

// Power-splitting policy: optimized per user, equal (0.5), or pinned.
struct PsMode {
  enum class Kind { Optimal, Equal, Fixed };
  Kind kind = Kind::Optimal;
  double rho = 0.5;

  static PsMode optimal() { return {Kind::Optimal, 0.5}; }
  static PsMode equal() { return {Kind::Equal, 0.5}; }
  // Throws DomainError outside [kRhoEpsilon, 1 - kRhoEpsilon].
  static PsMode fixed(double rho);

  bool pinned() const { return kind != Kind::Optimal; }
};

// "ops", "eps", "fixed:R".
PsMode parse_ps_mode(std::string_view text);
std::string format_ps_mode(const PsMode& mode);

struct PrecoderProblemInputs {
  CMat gram;                      // Z, N_r x N_r
  std::vector<CVec> channels;     // a_k, P_k = a_k a_k^H
  QosTargets targets;
  std::vector<double> rf_threshold;  // P_k^th [W]
  PsMode mode;
};

// Compiled program plus the bookkeeping needed to read results back.
struct PrecoderProgram {
  conic::ConicProblem problem;
  std::vector<conic::HermitianVar> covariance;
  std::vector<conic::ScalarVar> rho, sinr_epigraph, eh_epigraph;  // OPS only
  std::vector<int> sinr_rows, eh_rows;
  double covariance_scale = 1.0;  // W = covariance_scale * W'
};

PrecoderProgram build_precoder_problem(const PrecoderProblemInputs& in);

struct UserMargins {
  std::vector<double> sinr;  // SINR_k / delta_k - 1
  std::vector<double> eh;    // P_k^EH / P_k^th - 1 (+inf if P_k^th = 0)
  bool satisfied(double tol) const;
};

// Recomputes both constraint families through dma_model.
UserMargins precoder_margins(const std::vector<CVec>& channels,
                             const PrecoderSet& precoders, const PsRatios& rho,
                             const QosTargets& targets,
                             const std::vector<double>& rf_threshold);

struct PrecoderSolution {
  conic::SolveStatus status = conic::SolveStatus::NumericalFailure;
  std::vector<CMat> covariances;
  PrecoderSet precoders;
  PsRatios rho;
  double objective = 0.0;       // sum Tr(Z W_k)
  double transmit_power = 0.0;  // sum w_k^H Z w_k of the extracted vectors
  std::vector<double> rank_ratio;
  bool rank_warning = false;
  UserMargins margins;
  bool verified = false;
  std::vector<int> binding_users;  // from the Farkas ray when infeasible
  int solver_iterations = 0;

  bool optimal() const { return status == conic::SolveStatus::Optimal; }
};

inline constexpr double kMarginTolerance = 1e-4;

PrecoderSolution optimize_precoder_ps(const PrecoderProblemInputs& in,
                                      const conic::SolverOptions& options = {});

}  // namespace dmaswipt

#endif  // DMASWIPT_PRECODER_OPTIMIZER_HPP
