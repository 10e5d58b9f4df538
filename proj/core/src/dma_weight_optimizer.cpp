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

#include "dmaswipt/dma_weight_optimizer.hpp"

#include <algorithm>

#include "dmaswipt/errors.hpp"
#include "dmaswipt/rank_one.hpp"

namespace dmaswipt {

using conic::LinearExpr;
using conic::Sense;

CMat ReducedMatrices::b(int m) const {
  return b_diagonal.at(m).cast<cdouble>().asDiagonal();
}

CMat ReducedMatrices::c(int k, int m) const {
  const CVec& f = c_factor.at(k).at(m);
  return f * f.adjoint();
}

ReducedMatrices build_reduced_matrices(const PrecoderSet& precoders,
                                       const PropagationMatrix& h,
                                       const std::vector<CVec>& channels,
                                       int n_rows, int n_cols) {
  const int n = n_rows * n_cols;
  if (h.diagonal.size() != n) throw DimensionError("H does not match N");
  for (const auto& w : precoders)
    if (w.size() != n_rows) throw DimensionError("precoder length must be N_r");
  for (const auto& g : channels)
    if (g.size() != n) throw DimensionError("channel length must be N");

  ReducedMatrices out;
  for (const auto& w : precoders) {
    RVec b(n);
    for (int e = 0; e < n; ++e)
      b(e) = std::norm(h.diagonal(e)) * std::norm(w(e / n_cols));
    out.b_diagonal.push_back(std::move(b));
  }
  for (const auto& g : channels) {
    std::vector<CVec> row;
    for (const auto& w : precoders) {
      CVec f(n);
      for (int e = 0; e < n; ++e)
        f(e) = g(e) * std::conj(h.diagonal(e)) * std::conj(w(e / n_cols));
      row.push_back(std::move(f));
    }
    out.c_factor.push_back(std::move(row));
  }
  return out;
}

int reduced_to_vec_index(int n, int n_cols, int n_elements) {
  // Element n sits at row n, column strip(n) of Q.
  return (n / n_cols) * n_elements + n;
}

CMat scatter_block_diagonal(const CVec& q, int n_rows, int n_cols) {
  if (q.size() != n_rows * n_cols) throw DimensionError("q length must be N");
  CMat dense = CMat::Zero(q.size(), n_rows);
  for (Eigen::Index e = 0; e < q.size(); ++e) dense(e, e / n_cols) = q(e);
  return dense;
}

DmaWeightSolution optimize_dma_weights(const DmaProblemInputs& in,
                                       const conic::SolverOptions& options) {
  const int k_users = static_cast<int>(in.channels.size());
  const int m_beams = static_cast<int>(in.precoders.size());
  const int n = in.n_rows * in.n_cols;
  if (in.targets.users() != k_users || static_cast<int>(in.rho.size()) != k_users ||
      static_cast<int>(in.rf_threshold.size()) != k_users || m_beams != k_users)
    throw DimensionError("one precoder, ratio and target per user required");
  in.targets.validate();
  validate_ps_ratios(in.rho);

  const ReducedMatrices red =
      build_reduced_matrices(in.precoders, in.h, in.channels, in.n_rows, in.n_cols);

  double cmax = 0.0;
  for (const auto& row : red.c_factor)
    for (const auto& f : row) cmax = std::max(cmax, f.squaredNorm());
  double s = 0.0;
  std::vector<double> sinr_rhs(k_users), eh_rhs(k_users);
  for (int k = 0; k < k_users; ++k) {
    const double noise =
        in.targets.antenna_noise[k] + in.targets.conversion_noise[k] / in.rho[k];
    sinr_rhs[k] = in.targets.sinr[k] * noise;
    eh_rhs[k] = in.rf_threshold[k] / (1.0 - in.rho[k]);
    s = std::max({s, sinr_rhs[k], eh_rhs[k]});
  }
  if (!(cmax > 0.0)) cmax = 1.0;
  if (!(s > 0.0)) s = 1.0;
  double bmax = 0.0;
  for (const auto& b : red.b_diagonal) bmax = std::max(bmax, b.maxCoeff());
  if (!(bmax > 0.0)) bmax = 1.0;

  conic::ConicProblem p;
  const auto q = p.add_hermitian_psd(n);
  RVec bsum = RVec::Zero(n);
  for (const auto& b : red.b_diagonal) bsum += b;
  p.minimize(LinearExpr().add(q, CMat((bsum / bmax).cast<cdouble>().asDiagonal())));
  for (int k = 0; k < k_users; ++k) {
    CMat sinr_coeff = red.c(k, k);
    CMat eh_coeff = CMat::Zero(n, n);
    for (int m = 0; m < m_beams; ++m) {
      const CMat c = red.c(k, m);
      if (m != k) sinr_coeff -= in.targets.sinr[k] * c;
      eh_coeff += c;
    }
    p.add_constraint(LinearExpr().add(q, sinr_coeff / cmax), Sense::GreaterEqual,
                     sinr_rhs[k] / s);
    p.add_constraint(LinearExpr().add(q, eh_coeff / cmax), Sense::GreaterEqual,
                     eh_rhs[k] / s);
  }

  DmaWeightSolution out;
  const conic::ConicSolution sol = conic::solve(p, options);
  out.status = sol.status;
  out.solver_iterations = sol.iterations;
  if (!sol.optimal()) return out;

  out.gram = (s / cmax) * sol.hermitian[q.id];
  out.objective = 0.0;
  for (int e = 0; e < n; ++e) out.objective += bsum(e) * out.gram(e, e).real();
  const RankOneFactor f = extract_rank_one(out.gram);
  out.rank_ratio = f.ratio;
  out.rank_warning = f.degraded;
  out.weights = DmaWeights::unconstrained(f.vector, in.n_rows, in.n_cols);
  const auto a = effective_channels(in.channels, in.h, out.weights);
  out.margins =
      precoder_margins(a, in.precoders, in.rho, in.targets, in.rf_threshold);
  return out;
}

}  // namespace dmaswipt
