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

#ifndef DMASWIPT_DMA_WEIGHT_OPTIMIZER_HPP
#define DMASWIPT_DMA_WEIGHT_OPTIMIZER_HPP

#include <vector>

#include "dmaswipt/conic.hpp"
#include "dmaswipt/dma_model.hpp"
#include "dmaswipt/precoder_optimizer.hpp"
#include "dmaswipt/types.hpp"

namespace dmaswipt {

// Quadratic forms of the weight vector in reduced (nonzero-of-vec(Q))
// coordinates:  q^H B_m q = ||H Q w_m||^2,  q^H C_{k,m} q = |gamma_k^H H Q w_m|^2.
// B_m is diagonal and C_{k,m} = f_{k,m} f_{k,m}^H, so only the factors are kept.
struct ReducedMatrices {
  std::vector<RVec> b_diagonal;             // [m]
  std::vector<std::vector<CVec>> c_factor;  // [k][m]

  CMat b(int m) const;
  CMat c(int k, int m) const;
};

ReducedMatrices build_reduced_matrices(const PrecoderSet& precoders,
                                       const PropagationMatrix& h,
                                       const std::vector<CVec>& channels,
                                       int n_rows, int n_cols);

// Position of element n of q inside vec(Q) (column-major, N x N_r).
int reduced_to_vec_index(int n, int n_cols, int n_elements);
// Scatter q back into the dense block-diagonal Q.
CMat scatter_block_diagonal(const CVec& q, int n_rows, int n_cols);

struct DmaProblemInputs {
  PrecoderSet precoders;
  PsRatios rho;
  std::vector<CVec> channels;  // gamma_k
  PropagationMatrix h;
  int n_rows = 0;
  int n_cols = 0;
  QosTargets targets;
  std::vector<double> rf_threshold;
};

struct DmaWeightSolution {
  conic::SolveStatus status = conic::SolveStatus::NumericalFailure;
  CMat gram;             // Q~
  DmaWeights weights;    // unconstrained dominant factor
  double objective = 0.0;
  double rank_ratio = 0.0;
  bool rank_warning = false;
  UserMargins margins;   // of the extracted vector with the given w, rho
  int solver_iterations = 0;

  bool optimal() const { return status == conic::SolveStatus::Optimal; }
};

DmaWeightSolution optimize_dma_weights(const DmaProblemInputs& in,
                                       const conic::SolverOptions& options = {});

}  // namespace dmaswipt

#endif  // DMASWIPT_DMA_WEIGHT_OPTIMIZER_HPP
