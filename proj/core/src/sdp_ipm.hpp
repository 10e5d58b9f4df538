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

// Primal-dual interior-point method for block-diagonal SDPs in the form
//
//   min  <C, X>   s.t.  <A_i, X> = b_i  (i = 1..m),   X in K
//   max  b^T y    s.t.  sum_i y_i A_i + S = C,         S in K
//
// where K is a product of real PSD blocks and a nonnegative orthant. Search
// directions are HKM with Mehrotra predictor-corrector; the Schur complement
// is dense (m is small for every problem this library builds).

#ifndef DMASWIPT_SDP_IPM_HPP
#define DMASWIPT_SDP_IPM_HPP

#include <utility>
#include <vector>

#include "dmaswipt/types.hpp"

namespace dmaswipt::conic::detail {

struct StandardForm {
  std::vector<int> psd_orders;
  int lp_dim = 0;
  int rows = 0;

  std::vector<RMat> c_psd;  // one per PSD block
  RVec c_lp;

  // Constraint data stored per cone so Schur assembly only visits the rows
  // that touch a block.
  struct PsdTerm {
    int row;
    RMat a;
  };
  std::vector<std::vector<PsdTerm>> psd_terms;  // [block]
  struct LpTerm {
    int row;
    double a;
  };
  std::vector<std::vector<LpTerm>> lp_terms;  // [lp coordinate]
  RVec b;

  void init(std::vector<int> orders, int lp, int m);
  void add_psd(int row, int block, RMat a);
  void add_lp(int row, int coord, double a);
};

enum class IpmStatus { Optimal, PrimalInfeasible, DualInfeasible, Failure };

struct IpmSettings {
  double tolerance = 1e-8;
  int max_iterations = 150;
  bool equilibrate = true;
};

struct IpmResult {
  IpmStatus status = IpmStatus::Failure;
  std::vector<RMat> x_psd;
  RVec x_lp;
  RVec y;
  std::vector<RMat> s_psd;
  RVec s_lp;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_residual = 0.0;  // ||b - A(X)|| / (1 + ||b||)
  double dual_residual = 0.0;    // ||C - A^T y - S|| / (1 + ||C||)
  double relative_gap = 0.0;
  int iterations = 0;
  // Farkas ray for PrimalInfeasible (b^T y = 1, A^T y <= 0).
  RVec certificate_y;
};

IpmResult solve_standard_form(const StandardForm& problem,
                              const IpmSettings& settings);

}  // namespace dmaswipt::conic::detail

#endif  // DMASWIPT_SDP_IPM_HPP
