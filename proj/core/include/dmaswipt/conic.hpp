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

#ifndef DMASWIPT_CONIC_HPP
#define DMASWIPT_CONIC_HPP

#include <limits>
#include <string>
#include <vector>

#include "dmaswipt/types.hpp"

namespace dmaswipt::conic {

// Complex Hermitian PSD matrix variable.
struct HermitianVar {
  int id = -1;
};

// Real scalar variable with a finite lower bound.
struct ScalarVar {
  int id = -1;
};

// Affine function  sum Re Tr(F_v X_v) + sum c_s x_s + constant.
class LinearExpr {
 public:
  struct MatrixTerm {
    int var;
    CMat coeff;  // Hermitian
  };
  struct ScalarTerm {
    int var;
    double coeff;
  };

  LinearExpr() = default;
  explicit LinearExpr(double constant) : constant_(constant) {}

  LinearExpr& add(HermitianVar v, const CMat& coeff);
  LinearExpr& add(ScalarVar v, double coeff);
  LinearExpr& add_constant(double c);

  const std::vector<MatrixTerm>& matrix_terms() const { return matrix_; }
  const std::vector<ScalarTerm>& scalar_terms() const { return scalar_; }
  double constant() const { return constant_; }

 private:
  std::vector<MatrixTerm> matrix_;
  std::vector<ScalarTerm> scalar_;
  double constant_ = 0.0;
};

enum class Sense { GreaterEqual, LessEqual, Equal };

// Cone program over Hermitian PSD blocks, bounded scalars, affine rows and
// 3-dimensional rotated quadratic cones  t r >= s^2, t >= 0, r >= 0.
class ConicProblem {
 public:
  HermitianVar add_hermitian_psd(int order);
  ScalarVar add_scalar(double lower,
                       double upper = std::numeric_limits<double>::infinity());

  // Returns the row index used for duals.
  int add_constraint(LinearExpr expr, Sense sense, double rhs);

  // t, r and s may only involve scalar variables.
  int add_rotated_cone(LinearExpr t, LinearExpr r, LinearExpr s);

  void minimize(LinearExpr objective);

  int num_hermitian() const { return static_cast<int>(orders_.size()); }
  int hermitian_order(int id) const { return orders_.at(id); }
  int num_scalars() const { return static_cast<int>(lower_.size()); }
  double scalar_lower(int id) const { return lower_.at(id); }
  double scalar_upper(int id) const { return upper_.at(id); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  Sense constraint_sense(int row) const { return rows_.at(row).sense; }
  const LinearExpr& constraint_expr(int row) const { return rows_.at(row).expr; }
  double constraint_rhs(int row) const { return rows_.at(row).rhs; }
  int num_rotated_cones() const { return static_cast<int>(cones_.size()); }
  const LinearExpr& objective() const { return objective_; }

  struct Cone {
    LinearExpr t, r, s;
  };
  const Cone& rotated_cone(int i) const { return cones_.at(i); }

  // Value of an expression at a candidate point.
  double evaluate(const LinearExpr& expr, const std::vector<CMat>& hermitian,
                  const std::vector<double>& scalars) const;

 private:
  void check(const LinearExpr& expr, bool scalar_only) const;

  struct Row {
    LinearExpr expr;
    Sense sense;
    double rhs;
  };
  std::vector<int> orders_;
  std::vector<double> lower_, upper_;
  std::vector<Row> rows_;
  std::vector<Cone> cones_;
  LinearExpr objective_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

const char* to_string(SolveStatus status);

struct SolverOptions {
  double tolerance = 1e-8;  // relative gap and feasibility
  int max_iterations = 150;
  bool equilibrate = true;
  // Writes the compiled problem in SDPA sparse format, one file per solve.
  // Empty: falls back to the DMASWIPT_CONIC_DUMP_DIR environment variable.
  std::string dump_directory;
};

struct ConicSolution {
  SolveStatus status = SolveStatus::NumericalFailure;
  std::vector<CMat> hermitian;
  std::vector<double> scalars;
  // One multiplier per constraint row; >= rows have nonnegative duals, <= rows
  // nonpositive. For Infeasible these are the user-row entries of a Farkas
  // ray, so rows with large positive entries are the ones in conflict.
  std::vector<double> constraint_duals;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double dual_objective = std::numeric_limits<double>::quiet_NaN();
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double relative_gap = 0.0;
  double achieved_tolerance = 0.0;
  int iterations = 0;

  bool optimal() const { return status == SolveStatus::Optimal; }
};

ConicSolution solve(const ConicProblem& problem,
                    const SolverOptions& options = {});

// A + jB  ->  [[A, -B], [B, A]].  Tr(E(F) E(X)) = 2 Re Tr(F X), so a complex
// coefficient F enters the real problem as E(F) / 2.
RMat real_embedding(const CMat& m);
// Inverse of real_embedding; averages the two copies of each real block.
CMat complex_from_embedding(const RMat& m);

// t r >= s^2 with t, r >= 0, up to an absolute slack.
bool rotated_cone_contains(double t, double r, double s, double slack = 0.0);

}  // namespace dmaswipt::conic

#endif  // DMASWIPT_CONIC_HPP
