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

#include "dmaswipt/conic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "dmaswipt/errors.hpp"
#include "sdp_ipm.hpp"
#include "sdpa_writer.hpp"

namespace dmaswipt::conic {

LinearExpr& LinearExpr::add(HermitianVar v, const CMat& coeff) {
  if (coeff.rows() != coeff.cols())
    throw DimensionError("matrix coefficient must be square");
  for (auto& t : matrix_)
    if (t.var == v.id) {
      t.coeff += coeff;
      return *this;
    }
  matrix_.push_back({v.id, coeff});
  return *this;
}

LinearExpr& LinearExpr::add(ScalarVar v, double coeff) {
  for (auto& t : scalar_)
    if (t.var == v.id) {
      t.coeff += coeff;
      return *this;
    }
  scalar_.push_back({v.id, coeff});
  return *this;
}

LinearExpr& LinearExpr::add_constant(double c) {
  constant_ += c;
  return *this;
}

HermitianVar ConicProblem::add_hermitian_psd(int order) {
  if (order < 1) throw DimensionError("PSD block order must be >= 1");
  orders_.push_back(order);
  return {static_cast<int>(orders_.size()) - 1};
}

ScalarVar ConicProblem::add_scalar(double lower, double upper) {
  if (!std::isfinite(lower))
    throw std::invalid_argument("scalar variables need a finite lower bound");
  if (!(upper >= lower))
    throw std::invalid_argument("scalar upper bound below lower bound");
  lower_.push_back(lower);
  upper_.push_back(upper);
  return {static_cast<int>(lower_.size()) - 1};
}

void ConicProblem::check(const LinearExpr& expr, bool scalar_only) const {
  if (scalar_only && !expr.matrix_terms().empty())
    throw std::invalid_argument("cone arguments must be scalar expressions");
  for (const auto& t : expr.matrix_terms()) {
    if (t.var < 0 || t.var >= num_hermitian())
      throw std::out_of_range("unknown Hermitian variable");
    if (t.coeff.rows() != orders_[t.var])
      throw DimensionError("coefficient order does not match its variable");
  }
  for (const auto& t : expr.scalar_terms())
    if (t.var < 0 || t.var >= num_scalars())
      throw std::out_of_range("unknown scalar variable");
}

int ConicProblem::add_constraint(LinearExpr expr, Sense sense, double rhs) {
  check(expr, false);
  rows_.push_back({std::move(expr), sense, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

int ConicProblem::add_rotated_cone(LinearExpr t, LinearExpr r, LinearExpr s) {
  check(t, true);
  check(r, true);
  check(s, true);
  cones_.push_back({std::move(t), std::move(r), std::move(s)});
  return static_cast<int>(cones_.size()) - 1;
}

void ConicProblem::minimize(LinearExpr objective) {
  check(objective, false);
  objective_ = std::move(objective);
}

double ConicProblem::evaluate(const LinearExpr& expr,
                              const std::vector<CMat>& hermitian,
                              const std::vector<double>& scalars) const {
  double v = expr.constant();
  for (const auto& t : expr.matrix_terms())
    v += (t.coeff * hermitian.at(t.var)).trace().real();
  for (const auto& t : expr.scalar_terms()) v += t.coeff * scalars.at(t.var);
  return v;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::Unbounded:
      return "unbounded";
    case SolveStatus::NumericalFailure:
      return "numerical-failure";
  }
  return "unknown";
}

RMat real_embedding(const CMat& m) {
  const Eigen::Index n = m.rows();
  RMat e(2 * n, 2 * n);
  e.topLeftCorner(n, n) = m.real();
  e.topRightCorner(n, n) = -m.imag();
  e.bottomLeftCorner(n, n) = m.imag();
  e.bottomRightCorner(n, n) = m.real();
  return e;
}

CMat complex_from_embedding(const RMat& m) {
  const Eigen::Index n = m.rows() / 2;
  const RMat re = 0.5 * (m.topLeftCorner(n, n) + m.bottomRightCorner(n, n));
  const RMat im = 0.5 * (m.bottomLeftCorner(n, n) - m.topRightCorner(n, n));
  CMat c(n, n);
  c.real() = re;
  c.imag() = im;
  return c;
}

bool rotated_cone_contains(double t, double r, double s, double slack) {
  return t >= -slack && r >= -slack && t * r - s * s >= -slack;
}

namespace {

struct Layout {
  int n_herm = 0;
  int n_cones = 0;
  int n_scalars = 0;
  std::vector<int> upper_slack;  // lp coord per scalar, -1 if unbounded
  std::vector<int> row_slack;    // lp coord per user row, -1 for equality
  int lp_dim = 0;
  int rows = 0;
  double objective_offset = 0.0;
};

std::string dump_directory(const SolverOptions& options) {
  if (!options.dump_directory.empty()) return options.dump_directory;
  if (const char* env = std::getenv("DMASWIPT_CONIC_DUMP_DIR")) return env;
  return {};
}

// Adds an affine scalar expression (times sign) to a row, returning the part
// of the constant that moves to the right-hand side.
double add_scalar_terms(detail::StandardForm& sf, int row,
                        const ConicProblem& p, const LinearExpr& e,
                        double sign) {
  double moved = sign * e.constant();
  for (const auto& t : e.scalar_terms()) {
    sf.add_lp(row, t.var, sign * t.coeff);
    moved += sign * t.coeff * p.scalar_lower(t.var);
  }
  return moved;
}

detail::StandardForm compile(const ConicProblem& p, Layout& lay) {
  lay.n_herm = p.num_hermitian();
  lay.n_cones = p.num_rotated_cones();
  lay.n_scalars = p.num_scalars();

  int lp = lay.n_scalars;
  int rows = p.num_constraints();
  lay.upper_slack.assign(lay.n_scalars, -1);
  for (int s = 0; s < lay.n_scalars; ++s)
    if (std::isfinite(p.scalar_upper(s))) {
      lay.upper_slack[s] = lp++;
      ++rows;
    }
  lay.row_slack.assign(p.num_constraints(), -1);
  for (int r = 0; r < p.num_constraints(); ++r)
    if (p.constraint_sense(r) != Sense::Equal) lay.row_slack[r] = lp++;
  rows += 3 * lay.n_cones;
  lay.lp_dim = lp;
  lay.rows = rows;

  std::vector<int> orders;
  for (int h = 0; h < lay.n_herm; ++h) orders.push_back(2 * p.hermitian_order(h));
  for (int c = 0; c < lay.n_cones; ++c) orders.push_back(2);

  detail::StandardForm sf;
  sf.init(orders, lp, rows);

  // User rows: expr (+/- slack) = rhs.
  for (int r = 0; r < p.num_constraints(); ++r) {
    const auto& e = p.constraint_expr(r);
    for (const auto& t : e.matrix_terms())
      sf.add_psd(r, t.var, 0.5 * real_embedding(t.coeff));
    const double moved = add_scalar_terms(sf, r, p, e, 1.0);
    sf.b(r) = p.constraint_rhs(r) - moved;
    if (lay.row_slack[r] >= 0)
      sf.add_lp(r, lay.row_slack[r],
                p.constraint_sense(r) == Sense::GreaterEqual ? -1.0 : 1.0);
  }
  int row = p.num_constraints();
  // Upper bounds: x' + slack = upper - lower.
  for (int s = 0; s < lay.n_scalars; ++s)
    if (lay.upper_slack[s] >= 0) {
      sf.add_lp(row, s, 1.0);
      sf.add_lp(row, lay.upper_slack[s], 1.0);
      sf.b(row) = p.scalar_upper(s) - p.scalar_lower(s);
      ++row;
    }
  // Rotated cones as 2x2 PSD blocks [[t, s], [s, r]].
  for (int c = 0; c < lay.n_cones; ++c) {
    const auto& cone = p.rotated_cone(c);
    const int block = lay.n_herm + c;
    RMat e11 = RMat::Zero(2, 2), e22 = RMat::Zero(2, 2), e12 = RMat::Zero(2, 2);
    e11(0, 0) = 1.0;
    e22(1, 1) = 1.0;
    e12(0, 1) = e12(1, 0) = 0.5;
    const LinearExpr* args[3] = {&cone.t, &cone.r, &cone.s};
    const RMat* mats[3] = {&e11, &e22, &e12};
    for (int a = 0; a < 3; ++a) {
      sf.add_psd(row, block, *mats[a]);
      const double moved = add_scalar_terms(sf, row, p, *args[a], -1.0);
      sf.b(row) = -moved;
      ++row;
    }
  }

  const auto& obj = p.objective();
  for (const auto& t : obj.matrix_terms())
    sf.c_psd[t.var] += 0.5 * real_embedding(t.coeff);
  lay.objective_offset = obj.constant();
  for (const auto& t : obj.scalar_terms()) {
    sf.c_lp(t.var) += t.coeff;
    lay.objective_offset += t.coeff * p.scalar_lower(t.var);
  }
  return sf;
}

void maybe_dump(const detail::StandardForm& sf, const SolverOptions& options) {
  const std::string dir = dump_directory(options);
  if (dir.empty()) return;
  static std::atomic<int> counter{0};
  const int id = counter.fetch_add(1);
  char name[64];
  std::snprintf(name, sizeof(name), "dmaswipt_conic_%06d.dat-s", id);
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name);
  detail::write_sdpa(out, sf);
}

}  // namespace

ConicSolution solve(const ConicProblem& problem, const SolverOptions& options) {
  Layout lay;
  const detail::StandardForm sf = compile(problem, lay);
  maybe_dump(sf, options);

  detail::IpmSettings settings;
  settings.tolerance = options.tolerance;
  settings.max_iterations = options.max_iterations;
  settings.equilibrate = options.equilibrate;
  const detail::IpmResult r = detail::solve_standard_form(sf, settings);

  ConicSolution sol;
  switch (r.status) {
    case detail::IpmStatus::Optimal:
      sol.status = SolveStatus::Optimal;
      break;
    case detail::IpmStatus::PrimalInfeasible:
      sol.status = SolveStatus::Infeasible;
      break;
    case detail::IpmStatus::DualInfeasible:
      sol.status = SolveStatus::Unbounded;
      break;
    case detail::IpmStatus::Failure:
      sol.status = SolveStatus::NumericalFailure;
      break;
  }
  sol.iterations = r.iterations;
  sol.primal_residual = r.primal_residual;
  sol.dual_residual = r.dual_residual;
  sol.relative_gap = r.relative_gap;
  sol.achieved_tolerance =
      std::max({r.primal_residual, r.dual_residual, r.relative_gap});

  for (int h = 0; h < lay.n_herm; ++h)
    sol.hermitian.push_back(complex_from_embedding(r.x_psd[h]));
  for (int s = 0; s < lay.n_scalars; ++s)
    sol.scalars.push_back(problem.scalar_lower(s) + r.x_lp(s));

  const RVec& y = sol.status == SolveStatus::Infeasible ? r.certificate_y : r.y;
  for (int i = 0; i < problem.num_constraints(); ++i)
    sol.constraint_duals.push_back(y(i));

  if (sol.status == SolveStatus::Optimal ||
      sol.status == SolveStatus::NumericalFailure) {
    sol.objective = r.primal_objective + lay.objective_offset;
    sol.dual_objective = r.dual_objective + lay.objective_offset;
  }
  return sol;
}

}  // namespace dmaswipt::conic
