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

#include "sdp_ipm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace dmaswipt::conic::detail {

void StandardForm::init(std::vector<int> orders, int lp, int m) {
  psd_orders = std::move(orders);
  lp_dim = lp;
  rows = m;
  c_psd.clear();
  for (int n : psd_orders) c_psd.push_back(RMat::Zero(n, n));
  c_lp = RVec::Zero(lp);
  psd_terms.assign(psd_orders.size(), {});
  lp_terms.assign(lp, {});
  b = RVec::Zero(m);
}

void StandardForm::add_psd(int row, int block, RMat a) {
  auto& terms = psd_terms[block];
  for (auto& t : terms)
    if (t.row == row) {
      t.a += a;
      return;
    }
  terms.push_back({row, std::move(a)});
}

void StandardForm::add_lp(int row, int coord, double a) {
  auto& terms = lp_terms[coord];
  for (auto& t : terms)
    if (t.row == row) {
      t.a += a;
      return;
    }
  terms.push_back({row, a});
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  std::vector<RMat> X;
  RVec x;
  RVec y;
  std::vector<RMat> S;
  RVec s;
};

struct Direction {
  std::vector<RMat> dX;
  RVec dx;
  RVec dy;
  std::vector<RMat> dS;
  RVec ds;
};

RVec apply_a(const StandardForm& p, const std::vector<RMat>& X,
             const RVec& x) {
  RVec v = RVec::Zero(p.rows);
  for (std::size_t j = 0; j < X.size(); ++j)
    for (const auto& t : p.psd_terms[j]) v(t.row) += t.a.cwiseProduct(X[j]).sum();
  for (int l = 0; l < p.lp_dim; ++l)
    for (const auto& t : p.lp_terms[l]) v(t.row) += t.a * x(l);
  return v;
}

void apply_at(const StandardForm& p, const RVec& y, std::vector<RMat>& out,
              RVec& out_lp) {
  out.resize(p.psd_orders.size());
  for (std::size_t j = 0; j < p.psd_orders.size(); ++j) {
    out[j] = RMat::Zero(p.psd_orders[j], p.psd_orders[j]);
    for (const auto& t : p.psd_terms[j]) out[j] += y(t.row) * t.a;
  }
  out_lp = RVec::Zero(p.lp_dim);
  for (int l = 0; l < p.lp_dim; ++l)
    for (const auto& t : p.lp_terms[l]) out_lp(l) += y(t.row) * t.a;
}

double inner(const std::vector<RMat>& A, const RVec& a,
             const std::vector<RMat>& B, const RVec& b) {
  double v = a.dot(b);
  for (std::size_t j = 0; j < A.size(); ++j) v += A[j].cwiseProduct(B[j]).sum();
  return v;
}

double frob(const std::vector<RMat>& A, const RVec& a) {
  double v = a.squaredNorm();
  for (const auto& m : A) v += m.squaredNorm();
  return std::sqrt(v);
}

RMat sym(const RMat& m) { return 0.5 * (m + m.transpose()); }

// Largest alpha with X + alpha dX still PSD (inf if unbounded).
double max_step_psd(const RMat& X, const RMat& dX) {
  Eigen::LLT<RMat> llt(X);
  if (llt.info() != Eigen::Success) return 0.0;
  const RMat a = llt.matrixL().solve(dX);
  RMat m = llt.matrixL().solve(a.transpose());
  m = sym(m);
  const double lmin =
      Eigen::SelfAdjointEigenSolver<RMat>(m, Eigen::EigenvaluesOnly)
          .eigenvalues()
          .minCoeff();
  return lmin < 0.0 ? -1.0 / lmin : kInf;
}

double max_step_lp(const RVec& x, const RVec& dx) {
  double a = kInf;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (dx(i) < 0.0) a = std::min(a, -x(i) / dx(i));
  return a;
}

double max_step(const std::vector<RMat>& X, const RVec& x,
                const std::vector<RMat>& dX, const RVec& dx) {
  double a = max_step_lp(x, dx);
  for (std::size_t j = 0; j < X.size(); ++j)
    a = std::min(a, max_step_psd(X[j], dX[j]));
  return a;
}

double max_eigenvalue(const RMat& m) {
  if (m.rows() == 0) return -kInf;
  return Eigen::SelfAdjointEigenSolver<RMat>(sym(m), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .maxCoeff();
}

StandardForm equilibrate(const StandardForm& p, RVec& row_scale,
                         double& x_scale, double& c_scale) {
  StandardForm q = p;
  RVec norms = RVec::Zero(p.rows);
  for (const auto& block : p.psd_terms)
    for (const auto& t : block) norms(t.row) += t.a.squaredNorm();
  for (const auto& coord : p.lp_terms)
    for (const auto& t : coord) norms(t.row) += t.a * t.a;
  row_scale.resize(p.rows);
  for (int i = 0; i < p.rows; ++i)
    row_scale(i) = norms(i) > 0.0 ? 1.0 / std::sqrt(norms(i)) : 1.0;

  for (auto& block : q.psd_terms)
    for (auto& t : block) t.a *= row_scale(t.row);
  for (auto& coord : q.lp_terms)
    for (auto& t : coord) t.a *= row_scale(t.row);
  q.b = p.b.cwiseProduct(row_scale);

  const double bmax = q.b.size() ? q.b.cwiseAbs().maxCoeff() : 0.0;
  x_scale = bmax > 0.0 ? bmax : 1.0;
  q.b /= x_scale;

  const double cn = frob(p.c_psd, p.c_lp);
  c_scale = cn > 0.0 ? cn : 1.0;
  for (auto& c : q.c_psd) c /= c_scale;
  q.c_lp /= c_scale;
  return q;
}

class Solver {
 public:
  Solver(const StandardForm& p, const IpmSettings& s) : p_(p), s_(s) {
    nu_ = p.lp_dim;
    for (int n : p.psd_orders) nu_ += n;
    bnorm_ = p.b.norm();
    cnorm_ = frob(p.c_psd, p.c_lp);
  }

  IpmResult run();

 private:
  void initial_point();
  bool assemble_schur();
  Direction direction(double sigma_mu, const std::vector<RMat>* corr,
                      const RVec* corr_lp);

  const StandardForm& p_;
  const IpmSettings& s_;
  double nu_ = 0.0;
  double bnorm_ = 0.0;
  double cnorm_ = 0.0;

  Point z_;
  std::vector<RMat> sinv_;
  RVec sinv_lp_;
  std::vector<RMat> rd_;
  RVec rd_lp_;
  RVec rp_;
  RMat schur_;
  Eigen::LDLT<RMat> schur_ldlt_;
  Eigen::LLT<RMat> schur_llt_;
  bool use_llt_ = true;
};

void Solver::initial_point() {
  const std::size_t nb = p_.psd_orders.size();
  z_.X.resize(nb);
  z_.S.resize(nb);
  std::vector<double> row_norm_in_block;
  for (std::size_t j = 0; j < nb; ++j) {
    const int n = p_.psd_orders[j];
    double xi = std::max(10.0, std::sqrt(double(n)));
    double eta = std::max(10.0, std::sqrt(double(n)));
    double amax = 0.0;
    for (const auto& t : p_.psd_terms[j]) {
      const double an = t.a.norm();
      amax = std::max(amax, an);
      xi = std::max(xi, n * (1.0 + std::abs(p_.b(t.row))) / (1.0 + an));
    }
    eta = std::max(eta, std::max(p_.c_psd[j].norm(), amax));
    z_.X[j] = xi * RMat::Identity(n, n);
    z_.S[j] = eta * RMat::Identity(n, n);
  }
  const int L = p_.lp_dim;
  z_.x = RVec::Zero(L);
  z_.s = RVec::Zero(L);
  for (int l = 0; l < L; ++l) {
    double xi = 10.0;
    double eta = std::max(10.0, std::abs(p_.c_lp(l)));
    for (const auto& t : p_.lp_terms[l]) {
      xi = std::max(xi, (1.0 + std::abs(p_.b(t.row))) / (1.0 + std::abs(t.a)));
      eta = std::max(eta, std::abs(t.a));
    }
    z_.x(l) = xi;
    z_.s(l) = eta;
  }
  z_.y = RVec::Zero(p_.rows);
}

bool Solver::assemble_schur() {
  const int m = p_.rows;
  schur_ = RMat::Zero(m, m);
  const std::size_t nb = p_.psd_orders.size();
  sinv_.resize(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const int n = p_.psd_orders[j];
    Eigen::LLT<RMat> llt(z_.S[j]);
    if (llt.info() != Eigen::Success) return false;
    sinv_[j] = sym(llt.solve(RMat::Identity(n, n)));
    const auto& terms = p_.psd_terms[j];
    std::vector<RMat> g;
    g.reserve(terms.size());
    for (const auto& t : terms) g.push_back(z_.X[j] * t.a * sinv_[j]);
    for (std::size_t u = 0; u < terms.size(); ++u)
      for (std::size_t v = 0; v < terms.size(); ++v)
        schur_(terms[u].row, terms[v].row) +=
            terms[u].a.cwiseProduct(g[v]).sum();
  }
  sinv_lp_ = z_.s.cwiseInverse();
  for (int l = 0; l < p_.lp_dim; ++l) {
    const double w = z_.x(l) * sinv_lp_(l);
    for (const auto& t : p_.lp_terms[l])
      for (const auto& u : p_.lp_terms[l]) schur_(t.row, u.row) += w * t.a * u.a;
  }
  schur_ = sym(schur_);

  schur_llt_.compute(schur_);
  use_llt_ = schur_llt_.info() == Eigen::Success;
  if (!use_llt_) {
    schur_ldlt_.compute(schur_);
    if (schur_ldlt_.info() != Eigen::Success) return false;
  }
  return true;
}

Direction Solver::direction(double sigma_mu, const std::vector<RMat>* corr,
                            const RVec* corr_lp) {
  const std::size_t nb = p_.psd_orders.size();
  Direction d;
  RVec rhs = rp_;
  for (std::size_t j = 0; j < nb; ++j) {
    RMat inner = z_.X[j] * rd_[j];
    if (corr) inner += (*corr)[j];
    const RMat t = sigma_mu * sinv_[j] - z_.X[j] - inner * sinv_[j];
    for (const auto& term : p_.psd_terms[j])
      rhs(term.row) -= term.a.cwiseProduct(t).sum();
  }
  for (int l = 0; l < p_.lp_dim; ++l) {
    double inner = z_.x(l) * rd_lp_(l);
    if (corr_lp) inner += (*corr_lp)(l);
    const double t = sigma_mu * sinv_lp_(l) - z_.x(l) - inner * sinv_lp_(l);
    for (const auto& term : p_.lp_terms[l]) rhs(term.row) -= term.a * t;
  }
  d.dy = use_llt_ ? RVec(schur_llt_.solve(rhs)) : RVec(schur_ldlt_.solve(rhs));

  std::vector<RMat> at;
  RVec at_lp;
  apply_at(p_, d.dy, at, at_lp);
  d.dS.resize(nb);
  d.dX.resize(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    d.dS[j] = rd_[j] - at[j];
    RMat inner = z_.X[j] * d.dS[j];
    if (corr) inner += (*corr)[j];
    d.dX[j] = sym(sigma_mu * sinv_[j] - z_.X[j] - inner * sinv_[j]);
  }
  d.ds = rd_lp_ - at_lp;
  RVec inner = z_.x.cwiseProduct(d.ds);
  if (corr_lp) inner += *corr_lp;
  d.dx = sigma_mu * sinv_lp_ - z_.x - inner.cwiseProduct(sinv_lp_);
  return d;
}

IpmResult Solver::run() {
  IpmResult res;
  initial_point();
  const std::size_t nb = p_.psd_orders.size();
  const double tol = s_.tolerance;

  Point best = z_;
  double best_err = kInf;
  int stalls = 0;

  for (int it = 0; it <= s_.max_iterations; ++it) {
    rp_ = p_.b - apply_a(p_, z_.X, z_.x);
    std::vector<RMat> at;
    RVec at_lp;
    apply_at(p_, z_.y, at, at_lp);
    rd_.resize(nb);
    for (std::size_t j = 0; j < nb; ++j) rd_[j] = p_.c_psd[j] - at[j] - z_.S[j];
    rd_lp_ = p_.c_lp - at_lp - z_.s;

    const double pobj = inner(p_.c_psd, p_.c_lp, z_.X, z_.x);
    const double dobj = p_.b.dot(z_.y);
    const double xs = inner(z_.X, z_.x, z_.S, z_.s);
    const double pinf = rp_.norm() / (1.0 + bnorm_);
    const double dinf = frob(rd_, rd_lp_) / (1.0 + cnorm_);
    const double gap =
        std::max(xs, std::abs(pobj - dobj)) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double err = std::max({pinf, dinf, gap});

    res.iterations = it;
    if (err < best_err) {
      best_err = err;
      best = z_;
      res.primal_objective = pobj;
      res.dual_objective = dobj;
      res.primal_residual = pinf;
      res.dual_residual = dinf;
      res.relative_gap = gap;
    }
    if (err <= tol) {
      res.status = IpmStatus::Optimal;
      break;
    }

    // Farkas ray: b^T y = 1 with A^T y <= tol proves A(X) = b has no PSD
    // solution of trace below 1 / tol.
    if (dobj > 0.0) {
      const RVec ybar = z_.y / dobj;
      std::vector<RMat> aty;
      RVec aty_lp;
      apply_at(p_, ybar, aty, aty_lp);
      double lmax = aty_lp.size() ? aty_lp.maxCoeff() : -kInf;
      for (const auto& m : aty) lmax = std::max(lmax, max_eigenvalue(m));
      if (lmax <= tol) {
        res.status = IpmStatus::PrimalInfeasible;
        res.certificate_y = ybar;
        best = z_;
        break;
      }
    }
    // Improving ray: X >= 0 with <C, X> = -1 and A(X) ~ 0.
    if (pobj < 0.0) {
      std::vector<RMat> xbar = z_.X;
      for (auto& m : xbar) m /= -pobj;
      const RVec ax = apply_a(p_, xbar, z_.x / -pobj);
      if (ax.norm() <= tol) {
        res.status = IpmStatus::DualInfeasible;
        best = z_;
        break;
      }
    }
    if (it == s_.max_iterations) break;

    if (!assemble_schur()) break;

    const double mu = xs / nu_;
    Direction pred = direction(0.0, nullptr, nullptr);
    const double ap = std::min(1.0, max_step(z_.X, z_.x, pred.dX, pred.dx));
    const double ad = std::min(1.0, max_step(z_.S, z_.s, pred.dS, pred.ds));

    std::vector<RMat> xa(nb), sa(nb);
    for (std::size_t j = 0; j < nb; ++j) {
      xa[j] = z_.X[j] + ap * pred.dX[j];
      sa[j] = z_.S[j] + ad * pred.dS[j];
    }
    const double mu_aff =
        inner(xa, z_.x + ap * pred.dx, sa, z_.s + ad * pred.ds) / nu_;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    std::vector<RMat> corr(nb);
    for (std::size_t j = 0; j < nb; ++j) corr[j] = pred.dX[j] * pred.dS[j];
    const RVec corr_lp = pred.dx.cwiseProduct(pred.ds);
    Direction d = direction(sigma * mu, &corr, &corr_lp);

    const double gamma = 0.9 + 0.09 * std::min(ap, ad);
    const double alpha_p =
        std::min(1.0, gamma * max_step(z_.X, z_.x, d.dX, d.dx));
    const double alpha_d =
        std::min(1.0, gamma * max_step(z_.S, z_.s, d.dS, d.ds));
    if (!(alpha_p > 1e-12) && !(alpha_d > 1e-12)) {
      if (++stalls >= 3) break;
    } else {
      stalls = 0;
    }

    for (std::size_t j = 0; j < nb; ++j) {
      z_.X[j] = sym(z_.X[j] + alpha_p * d.dX[j]);
      z_.S[j] = sym(z_.S[j] + alpha_d * d.dS[j]);
    }
    z_.x += alpha_p * d.dx;
    z_.y += alpha_d * d.dy;
    z_.s += alpha_d * d.ds;
  }

  if (res.status == IpmStatus::PrimalInfeasible ||
      res.status == IpmStatus::DualInfeasible) {
    res.primal_objective = inner(p_.c_psd, p_.c_lp, best.X, best.x);
    res.dual_objective = p_.b.dot(best.y);
  }
  res.x_psd = std::move(best.X);
  res.x_lp = std::move(best.x);
  res.y = std::move(best.y);
  res.s_psd = std::move(best.S);
  res.s_lp = std::move(best.s);
  return res;
}

}  // namespace

IpmResult solve_standard_form(const StandardForm& problem,
                              const IpmSettings& settings) {
  if (!settings.equilibrate) return Solver(problem, settings).run();

  RVec row_scale;
  double x_scale = 1.0, c_scale = 1.0;
  const StandardForm scaled = equilibrate(problem, row_scale, x_scale, c_scale);
  IpmResult r = Solver(scaled, settings).run();

  for (auto& m : r.x_psd) m *= x_scale;
  r.x_lp *= x_scale;
  for (auto& m : r.s_psd) m *= c_scale;
  r.s_lp *= c_scale;
  r.y = c_scale * r.y.cwiseProduct(row_scale);
  r.primal_objective *= c_scale * x_scale;
  r.dual_objective *= c_scale * x_scale;
  if (r.certificate_y.size())
    r.certificate_y = r.certificate_y.cwiseProduct(row_scale) / x_scale;
  return r;
}

}  // namespace dmaswipt::conic::detail
