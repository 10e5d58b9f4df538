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

#include "dmaswipt/precoder_optimizer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "dmaswipt/errors.hpp"
#include "dmaswipt/rank_one.hpp"
#include "dmaswipt/units.hpp"

namespace dmaswipt {

using conic::LinearExpr;
using conic::Sense;

PsMode PsMode::fixed(double rho) {
  if (!(rho >= kRhoEpsilon && rho <= 1.0 - kRhoEpsilon))
    throw DomainError("fixed power-splitting ratio must lie in (0, 1)");
  return {Kind::Fixed, rho};
}

PsMode parse_ps_mode(std::string_view text) {
  if (text == "ops") return PsMode::optimal();
  if (text == "eps") return PsMode::equal();
  if (text.substr(0, 6) == "fixed:") {
    const std::string_view v = text.substr(6);
    double rho = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), rho);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw ConfigError("bad power-splitting ratio '" + std::string(v) + "'");
    try {
      return PsMode::fixed(rho);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("unknown power-splitting mode '" + std::string(text) +
                    "' (ops|eps|fixed:R)");
}

std::string format_ps_mode(const PsMode& mode) {
  switch (mode.kind) {
    case PsMode::Kind::Optimal:
      return "ops";
    case PsMode::Kind::Equal:
      return "eps";
    case PsMode::Kind::Fixed:
      return "fixed:" + format_double(mode.rho);
  }
  return "ops";
}

namespace {

void check_inputs(const PrecoderProblemInputs& in) {
  const int k = static_cast<int>(in.channels.size());
  const Eigen::Index nr = in.gram.rows();
  if (in.gram.cols() != nr) throw DimensionError("Z must be square");
  if (k > nr)
    throw UnsupportedConfigurationError(
        "more users than RF chains: one precoder per user is required");
  if (in.targets.users() != k ||
      static_cast<int>(in.rf_threshold.size()) != k)
    throw DimensionError("targets and thresholds must have one entry per user");
  in.targets.validate();
  for (const auto& a : in.channels)
    if (a.size() != nr) throw DimensionError("channel length differs from Z");
  for (double p : in.rf_threshold)
    if (!(p >= 0.0) || !std::isfinite(p))
      throw DomainError("RF-power thresholds must be finite and >= 0");
}

double pinned_rho(const PsMode& mode) {
  return mode.kind == PsMode::Kind::Equal ? 0.5 : mode.rho;
}

}  // namespace

PrecoderProgram build_precoder_problem(const PrecoderProblemInputs& in) {
  check_inputs(in);
  const int k_users = static_cast<int>(in.channels.size());
  const int nr = static_cast<int>(in.gram.rows());
  const auto& tg = in.targets;

  // Work in units where the strongest P_k has unit norm and the largest
  // right-hand side is one.
  double g = 0.0;
  for (const auto& a : in.channels) g = std::max(g, a.squaredNorm());
  double s = 0.0;
  for (int k = 0; k < k_users; ++k)
    s = std::max({s, tg.antenna_noise[k] + tg.conversion_noise[k],
                  in.rf_threshold[k]});
  if (!(g > 0.0)) g = 1.0;
  if (!(s > 0.0)) s = 1.0;
  const double zscale = std::max(in.gram.cwiseAbs().maxCoeff(), 1e-300);

  PrecoderProgram out;
  out.covariance_scale = s / g;
  auto& p = out.problem;
  for (int k = 0; k < k_users; ++k)
    out.covariance.push_back(p.add_hermitian_psd(nr));

  std::vector<CMat> ph;
  for (const auto& a : in.channels) ph.push_back((a * a.adjoint()) / g);

  LinearExpr obj;
  for (int k = 0; k < k_users; ++k) obj.add(out.covariance[k], in.gram / zscale);
  p.minimize(obj);

  const bool ops = !in.mode.pinned();
  for (int k = 0; k < k_users; ++k) {
    const double sa = tg.antenna_noise[k] / s;
    const double sc = tg.conversion_noise[k] / s;
    const double pth = in.rf_threshold[k] / s;

    LinearExpr sinr_row, eh_row;
    for (int m = 0; m < k_users; ++m) {
      sinr_row.add(out.covariance[m], m == k ? CMat(ph[k] / tg.sinr[k])
                                             : CMat(-ph[k]));
      eh_row.add(out.covariance[m], ph[k]);
    }
    if (ops) {
      const auto rho = p.add_scalar(kRhoEpsilon, 1.0 - kRhoEpsilon);
      const auto u = p.add_scalar(0.0);
      const auto v = p.add_scalar(0.0);
      out.rho.push_back(rho);
      out.sinr_epigraph.push_back(u);
      out.eh_epigraph.push_back(v);
      sinr_row.add(u, -1.0);
      eh_row.add(v, -1.0);
      out.sinr_rows.push_back(
          p.add_constraint(std::move(sinr_row), Sense::GreaterEqual, sa));
      out.eh_rows.push_back(
          p.add_constraint(std::move(eh_row), Sense::GreaterEqual, 0.0));
      // u rho >= sc and v (1 - rho) >= pth.
      p.add_rotated_cone(LinearExpr().add(u, 1.0), LinearExpr().add(rho, 1.0),
                         LinearExpr(std::sqrt(sc)));
      p.add_rotated_cone(LinearExpr().add(v, 1.0),
                         LinearExpr(1.0).add(rho, -1.0),
                         LinearExpr(std::sqrt(pth)));
    } else {
      const double rho = pinned_rho(in.mode);
      out.sinr_rows.push_back(p.add_constraint(
          std::move(sinr_row), Sense::GreaterEqual, sa + sc / rho));
      out.eh_rows.push_back(p.add_constraint(
          std::move(eh_row), Sense::GreaterEqual, pth / (1.0 - rho)));
    }
  }
  return out;
}

bool UserMargins::satisfied(double tol) const {
  for (double m : sinr)
    if (!(m >= -tol)) return false;
  for (double m : eh)
    if (!(m >= -tol)) return false;
  return true;
}

UserMargins precoder_margins(const std::vector<CVec>& channels,
                             const PrecoderSet& precoders, const PsRatios& rho,
                             const QosTargets& targets,
                             const std::vector<double>& rf_threshold) {
  UserMargins out;
  for (std::size_t k = 0; k < channels.size(); ++k) {
    const auto gains = received_gains(channels[k], precoders);
    const int kk = static_cast<int>(k);
    const double s = sinr_from_gains(gains, kk, rho[k], targets.antenna_noise[k],
                                     targets.conversion_noise[k]);
    const double e = eh_power_from_gains(gains, rho[k]);
    out.sinr.push_back(s / targets.sinr[k] - 1.0);
    out.eh.push_back(rf_threshold[k] > 0.0
                         ? e / rf_threshold[k] - 1.0
                         : std::numeric_limits<double>::infinity());
  }
  return out;
}

PrecoderSolution optimize_precoder_ps(const PrecoderProblemInputs& in,
                                      const conic::SolverOptions& options) {
  PrecoderSolution out;
  const int k_users = static_cast<int>(in.channels.size());
  if (k_users == 0) {
    check_inputs(in);
    out.status = conic::SolveStatus::Optimal;
    out.verified = true;
    return out;
  }
  const PrecoderProgram prog = build_precoder_problem(in);
  const conic::ConicSolution sol = conic::solve(prog.problem, options);
  out.status = sol.status;
  out.solver_iterations = sol.iterations;

  if (sol.status == conic::SolveStatus::Infeasible) {
    double ymax = 0.0;
    for (double y : sol.constraint_duals) ymax = std::max(ymax, y);
    for (int k = 0; k < k_users; ++k) {
      const double y = std::max(sol.constraint_duals[prog.sinr_rows[k]],
                                sol.constraint_duals[prog.eh_rows[k]]);
      if (ymax > 0.0 && y > 1e-6 * ymax) out.binding_users.push_back(k);
    }
    return out;
  }
  if (sol.status != conic::SolveStatus::Optimal) return out;

  for (int k = 0; k < k_users; ++k) {
    CMat wk = prog.covariance_scale * sol.hermitian[prog.covariance[k].id];
    const RankOneFactor f = extract_rank_one(wk);
    out.covariances.push_back(std::move(wk));
    out.precoders.push_back(f.vector);
    out.rank_ratio.push_back(f.ratio);
    out.rank_warning = out.rank_warning || f.degraded;
    if (in.mode.pinned()) {
      out.rho.push_back(pinned_rho(in.mode));
    } else {
      out.rho.push_back(std::clamp(sol.scalars[prog.rho[k].id], kRhoEpsilon,
                                   1.0 - kRhoEpsilon));
    }
  }
  for (int k = 0; k < k_users; ++k) {
    out.objective += (in.gram * out.covariances[k]).trace().real();
    out.transmit_power +=
        out.precoders[k].dot(in.gram * out.precoders[k]).real();
  }
  out.margins = precoder_margins(in.channels, out.precoders, out.rho,
                                 in.targets, in.rf_threshold);
  out.verified = out.margins.satisfied(kMarginTolerance);
  return out;
}

}  // namespace dmaswipt
