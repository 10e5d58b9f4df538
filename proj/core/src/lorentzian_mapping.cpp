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

#include "dmaswipt/lorentzian_mapping.hpp"

#include <algorithm>
#include <cmath>

#include "dmaswipt/errors.hpp"

namespace dmaswipt {

MappingScheme parse_mapping_scheme(std::string_view text) {
  if (text == "arlch") return MappingScheme::Arlch;
  if (text == "lcph") return MappingScheme::Lcph;
  if (text == "lcush") return MappingScheme::Lcush;
  if (text == "aoh") return MappingScheme::Aoh;
  if (text == "uw" || text == "none") return MappingScheme::None;
  throw ConfigError("unknown mapping scheme '" + std::string(text) +
                    "' (arlch|lcph|lcush|aoh|uw)");
}

std::string to_string(MappingScheme scheme) {
  switch (scheme) {
    case MappingScheme::Arlch:
      return "arlch";
    case MappingScheme::Lcph:
      return "lcph";
    case MappingScheme::Lcush:
      return "lcush";
    case MappingScheme::Aoh:
      return "aoh";
    case MappingScheme::None:
      return "uw";
  }
  return "uw";
}

namespace {

double phase_of(cdouble q) { return wrap_phase(std::arg(q)); }

// sin(t) e^{jt} = (j + e^{j(2t - pi/2)}) / 2 for every real t, so this form
// stays on the circle; rounding is the only error.
cdouble sine_weight(double theta) {
  return lorentzian_weight(2.0 * theta - 0.5 * kPi);
}

template <class F>
DmaWeights map_each(const DmaWeights& q, F f) {
  CVec out(q.size());
  for (int n = 0; n < q.size(); ++n) out(n) = f(q.values()(n));
  return DmaWeights::lorentzian(std::move(out), q.n_rows(), q.n_cols());
}

}  // namespace

DmaWeights map_lcph(const DmaWeights& q) {
  return map_each(q, [](cdouble v) {
    const double psi = phase_of(v);
    return psi <= kPi ? sine_weight(psi) : lorentzian_weight(1.5 * kPi);
  });
}

DmaWeights map_lcush(const DmaWeights& q) {
  return map_each(q, [](cdouble v) { return lorentzian_weight(phase_of(v)); });
}

DmaWeights map_aoh(const DmaWeights& q) {
  return map_each(q, [](cdouble v) {
    const double psi = phase_of(v);
    const double x = std::clamp(0.5 * (1.0 + std::cos(psi)), 0.0, 1.0);
    return sine_weight(std::asin(x));
  });
}

double arlch_discrepancy(const CVec& q, double r) {
  double d = 0.0;
  for (Eigen::Index n = 0; n < q.size(); ++n) {
    const double e = std::abs(q(n) - cdouble(0.0, 0.5 * r)) - 0.5 * r;
    d += e * e;
  }
  return d;
}

RVec arlch_phases(const CVec& q, double r) {
  RVec phi(q.size());
  for (Eigen::Index n = 0; n < q.size(); ++n) {
    const cdouble v = q(n) - cdouble(0.0, 0.5 * r);
    phi(n) = v == cdouble(0.0, 0.0) ? 0.5 * kPi : phase_of(v);
  }
  return phi;
}

ArlchResult map_arlch(const DmaWeights& q) {
  const CVec& v = q.values();
  if (v.size() == 0 || v.cwiseAbs().maxCoeff() == 0.0)
    throw DomainError("ARLCH mapping needs a nonzero weight vector");

  double rmax = 0.0;
  for (Eigen::Index n = 0; n < v.size(); ++n)
    rmax = std::max(rmax, std::abs(v(n) - kJ));
  rmax = 2.0 * rmax + 1.0;

  constexpr int kGrid = 400;
  const double h = rmax / kGrid;
  int best = 1;
  double dbest = arlch_discrepancy(v, h);
  for (int i = 2; i <= kGrid; ++i) {
    const double d = arlch_discrepancy(v, i * h);
    if (d < dbest) {
      dbest = d;
      best = i;
    }
  }

  // Golden-section refinement on the bracketing cell pair.
  double lo = std::max((best - 1) * h, 1e-12);
  double hi = std::min((best + 1) * h, rmax);
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  double f1 = arlch_discrepancy(v, x1), f2 = arlch_discrepancy(v, x2);
  while (hi - lo >= 1e-6) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = arlch_discrepancy(v, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = arlch_discrepancy(v, x2);
    }
  }

  ArlchResult out;
  out.radius = best * h;
  out.discrepancy = dbest;
  for (double r : {x1, x2, 0.5 * (lo + hi), 1.0}) {
    const double d = arlch_discrepancy(v, r);
    if (d < out.discrepancy) {
      out.discrepancy = d;
      out.radius = r;
    }
  }
  out.phases = arlch_phases(v, out.radius);
  CVec w(v.size());
  for (Eigen::Index n = 0; n < v.size(); ++n) w(n) = lorentzian_weight(out.phases(n));
  out.weights = DmaWeights::lorentzian(std::move(w), q.n_rows(), q.n_cols());
  return out;
}

DmaWeights map_weights(const DmaWeights& q, MappingScheme scheme) {
  switch (scheme) {
    case MappingScheme::Arlch:
      return map_arlch(q).weights;
    case MappingScheme::Lcph:
      return map_lcph(q);
    case MappingScheme::Lcush:
      return map_lcush(q);
    case MappingScheme::Aoh:
      return map_aoh(q);
    case MappingScheme::None:
      return q;
  }
  return q;
}

}  // namespace dmaswipt
