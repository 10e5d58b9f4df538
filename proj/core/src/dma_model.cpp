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

#include "dmaswipt/dma_model.hpp"

#include <cmath>
#include <string>

#include "dmaswipt/errors.hpp"

namespace dmaswipt {

WaveguideModel WaveguideModel::uniform(const ArrayGeometry& geometry,
                                       double alpha, double beta) {
  WaveguideModel wg;
  wg.attenuation.assign(geometry.n_rows, alpha);
  wg.propagation.assign(geometry.n_rows, beta);
  wg.offsets.resize(geometry.n_rows);
  for (auto& strip : wg.offsets) {
    strip.resize(geometry.n_cols);
    for (int l = 0; l < geometry.n_cols; ++l) strip[l] = l * geometry.dx();
  }
  return wg;
}

void WaveguideModel::validate(const ArrayGeometry& geometry) const {
  const auto rows = static_cast<std::size_t>(geometry.n_rows);
  if (attenuation.size() != rows || propagation.size() != rows ||
      offsets.size() != rows)
    throw DimensionError("waveguide model needs one entry per microstrip");
  for (std::size_t i = 0; i < rows; ++i) {
    if (attenuation[i] < 0.0)
      throw DomainError("attenuation constant must be nonnegative");
    if (offsets[i].size() != static_cast<std::size_t>(geometry.n_cols))
      throw DimensionError("element offsets must cover every column");
    for (std::size_t l = 1; l < offsets[i].size(); ++l)
      if (!(offsets[i][l] > offsets[i][l - 1]))
        throw DomainError("element offsets must increase along a microstrip");
  }
}

CMat PropagationMatrix::dense() const { return diagonal.asDiagonal(); }

PropagationMatrix propagation_matrix(const WaveguideModel& waveguide,
                                     const ArrayGeometry& geometry) {
  waveguide.validate(geometry);
  PropagationMatrix h;
  h.diagonal.resize(geometry.num_elements());
  for (int i = 0; i < geometry.n_rows; ++i) {
    const cdouble gamma{waveguide.attenuation[i], waveguide.propagation[i]};
    for (int l = 0; l < geometry.n_cols; ++l)
      h.diagonal(geometry.element_index(i, l)) =
          std::exp(-waveguide.offsets[i][l] * gamma);
  }
  return h;
}

DmaWeights::DmaWeights(CVec values, int n_rows, int n_cols,
                       WeightDomain domain)
    : values_(std::move(values)),
      n_rows_(n_rows),
      n_cols_(n_cols),
      domain_(domain) {
  if (n_rows < 1 || n_cols < 1 || values_.size() != n_rows * n_cols)
    throw DimensionError("DMA weight vector must have N_r * N_c entries");
}

DmaWeights DmaWeights::unconstrained(CVec values, int n_rows, int n_cols) {
  return DmaWeights(std::move(values), n_rows, n_cols,
                    WeightDomain::Unconstrained);
}

DmaWeights DmaWeights::lorentzian(CVec values, int n_rows, int n_cols) {
  for (Eigen::Index n = 0; n < values.size(); ++n)
    if (!on_lorentzian_circle(values(n)))
      throw DomainError("weight " + std::to_string(n) +
                        " is off the Lorentzian circle");
  return DmaWeights(std::move(values), n_rows, n_cols,
                    WeightDomain::Lorentzian);
}

CMat DmaWeights::block_matrix() const {
  CMat q = CMat::Zero(size(), n_rows_);
  for (int n = 0; n < size(); ++n) q(n, strip_of(n)) = values_(n);
  return q;
}

bool on_lorentzian_circle(cdouble q, double tolerance) {
  return std::abs(std::abs(q - 0.5 * kJ) - 0.5) <= tolerance;
}

cdouble lorentzian_weight(double phi) {
  return 0.5 * (kJ + std::polar(1.0, wrap_phase(phi)));
}

QosTargets QosTargets::uniform(int users, double sinr, double eh_threshold,
                               double antenna_noise, double conversion_noise) {
  QosTargets t;
  t.sinr.assign(users, sinr);
  t.eh_threshold.assign(users, eh_threshold);
  t.antenna_noise.assign(users, antenna_noise);
  t.conversion_noise.assign(users, conversion_noise);
  return t;
}

void QosTargets::validate() const {
  const auto k = sinr.size();
  if (eh_threshold.size() != k || antenna_noise.size() != k ||
      conversion_noise.size() != k)
    throw DimensionError("QoS target vectors must have one entry per user");
  for (std::size_t i = 0; i < k; ++i) {
    if (!(sinr[i] > 0.0)) throw DomainError("SINR target must be positive");
    if (eh_threshold[i] < 0.0)
      throw DomainError("EH threshold must be nonnegative");
    if (antenna_noise[i] < 0.0 || conversion_noise[i] < 0.0)
      throw DomainError("noise variances must be nonnegative");
  }
}

void validate_ps_ratios(const PsRatios& rho, double eps) {
  for (double r : rho)
    if (!(r >= eps && r <= 1.0 - eps))
      throw DomainError("power-splitting ratio outside [eps, 1 - eps]: " +
                        std::to_string(r));
}

CVec effective_channel(const CVec& gamma, const PropagationMatrix& h,
                       const DmaWeights& q) {
  if (gamma.size() != q.size() || h.diagonal.size() != q.size())
    throw DimensionError("channel, H and q must all have N entries");
  // Row i of a^H collects strip i: sum_l conj(gamma_n) H_n q_n.
  CVec a_conj = CVec::Zero(q.n_rows());
  for (int n = 0; n < q.size(); ++n)
    a_conj(q.strip_of(n)) +=
        std::conj(gamma(n)) * h.diagonal(n) * q.values()(n);
  return a_conj.conjugate();
}

std::vector<CVec> effective_channels(const std::vector<CVec>& gammas,
                                     const PropagationMatrix& h,
                                     const DmaWeights& q) {
  std::vector<CVec> out;
  out.reserve(gammas.size());
  for (const auto& g : gammas) out.push_back(effective_channel(g, h, q));
  return out;
}

CMat precoder_gram(const PropagationMatrix& h, const DmaWeights& q) {
  if (h.diagonal.size() != q.size())
    throw DimensionError("H and q must have N entries");
  CMat z = CMat::Zero(q.n_rows(), q.n_rows());
  for (int n = 0; n < q.size(); ++n)
    z(q.strip_of(n), q.strip_of(n)) += std::norm(h.diagonal(n) * q.values()(n));
  return z;
}

CVec radiated_signal(const PropagationMatrix& h, const DmaWeights& q,
                     const CVec& w) {
  if (w.size() != q.n_rows())
    throw DimensionError("precoder length must equal the number of strips");
  if (h.diagonal.size() != q.size())
    throw DimensionError("H and q must have N entries");
  CVec x(q.size());
  for (int n = 0; n < q.size(); ++n)
    x(n) = h.diagonal(n) * q.values()(n) * w(q.strip_of(n));
  return x;
}

double transmit_power(const PropagationMatrix& h, const DmaWeights& q,
                      const PrecoderSet& precoders) {
  double p = 0.0;
  for (const auto& w : precoders) p += radiated_signal(h, q, w).squaredNorm();
  return p;
}

std::vector<double> received_gains(const CVec& a,
                                   const PrecoderSet& precoders) {
  std::vector<double> g;
  g.reserve(precoders.size());
  for (const auto& w : precoders) {
    if (w.size() != a.size())
      throw DimensionError("precoder and effective channel lengths differ");
    g.push_back(std::norm(a.dot(w)));  // dot() conjugates a
  }
  return g;
}

double sinr_from_gains(const std::vector<double>& gains, int k, double rho,
                       double antenna_noise, double conversion_noise) {
  if (!(rho > 0.0))
    throw SingularityError("SINR undefined for power-splitting ratio 0");
  double interference = 0.0;
  for (std::size_t m = 0; m < gains.size(); ++m)
    if (static_cast<int>(m) != k) interference += gains[m];
  return gains.at(k) /
         (interference + antenna_noise + conversion_noise / rho);
}

double eh_power_from_gains(const std::vector<double>& gains, double rho) {
  double total = 0.0;
  for (double g : gains) total += g;
  return (1.0 - rho) * total;
}

double sinr(int k, const std::vector<CVec>& channels,
            const PropagationMatrix& h, const DmaWeights& q,
            const PrecoderSet& precoders, double rho,
            const QosTargets& targets) {
  const CVec a = effective_channel(channels.at(k), h, q);
  return sinr_from_gains(received_gains(a, precoders), k, rho,
                         targets.antenna_noise.at(k),
                         targets.conversion_noise.at(k));
}

double eh_received_power(int k, const std::vector<CVec>& channels,
                         const PropagationMatrix& h, const DmaWeights& q,
                         const PrecoderSet& precoders, double rho) {
  const CVec a = effective_channel(channels.at(k), h, q);
  return eh_power_from_gains(received_gains(a, precoders), rho);
}

}  // namespace dmaswipt
