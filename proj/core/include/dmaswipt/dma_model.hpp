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

#ifndef DMASWIPT_DMA_MODEL_HPP
#define DMASWIPT_DMA_MODEL_HPP

#include <vector>

#include "dmaswipt/geometry.hpp"
#include "dmaswipt/types.hpp"

namespace dmaswipt {

inline constexpr double kLorentzianTolerance = 1e-9;
inline constexpr double kRhoEpsilon = 1e-4;

// Reference-wave propagation inside each microstrip: attenuation alpha_i
// [1/m], propagation constant beta_i [rad/m] and the feed-relative offset
// d_{i,l} [m] of every element.
struct WaveguideModel {
  std::vector<double> attenuation;
  std::vector<double> propagation;
  std::vector<std::vector<double>> offsets;

  // Same alpha/beta on every microstrip, offsets (l-1) * dx.
  static WaveguideModel uniform(const ArrayGeometry& geometry,
                                double alpha = 0.6, double beta = 827.67);

  void validate(const ArrayGeometry& geometry) const;
};

// Diagonal of H; H itself is never formed outside tests.
struct PropagationMatrix {
  CVec diagonal;
  CMat dense() const;
};

PropagationMatrix propagation_matrix(const WaveguideModel& waveguide,
                                     const ArrayGeometry& geometry);

enum class WeightDomain { Unconstrained, Lorentzian };

// One complex weight per metasurface element in channel-vector order. The
// block-diagonal Q (N x N_r) is implied by the strip layout.
class DmaWeights {
 public:
  DmaWeights() = default;
  static DmaWeights unconstrained(CVec values, int n_rows, int n_cols);
  // Throws DomainError unless every entry lies on |q - j/2| = 1/2.
  static DmaWeights lorentzian(CVec values, int n_rows, int n_cols);

  const CVec& values() const { return values_; }
  WeightDomain domain() const { return domain_; }
  int n_rows() const { return n_rows_; }
  int n_cols() const { return n_cols_; }
  int size() const { return static_cast<int>(values_.size()); }
  int strip_of(int element) const { return element / n_cols_; }

  // Dense N x N_r block-diagonal embedding.
  CMat block_matrix() const;

 private:
  DmaWeights(CVec values, int n_rows, int n_cols, WeightDomain domain);

  CVec values_;
  int n_rows_ = 0;
  int n_cols_ = 0;
  WeightDomain domain_ = WeightDomain::Unconstrained;
};

bool on_lorentzian_circle(cdouble q, double tolerance = kLorentzianTolerance);

// (j + e^{j phi}) / 2.
cdouble lorentzian_weight(double phi);

// Digital precoders w_m in C^{N_r}, one per served user.
using PrecoderSet = std::vector<CVec>;

// Per-user QoS and noise figures, all linear (watts, ratios).
struct QosTargets {
  std::vector<double> sinr;              // delta_k
  std::vector<double> eh_threshold;      // E_k^th [W]
  std::vector<double> antenna_noise;     // sigma_a,k^2 [W]
  std::vector<double> conversion_noise;  // sigma_c,k^2 [W]

  static QosTargets uniform(int users, double sinr, double eh_threshold,
                            double antenna_noise, double conversion_noise);
  int users() const { return static_cast<int>(sinr.size()); }
  void validate() const;
};

using PsRatios = std::vector<double>;

// Throws DomainError unless each ratio lies in [eps, 1 - eps].
void validate_ps_ratios(const PsRatios& rho, double eps = kRhoEpsilon);

// a_k with a_k^H = gamma_k^H H Q.
CVec effective_channel(const CVec& gamma, const PropagationMatrix& h,
                       const DmaWeights& q);
std::vector<CVec> effective_channels(const std::vector<CVec>& gammas,
                                     const PropagationMatrix& h,
                                     const DmaWeights& q);

// Z = (HQ)^H HQ, diagonal because distinct strips radiate from disjoint
// element sets.
CMat precoder_gram(const PropagationMatrix& h, const DmaWeights& q);

// Radiated signal H Q w.
CVec radiated_signal(const PropagationMatrix& h, const DmaWeights& q,
                     const CVec& w);

// sum_m ||H Q w_m||^2 for unit-power uncorrelated symbols.
double transmit_power(const PropagationMatrix& h, const DmaWeights& q,
                      const PrecoderSet& precoders);

// |a^H w_m|^2 for every precoder.
std::vector<double> received_gains(const CVec& a, const PrecoderSet& precoders);

// SINR of user k given its per-beam gains |a_k^H w_m|^2.
double sinr_from_gains(const std::vector<double>& gains, int k, double rho,
                       double antenna_noise, double conversion_noise);

// (1 - rho) sum_m gains_m.
double eh_power_from_gains(const std::vector<double>& gains, double rho);

double sinr(int k, const std::vector<CVec>& channels,
            const PropagationMatrix& h, const DmaWeights& q,
            const PrecoderSet& precoders, double rho, const QosTargets& targets);

double eh_received_power(int k, const std::vector<CVec>& channels,
                         const PropagationMatrix& h, const DmaWeights& q,
                         const PrecoderSet& precoders, double rho);

}  // namespace dmaswipt

#endif  // DMASWIPT_DMA_MODEL_HPP
