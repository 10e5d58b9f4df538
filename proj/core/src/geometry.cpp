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

#include "dmaswipt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dmaswipt/errors.hpp"

namespace dmaswipt {

namespace {

double norm3(const Point3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

double ArrayGeometry::aperture() const {
  if (aperture_override) return *aperture_override;
  return (n_cols - 1) * wavelength() / 2.0;
}

double ArrayGeometry::fraunhofer() const {
  return fraunhofer_distance(aperture(), wavelength());
}

Point3 ArrayGeometry::element_position(int row, int col) const {
  double x = col * dx();
  double y = row * dy();
  if (origin == ArrayOrigin::Center) {
    x -= 0.5 * (n_cols - 1) * dx();
    y -= 0.5 * (n_rows - 1) * dy();
  }
  return {x, y, 0.0};
}

void ArrayGeometry::validate() const {
  if (n_rows < 1 || n_cols < 1)
    throw DomainError("array needs at least one row and one column");
  if (!(carrier_frequency > 0.0))
    throw DomainError("carrier frequency must be positive");
  if (!(dx() > 0.0) || !(dy() > 0.0))
    throw DomainError("element spacing must be positive");
  if (gain_exponent < 0.0) throw DomainError("gain exponent must be >= 0");
}

double element_gain(double psi, double gain_exponent) {
  if (!(psi >= 0.0 && psi <= kPi))
    throw DomainError("boresight angle outside [0, pi]: " +
                      std::to_string(psi));
  if (gain_exponent < 0.0) throw DomainError("gain exponent must be >= 0");
  if (psi > kPi / 2.0) return 0.0;
  return 6.0 * std::pow(std::cos(psi), gain_exponent);
}

cdouble channel_entry(const UserPosition& user, const Point3& element,
                      const ArrayGeometry& geometry) {
  const Point3 r{user[0] - element[0], user[1] - element[1],
                 user[2] - element[2]};
  const double d = norm3(r);
  if (!(d > 0.0))
    throw SingularityError("user position coincides with an array element");
  // Angle between +z and the element-to-user direction.
  const double cos_psi = std::clamp(r[2] / d, -1.0, 1.0);
  const double gain = element_gain(std::acos(cos_psi), geometry.gain_exponent);
  const double lambda = geometry.wavelength();
  const double amplitude = std::sqrt(gain) * lambda / (4.0 * kPi * d);
  return std::polar(amplitude, -geometry.wavenumber() * d);
}

CVec channel_vector(const ArrayGeometry& geometry, const UserPosition& user) {
  geometry.validate();
  CVec gamma(geometry.num_elements());
  for (int i = 0; i < geometry.n_rows; ++i)
    for (int l = 0; l < geometry.n_cols; ++l)
      gamma(geometry.element_index(i, l)) = std::conj(
          channel_entry(user, geometry.element_position(i, l), geometry));
  return gamma;
}

std::vector<CVec> channel_vectors(const ArrayGeometry& geometry,
                                  const std::vector<UserPosition>& users) {
  std::vector<CVec> out;
  out.reserve(users.size());
  for (const auto& u : users) out.push_back(channel_vector(geometry, u));
  return out;
}

double fraunhofer_distance(double aperture, double wavelength) {
  if (!(aperture > 0.0) || !(wavelength > 0.0))
    throw DomainError("aperture and wavelength must be positive");
  return 2.0 * aperture * aperture / wavelength;
}

}  // namespace dmaswipt
