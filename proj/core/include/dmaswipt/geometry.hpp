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

#ifndef DMASWIPT_GEOMETRY_HPP
#define DMASWIPT_GEOMETRY_HPP

#include <array>
#include <optional>
#include <vector>

#include "dmaswipt/types.hpp"

namespace dmaswipt {

using Point3 = std::array<double, 3>;

// Where the element grid is anchored in the xy-plane.
enum class ArrayOrigin {
  Center,        // array centroid at (0, 0, 0)
  FirstElement,  // element (1,1) at (0, 0, 0)
};

// Uniform planar array in the xy-plane, boresight along +z. Rows (index i)
// run along y and are the microstrips; columns (index l) run along x.
struct ArrayGeometry {
  int n_rows = 4;
  int n_cols = 8;
  double carrier_frequency = 28e9;  // Hz
  // Spacings default to lambda/2 when left unset.
  std::optional<double> spacing_x;
  std::optional<double> spacing_y;
  double gain_exponent = 2.0;
  ArrayOrigin origin = ArrayOrigin::Center;
  // Overrides the (N_c - 1) * lambda/2 aperture used for d_F.
  std::optional<double> aperture_override;

  double wavelength() const { return kSpeedOfLight / carrier_frequency; }
  double wavenumber() const { return kTwoPi / wavelength(); }
  double dx() const { return spacing_x.value_or(wavelength() / 2.0); }
  double dy() const { return spacing_y.value_or(wavelength() / 2.0); }
  int num_elements() const { return n_rows * n_cols; }
  double aperture() const;
  double fraunhofer() const;

  // Flat element index of (row i, column l), both zero-based.
  int element_index(int row, int col) const { return row * n_cols + col; }
  Point3 element_position(int row, int col) const;

  // Throws DomainError on nonpositive counts, spacings or frequency.
  void validate() const;
};

using UserPosition = Point3;

// 6 cos^g(psi) on [0, pi/2], zero on (pi/2, pi].
double element_gain(double psi, double gain_exponent);

// Near-field LoS coefficient between one element and one user:
// sqrt(G_e(psi)) * lambda / (4 pi d) * exp(-j beta_0 d).
cdouble channel_entry(const UserPosition& user, const Point3& element,
                      const ArrayGeometry& geometry);

// Per-user channel gamma_k, ordered (1,1), (1,2), ..., (N_r, N_c). Entries are
// the complex conjugates of channel_entry(), so gamma_k^H x is the signal a
// user receives from the element excitation x.
CVec channel_vector(const ArrayGeometry& geometry, const UserPosition& user);

std::vector<CVec> channel_vectors(const ArrayGeometry& geometry,
                                  const std::vector<UserPosition>& users);

// 2 D^2 / lambda.
double fraunhofer_distance(double aperture, double wavelength);

}  // namespace dmaswipt

#endif  // DMASWIPT_GEOMETRY_HPP
