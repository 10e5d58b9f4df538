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

#include "dmaswipt/rank_one.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "dmaswipt/errors.hpp"

namespace dmaswipt {

CVec normalize_phase(const CVec& v, double tol) {
  const double vmax = v.cwiseAbs().maxCoeff();
  if (!(vmax > 0.0)) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > tol * vmax) return v * (std::conj(v(i)) / mag);
  }
  return v;
}

RankOneFactor extract_rank_one(const CMat& w, double warning_ratio) {
  if (w.rows() != w.cols() || w.rows() == 0)
    throw DimensionError("extract_rank_one needs a nonempty square matrix");
  RankOneFactor out;
  const CMat herm = 0.5 * (w + w.adjoint());
  const double scale = herm.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) {
    out.vector = CVec::Zero(w.rows());
    out.zero = true;
    out.degraded = true;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<CMat> eig(herm);
  if (eig.info() != Eigen::Success)
    throw SingularityError("eigendecomposition failed");
  const RVec& lam = eig.eigenvalues();  // ascending
  const Eigen::Index n = lam.size();
  if (lam(0) < -1e-9 * std::max(scale, std::abs(lam(n - 1))))
    throw DomainError("matrix is not positive semidefinite");
  const double l1 = lam(n - 1);
  if (!(l1 > 0.0)) {
    out.vector = CVec::Zero(n);
    out.zero = true;
    out.degraded = true;
    return out;
  }
  out.vector = normalize_phase(std::sqrt(l1) * eig.eigenvectors().col(n - 1));
  out.ratio = n > 1 ? std::max(lam(n - 2), 0.0) / l1 : 0.0;
  out.degraded = out.ratio > warning_ratio;
  return out;
}

}  // namespace dmaswipt
