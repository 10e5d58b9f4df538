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

#ifndef DMASWIPT_RANK_ONE_HPP
#define DMASWIPT_RANK_ONE_HPP

#include "dmaswipt/types.hpp"

namespace dmaswipt {

inline constexpr double kRankWarningRatio = 1e-4;

struct RankOneFactor {
  CVec vector;         // sqrt(lambda_1) u_1
  double ratio = 0.0;  // lambda_2 / lambda_1 (0 for order 1)
  bool degraded = false;
  bool zero = false;
};

// Dominant rank-one factor of a Hermitian PSD matrix. The global phase is
// fixed so that the first nonzero entry is real and nonnegative.
// Throws DomainError if an eigenvalue is below -1e-9 ||W||.
RankOneFactor extract_rank_one(const CMat& w,
                               double warning_ratio = kRankWarningRatio);

// Rotates v so that its first entry with |v_i| > tol * ||v||_inf is real >= 0.
CVec normalize_phase(const CVec& v, double tol = 1e-12);

}  // namespace dmaswipt

#endif  // DMASWIPT_RANK_ONE_HPP
