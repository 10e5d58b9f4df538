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

#ifndef DMASWIPT_LORENTZIAN_MAPPING_HPP
#define DMASWIPT_LORENTZIAN_MAPPING_HPP

#include <string>
#include <string_view>

#include "dmaswipt/dma_model.hpp"
#include "dmaswipt/types.hpp"

namespace dmaswipt {

enum class MappingScheme { Arlch, Lcph, Lcush, Aoh, None };

// "arlch|lcph|lcush|aoh|uw".
MappingScheme parse_mapping_scheme(std::string_view text);
std::string to_string(MappingScheme scheme);

DmaWeights map_lcph(const DmaWeights& q);
DmaWeights map_lcush(const DmaWeights& q);
DmaWeights map_aoh(const DmaWeights& q);

struct ArlchResult {
  double radius = 1.0;
  RVec phases;             // Phi_n in [0, 2 pi)
  double discrepancy = 0.0;
  DmaWeights weights;
};

// D(r) = sum_n (|q_n - j r/2| - r/2)^2.
double arlch_discrepancy(const CVec& q, double r);
// arg(q_n - j r/2) wrapped, pi/2 where q_n = j r/2.
RVec arlch_phases(const CVec& q, double r);

// Throws DomainError for an all-zero input.
ArlchResult map_arlch(const DmaWeights& q);

// Identity for MappingScheme::None.
DmaWeights map_weights(const DmaWeights& q, MappingScheme scheme);

}  // namespace dmaswipt

#endif  // DMASWIPT_LORENTZIAN_MAPPING_HPP
