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

#ifndef DMASWIPT_SDPA_WRITER_HPP
#define DMASWIPT_SDPA_WRITER_HPP

#include <ostream>

#include "sdp_ipm.hpp"

namespace dmaswipt::conic::detail {

// SDPA sparse format (.dat-s). The compiled problem min <C,X>, <A_i,X> = b_i
// is the SDPA dual with F_0 = -C, F_i = A_i, c = b; the LP block is written
// as a diagonal block of negative size.
void write_sdpa(std::ostream& out, const StandardForm& problem);

}  // namespace dmaswipt::conic::detail

#endif  // DMASWIPT_SDPA_WRITER_HPP
