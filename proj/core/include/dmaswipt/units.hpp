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

#ifndef DMASWIPT_UNITS_HPP
#define DMASWIPT_UNITS_HPP

#include <string>

namespace dmaswipt {

// P[dBm] = 10 log10(P / 1 mW)
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

double db_to_linear(double db);
double linear_to_db(double linear);

// Shortest decimal that round-trips to the same double ("inf", "nan" for
// non-finite values).
std::string format_double(double value);

}  // namespace dmaswipt

#endif  // DMASWIPT_UNITS_HPP
