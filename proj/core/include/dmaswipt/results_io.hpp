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

#ifndef DMASWIPT_RESULTS_IO_HPP
#define DMASWIPT_RESULTS_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "dmaswipt/experiments.hpp"

namespace dmaswipt {

inline constexpr const char* kCsvHeader =
    "scenario_id,seed,scheme,ps_mode,K,sweep_value,ptx_dbm,feasible,"
    "sinr_margins,eh_margins,iterations,wall_clock_s";

// Floats in shortest round-trip form, per-user margins joined by ';',
// fields quoted only when needed. Empty wall_clock_s means not recorded.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
// Throws ConfigError on a malformed table.
std::vector<ResultRow> read_csv(std::istream& in);

// Array of row objects; non-finite numbers become null.
void write_json(std::ostream& out, const std::vector<ResultRow>& rows);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

// Row plus iteration traces of a single run.
void write_run_json(std::ostream& out, const SingleRun& run);

}  // namespace dmaswipt

#endif  // DMASWIPT_RESULTS_IO_HPP
