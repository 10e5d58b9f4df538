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

#ifndef DMASWIPT_ENERGY_HARVESTING_HPP
#define DMASWIPT_ENERGY_HARVESTING_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dmaswipt {

// E = eta * P.
struct LinearEh {
  double efficiency = 0.5;
};

// Logistic saturating harvester normalised so that E(0) = 0 and
// E(inf) = saturation. Units: saturation and b in watts, a in 1/W.
struct LogisticEh {
  double saturation = 0.0;
  double a = 0.0;
  double b = 0.0;
};

using EhModel = std::variant<LinearEh, LogisticEh>;

void validate(const EhModel& model);

// Harvested DC power for received RF power p >= 0.
double harvested_energy(const EhModel& model, double p);

// Smallest RF power that harvests at least e_th. Throws
// InfeasibleThresholdError when a logistic model saturates below e_th.
double required_rf_power(const EhModel& model, double e_th);

// "linear:eta=0.5" or "logistic:esat_dbm=13.8,a=150,b=0.014"
// (esat=<watts> is accepted in place of esat_dbm).
EhModel parse_eh_model(std::string_view spec);
std::string format_eh_model(const EhModel& model);

// Saturation shared by the four nonlinear harvesters of the EH sweep.
inline constexpr double kDefaultSaturationDbm = 13.8;

// Four logistic harvesters with the common 13.8 dBm saturation. The (a, b)
// pairs are PLACEHOLDERS taken from commonly used logistic fits; they are
// not authoritative values for any particular rectifier and should be
// replaced through configuration when real circuit data is available.
std::vector<EhModel> placeholder_logistic_models();

}  // namespace dmaswipt

#endif  // DMASWIPT_ENERGY_HARVESTING_HPP
