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

#ifndef DMASWIPT_SCENARIO_HPP
#define DMASWIPT_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmaswipt/alternating_optimizer.hpp"
#include "dmaswipt/geometry.hpp"

namespace dmaswipt {

// A mapping scheme (or the fully digital baseline) with an optional PS-mode
// override, written "arlch", "fd", "arlch+eps", "lcush+fixed:0.1", ...
struct SchemeVariant {
  bool fully_digital = false;
  MappingScheme mapping = MappingScheme::Arlch;
  std::optional<PsMode> ps_override;

  std::string scheme_name() const;  // "fd" or the mapping name
  std::string label() const;        // round-trips through parse
};

SchemeVariant parse_scheme_variant(std::string_view text);

// Scenario parameters as read from configuration: dB/dBm at the boundary,
// converted to linear quantities by the builders below.
struct ScenarioConfig {
  ArrayGeometry geometry;
  double alpha = 0.6;     // 1/m
  double beta = 827.67;   // rad/m

  // Explicit positions [m]; when empty, boresight users at the distances
  // below (multiples of d_F).
  std::vector<UserPosition> users;
  std::vector<double> user_distances_df = {0.1, 0.3};

  double sinr_db = 10.0;
  double eh_threshold_dbm = -10.0;
  double antenna_noise_dbm = -70.0;
  double conversion_noise_dbm = -30.0;
  std::string eh_model = "linear:eta=0.5";
  std::string scheme = "arlch";
  std::string ps_mode = "ops";

  int max_iterations = 20;
  double solver_tolerance = 1e-8;
  double stop_threshold = 1e-3;
  int stop_patience = 3;
  int max_initializations = 6;
  std::uint64_t seed = 1;
  // Re-solve the precoder problem over final weights of runs whose feasible
  // set is contained in this run's (see README).
  bool cross_refine = true;

  // EH-threshold sweep.
  std::vector<double> eh_grid_dbm = {-40, -30, -20, -10, 0, 5, 10, 13.8};
  std::vector<std::string> eh_models;

  // User-separation sweep.
  std::vector<double> zeta_grid = {0.2, 0.4, 0.6, 0.8, 1.0};
  double sep_anchor_df = 0.1;
  std::vector<double> sep_conversion_noise_dbm = {-50, -30};
  std::vector<std::string> sep_ps_modes = {"ops", "eps", "fixed:0.1",
                                           "fixed:0.9"};
  std::vector<std::string> sep_schemes = {"arlch", "uw", "fd"};

  // SINR Monte Carlo.
  std::vector<double> mc_sinr_grid_db = {0, 5, 10, 15};
  int mc_realizations = 50;
  int mc_users = 4;
  double mc_radius_min_df = 0.1;
  double mc_radius_max_df = 1.0;
  std::vector<std::string> mc_schemes = {"aoh", "lcph",      "lcush", "arlch",
                                         "arlch+eps", "uw", "fd"};

  ScenarioConfig();

  static ScenarioConfig desk_scale();
  static ScenarioConfig full_scale();

  // Throws ConfigError on any inconsistency.
  void validate() const;

  double fraunhofer() const { return geometry.fraunhofer(); }
  std::vector<UserPosition> resolved_users() const;
  QosTargets targets(int users) const;
  WaveguideModel waveguide() const;
  OptimizerConfig optimizer(const SchemeVariant& variant) const;
  // Throws InfeasibleThresholdError when the EH target is unreachable.
  SystemModel system(const std::vector<UserPosition>& users) const;
};

// Flat "key = value" text (lists comma separated, string lists and user
// triples separated by ';', '#' comments) or a JSON object with the same
// keys. Unknown keys are errors.
ScenarioConfig parse_scenario(std::string_view text,
                              ScenarioConfig base = ScenarioConfig());
ScenarioConfig load_scenario(const std::string& path,
                             ScenarioConfig base = ScenarioConfig());

std::string format_scenario_flat(const ScenarioConfig& config);
std::string format_scenario_json(const ScenarioConfig& config);

}  // namespace dmaswipt

#endif  // DMASWIPT_SCENARIO_HPP
