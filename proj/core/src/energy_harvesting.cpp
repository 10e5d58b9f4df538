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

#include "dmaswipt/energy_harvesting.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "dmaswipt/errors.hpp"
#include "dmaswipt/units.hpp"

namespace dmaswipt {

namespace {

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double parse_number(std::string_view text, std::string_view key) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ConfigError("bad number for '" + std::string(key) +
                      "' in EH model spec");
  return value;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void validate(const EhModel& model) {
  std::visit(overloaded{
                 [](const LinearEh& m) {
                   if (!(m.efficiency > 0.0 && m.efficiency <= 1.0))
                     throw DomainError("EH efficiency must lie in (0, 1]");
                 },
                 [](const LogisticEh& m) {
                   if (!(m.saturation > 0.0 && m.a > 0.0 && m.b > 0.0))
                     throw DomainError(
                         "logistic EH parameters must be positive");
                 }},
             model);
}

double harvested_energy(const EhModel& model, double p) {
  if (!(p >= 0.0)) throw DomainError("received RF power must be >= 0");
  validate(model);
  return std::visit(
      overloaded{[p](const LinearEh& m) { return m.efficiency * p; },
                 [p](const LogisticEh& m) {
                   // [S/(1+e^{-a(p-b)}) - S/(1+e^{ab})] / [1 - 1/(1+e^{ab})]
                   const double num =
                       sigmoid(m.a * (p - m.b)) - sigmoid(-m.a * m.b);
                   return m.saturation * num / sigmoid(m.a * m.b);
                 }},
      model);
}

double required_rf_power(const EhModel& model, double e_th) {
  if (!(e_th >= 0.0)) throw DomainError("EH threshold must be >= 0");
  validate(model);
  return std::visit(
      overloaded{
          [e_th](const LinearEh& m) { return e_th / m.efficiency; },
          [e_th](const LogisticEh& m) {
            if (e_th >= m.saturation)
              throw InfeasibleThresholdError(
                  "EH threshold at or above logistic saturation");
            if (e_th == 0.0) return 0.0;
            // ln[e^{ab}(S-E) / (e^{ab}E + S)] = ln(S-E) - ln(E + S e^{-ab})
            const double log_ratio =
                std::log(m.saturation - e_th) -
                std::log(e_th + m.saturation * std::exp(-m.a * m.b));
            return std::max(0.0, m.b - log_ratio / m.a);
          }},
      model);
}

EhModel parse_eh_model(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string kind = trim(spec.substr(0, colon));
  std::map<std::string, double> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError("EH model parameter without '=': " +
                          std::string(item));
      const std::string key = trim(item.substr(0, eq));
      const std::string val = trim(item.substr(eq + 1));
      kv[key] = parse_number(val, key);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw ConfigError("EH model spec missing '" + key + "'");
    const double v = it->second;
    kv.erase(it);
    return v;
  };
  EhModel model;
  if (kind == "linear") {
    model = LinearEh{take("eta")};
  } else if (kind == "logistic") {
    LogisticEh m;
    if (kv.count("esat_dbm"))
      m.saturation = dbm_to_watts(take("esat_dbm"));
    else
      m.saturation = take("esat");
    m.a = take("a");
    m.b = take("b");
    model = m;
  } else {
    throw ConfigError("unknown EH model kind '" + kind + "'");
  }
  if (!kv.empty())
    throw ConfigError("unknown EH model parameter '" + kv.begin()->first + "'");
  try {
    validate(model);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return model;
}

std::string format_eh_model(const EhModel& model) {
  return std::visit(
      overloaded{[](const LinearEh& m) {
                   return "linear:eta=" + format_double(m.efficiency);
                 },
                 [](const LogisticEh& m) {
                   // dBm when that spelling reproduces the same watts.
                   const std::string dbm = format_double(watts_to_dbm(m.saturation));
                   const std::string sat =
                       dbm_to_watts(std::stod(dbm)) == m.saturation
                           ? "esat_dbm=" + dbm
                           : "esat=" + format_double(m.saturation);
                   return "logistic:" + sat +
                          ",a=" + format_double(m.a) +
                          ",b=" + format_double(m.b);
                 }},
      model);
}

std::vector<EhModel> placeholder_logistic_models() {
  const double sat = dbm_to_watts(kDefaultSaturationDbm);
  return {
      LogisticEh{sat, 150.0, 0.014},
      LogisticEh{sat, 150.0, 0.0022},
      LogisticEh{sat, 1500.0, 0.0022},
      LogisticEh{sat, 6400.0, 0.003},
  };
}

}  // namespace dmaswipt
