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

#include <catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "dmaswipt/energy_harvesting.hpp"
#include "dmaswipt/errors.hpp"
#include "dmaswipt/units.hpp"

using namespace dmaswipt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Straight transcription of the inverse with no rewriting.
double inverse_oracle(double s, double a, double b, double e) {
  const double eab = std::exp(a * b);
  return b - std::log(eab * (s - e) / (eab * e + s)) / a;
}

}  // namespace

TEST_CASE("linear harvester", "[eh]") {
  const EhModel m = LinearEh{0.5};
  CHECK_THAT(harvested_energy(m, 2e-4), WithinRel(1e-4, 1e-15));
  CHECK_THAT(required_rf_power(m, 1e-4), WithinRel(2e-4, 1e-15));
  CHECK(harvested_energy(m, 0.0) == 0.0);
  CHECK_THROWS_AS(harvested_energy(m, -1e-9), DomainError);
  CHECK_THROWS_AS(required_rf_power(m, -1e-9), DomainError);
  CHECK_THROWS_AS(validate(EhModel{LinearEh{0.0}}), DomainError);
  CHECK_THROWS_AS(validate(EhModel{LinearEh{1.5}}), DomainError);
  CHECK_NOTHROW(validate(EhModel{LinearEh{1.0}}));
}

TEST_CASE("logistic harvester limits", "[eh]") {
  const double s = dbm_to_watts(13.8);
  const EhModel m = LogisticEh{s, 150.0, 0.014};
  CHECK(harvested_energy(m, 0.0) == 0.0);
  CHECK_THAT(harvested_energy(m, 10.0), WithinRel(s, 1e-12));
  CHECK(required_rf_power(m, 0.0) == 0.0);
  CHECK_THROWS_AS(required_rf_power(m, s), InfeasibleThresholdError);
  CHECK_THROWS_AS(required_rf_power(m, 2 * s), InfeasibleThresholdError);
  CHECK_THROWS_AS(validate(EhModel{LogisticEh{s, -1.0, 0.01}}), DomainError);

  double prev = -1.0;
  for (double p = 0.0; p < 0.2; p += 1e-3) {
    const double e = harvested_energy(m, p);
    CHECK(e > prev);
    CHECK(e < s);
    prev = e;
  }
}

TEST_CASE("logistic inversion roundtrip", "[eh]") {
  std::mt19937_64 rng(3);
  for (const auto& model : placeholder_logistic_models()) {
    const auto& lm = std::get<LogisticEh>(model);
    std::uniform_real_distribution<double> u(0.0, lm.saturation);
    for (int i = 0; i < 1000; ++i) {
      const double e = u(rng);
      if (e == 0.0) continue;
      const double p = required_rf_power(model, e);
      REQUIRE(p >= 0.0);
      CHECK(std::abs(harvested_energy(model, p) - e) <= 1e-9 * lm.saturation);
      CHECK_THAT(p, WithinRel(inverse_oracle(lm.saturation, lm.a, lm.b, e), 1e-9));
    }
  }
}

TEST_CASE("required power grows without bound near saturation", "[eh]") {
  const LogisticEh lm{1e-3, 2000.0, 0.0025};
  const EhModel m = lm;
  double prev = 0.0;
  for (double f : {0.5, 0.9, 0.99, 0.999, 0.99999}) {
    const double p = required_rf_power(m, f * lm.saturation);
    CHECK(p > prev);
    prev = p;
  }
  CHECK(required_rf_power(m, (1 - 1e-12) * lm.saturation) > 5 * lm.b);
  // The 0.99 / 0.5 ratio only depends on a*b.
  const double ab = lm.a * lm.b;
  const double ratio = required_rf_power(m, 0.99 * lm.saturation) /
                       required_rf_power(m, 0.5 * lm.saturation);
  const double oracle = (ab - std::log(0.01 / (0.99 + std::exp(-ab)))) /
                        (ab - std::log(0.5 / (0.5 + std::exp(-ab))));
  CHECK_THAT(ratio, WithinRel(oracle, 1e-10));
}

TEST_CASE("EH model spec strings", "[eh]") {
  const auto lin = parse_eh_model("linear:eta=0.5");
  CHECK(std::get<LinearEh>(lin).efficiency == 0.5);
  CHECK(format_eh_model(lin) == "linear:eta=0.5");

  const auto log = parse_eh_model("logistic:esat_dbm=13.8,a=150,b=0.014");
  const auto& lm = std::get<LogisticEh>(log);
  CHECK_THAT(lm.saturation, WithinRel(dbm_to_watts(13.8), 1e-15));
  CHECK(lm.a == 150.0);
  CHECK(lm.b == 0.014);
  CHECK(format_eh_model(log) == "logistic:esat_dbm=13.8,a=150,b=0.014");

  const auto watts = parse_eh_model("logistic: esat = 0.02 , a=10, b=0.1");
  CHECK(std::get<LogisticEh>(watts).saturation == 0.02);
  const auto again = parse_eh_model(format_eh_model(watts));
  CHECK(std::get<LogisticEh>(again).saturation == 0.02);

  for (const auto& m : placeholder_logistic_models()) {
    const auto r = parse_eh_model(format_eh_model(m));
    CHECK(std::get<LogisticEh>(r).saturation == std::get<LogisticEh>(m).saturation);
    CHECK(std::get<LogisticEh>(r).a == std::get<LogisticEh>(m).a);
    CHECK(std::get<LogisticEh>(r).b == std::get<LogisticEh>(m).b);
  }

  CHECK_THROWS_AS(parse_eh_model("quadratic:eta=1"), ConfigError);
  CHECK_THROWS_AS(parse_eh_model("linear"), ConfigError);
  CHECK_THROWS_AS(parse_eh_model("linear:eta=0.5,x=1"), ConfigError);
  CHECK_THROWS_AS(parse_eh_model("linear:eta=abc"), ConfigError);
  CHECK_THROWS_AS(parse_eh_model("linear:eta=2"), ConfigError);
  CHECK_THROWS_AS(parse_eh_model("logistic:esat_dbm=13.8,a=150"), ConfigError);
}
