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

#ifndef DMASWIPT_ERRORS_HPP
#define DMASWIPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dmaswipt {

// Argument outside the mathematical domain of an operation (negative power,
// angle outside [0, pi], nonpositive aperture, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Vector/matrix sizes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a singular point, e.g. a user coinciding with an element or
// a power-splitting ratio of exactly zero.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Harvested-energy target that the logistic model can never reach.
class InfeasibleThresholdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Supported mathematically but rejected by this implementation (K > N_r).
class UnsupportedConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed configuration file, flag or model string.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dmaswipt

#endif  // DMASWIPT_ERRORS_HPP
