// Copyright 2026 The qmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmetric {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ZeroVectorError : Error {
  using Error::Error;
};

struct NormalizationError : Error {
  using Error::Error;
};

struct FactorizationMismatch : Error {
  using Error::Error;
};

struct InvalidPovm : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Thrown when a DistanceCandidate's evaluate callback fails; carries an echo
// of the offending inputs so the failure can be reproduced.
struct CandidateError : Error {
  CandidateError(const std::string& what, std::string echo)
      : Error(what + " [inputs: " + echo + "]"), input_echo(std::move(echo)) {}
  std::string input_echo;
};

// Thrown when an overlap profile fails one of its admissibility conditions;
// carries the violated condition and the witness points.
struct ProfileViolation : Error {
  ProfileViolation(const std::string& what, std::string cond, std::vector<double> points)
      : Error(what), condition(std::move(cond)), witness(std::move(points)) {}
  std::string condition;
  std::vector<double> witness;
};

}  // namespace qmetric
