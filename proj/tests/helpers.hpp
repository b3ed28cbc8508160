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

#include <cmath>

#include "qmetric/state.hpp"

namespace qmetric::testing {

// (|00> + sign |11>) / sqrt(2)
inline StateVector bell(int sign) {
  Cvec v = Cvec::Zero(4);
  const double c = 1.0 / std::sqrt(2.0);
  v(0) = Complex(c, 0.0);
  v(3) = Complex(sign * c, 0.0);
  return StateVector(std::move(v));
}

// cos(theta)|0> + sin(theta)|1>
inline StateVector qubit(double theta) {
  Cvec v(2);
  v << Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0);
  return StateVector(std::move(v));
}

inline StateVector plus_state(int sign) {
  Cvec v(2);
  const double c = 1.0 / std::sqrt(2.0);
  v << Complex(c, 0.0), Complex(sign * c, 0.0);
  return StateVector(std::move(v));
}

}  // namespace qmetric::testing
