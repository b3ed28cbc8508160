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

#include <cstdint>
#include <random>

namespace qmetric {

std::uint64_t splitmix64(std::uint64_t x);

// Child-seed derivation used everywhere a sweep is split into independent
// tasks: child_k = root ^ splitmix64(k).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t k);

// Deterministic random stream. The raw bit stream is mt19937-64 (fully
// specified by the standard); uniform and normal variates are produced by
// explicit transforms rather than std:: distributions, whose output is
// implementation-defined. Identical seeds therefore reproduce identical
// sample streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  static constexpr const char* algorithm() { return "mt19937-64/box-muller"; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : engine_() % n; }

  // Standard normal via Box-Muller; the spare variate is cached.
  double normal();

  Rng child(std::uint64_t k) const { return Rng(derive_seed(seed_, k)); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qmetric
