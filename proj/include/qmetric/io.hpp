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

#include <optional>
#include <string>
#include <utility>

#include "qmetric/povm.hpp"
#include "qmetric/profile.hpp"
#include "qmetric/state.hpp"

// File formats. States: {"dim": d, "amplitudes": [[re, im], ...]} with
// optional "dimA"/"dimB". POVMs: {"dim": d, "effects": [[[re, im], ...], ...]}
// (each effect a row-major matrix of [re, im] pairs). Profile tables:
// {"name": n, "samples": [[r, f], ...]}. Parsing goes through nlohmann::json;
// emission is bespoke with fixed key order and 17-significant-digit doubles,
// so identical inputs serialize byte-identically.

namespace qmetric {
namespace io {

// Shortest-but-lossless decimal form: %.17g.
std::string format_double(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

struct LoadedState {
  StateVector state;
  std::optional<std::pair<Index, Index>> split;
};

std::string state_to_json(const StateVector& s,
                          std::optional<std::pair<Index, Index>> split = std::nullopt);
LoadedState parse_state_json(const std::string& text, const std::string& origin);
LoadedState load_state_file(const std::string& path);

std::string cmat_to_json(const Cmat& m);
std::string povm_to_json(const Povm& p);
Povm parse_povm_json(const std::string& text, const std::string& origin);
Povm load_povm_file(const std::string& path);

OverlapProfile parse_profile_table(const std::string& text, const std::string& origin);
OverlapProfile load_profile_table(const std::string& path);

std::string escape_json(const std::string& s);

}  // namespace io
}  // namespace qmetric
