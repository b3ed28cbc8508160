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

#include "qmetric/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace qmetric {
namespace io {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(path + ": cannot open for reading");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(path + ": cannot open for writing");
  }
  out << content;
  if (!out) {
    throw Error(path + ": write failed");
  }
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

json parse_or_throw(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(origin + ": " + e.what());
  }
}

Cvec amplitudes_from_json(const json& arr, const std::string& origin) {
  if (!arr.is_array() || arr.empty()) {
    throw Error(origin + ": \"amplitudes\" must be a nonempty array");
  }
  Cvec v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(origin + ": amplitudes[" + std::to_string(i) + "] must be [re, im]");
    }
    v(static_cast<Index>(i)) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return v;
}

Cmat matrix_from_json(const json& rows, const std::string& origin, const std::string& where) {
  if (!rows.is_array() || rows.empty()) {
    throw Error(origin + ": " + where + " must be a nonempty array of rows");
  }
  const std::size_t n = rows.size();
  Cmat m(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw Error(origin + ": " + where + " row " + std::to_string(i) + " must have " +
                  std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(origin + ": " + where + " entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") must be [re, im]");
      }
      m(static_cast<Index>(i), static_cast<Index>(j)) =
          Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

}  // namespace

std::string state_to_json(const StateVector& s, std::optional<std::pair<Index, Index>> split) {
  std::ostringstream out;
  out << "{\"dim\": " << s.dim();
  if (split) {
    out << ", \"dimA\": " << split->first << ", \"dimB\": " << split->second;
  }
  out << ", \"amplitudes\": [";
  for (Index i = 0; i < s.dim(); ++i) {
    if (i) out << ", ";
    out << "[" << format_double(s.amplitude(i).real()) << ", "
        << format_double(s.amplitude(i).imag()) << "]";
  }
  out << "]}";
  return out.str();
}

LoadedState parse_state_json(const std::string& text, const std::string& origin) {
  const json j = parse_or_throw(text, origin);
  if (!j.is_object() || !j.contains("dim") || !j.contains("amplitudes")) {
    throw Error(origin + ": state files need \"dim\" and \"amplitudes\"");
  }
  if (!j["dim"].is_number_integer()) {
    throw Error(origin + ": \"dim\" must be an integer");
  }
  const Index dim = j["dim"].get<Index>();
  Cvec v = amplitudes_from_json(j["amplitudes"], origin);
  if (v.size() != dim) {
    throw Error(origin + ": \"dim\" does not match the amplitude count");
  }
  std::optional<std::pair<Index, Index>> split;
  if (j.contains("dimA") || j.contains("dimB")) {
    if (!j.contains("dimA") || !j.contains("dimB") || !j["dimA"].is_number_integer() ||
        !j["dimB"].is_number_integer()) {
      throw Error(origin + ": bipartite states need integer \"dimA\" and \"dimB\"");
    }
    split = std::make_pair(j["dimA"].get<Index>(), j["dimB"].get<Index>());
    if (split->first * split->second != dim) {
      throw Error(origin + ": dimA * dimB must equal \"dim\"");
    }
  }
  try {
    return LoadedState{StateVector(std::move(v)), split};
  } catch (const Error& e) {
    throw Error(origin + ": " + e.what());
  }
}

LoadedState load_state_file(const std::string& path) {
  return parse_state_json(read_file(path), path);
}

std::string cmat_to_json(const Cmat& m) {
  std::ostringstream out;
  out << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) out << ", ";
    out << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << "[" << format_double(m(i, j).real()) << ", " << format_double(m(i, j).imag())
          << "]";
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::string povm_to_json(const Povm& p) {
  std::ostringstream out;
  out << "{\"dim\": " << p.dim() << ", \"effects\": [";
  for (std::size_t m = 0; m < p.outcomes(); ++m) {
    if (m) out << ", ";
    out << cmat_to_json(p.effects()[m]);
  }
  out << "]}";
  return out.str();
}

Povm parse_povm_json(const std::string& text, const std::string& origin) {
  const json j = parse_or_throw(text, origin);
  if (!j.is_object() || !j.contains("dim") || !j.contains("effects")) {
    throw Error(origin + ": POVM files need \"dim\" and \"effects\"");
  }
  if (!j["dim"].is_number_integer()) {
    throw Error(origin + ": \"dim\" must be an integer");
  }
  const Index dim = j["dim"].get<Index>();
  if (!j["effects"].is_array() || j["effects"].empty()) {
    throw Error(origin + ": \"effects\" must be a nonempty array");
  }
  std::vector<Cmat> effects;
  effects.reserve(j["effects"].size());
  for (std::size_t m = 0; m < j["effects"].size(); ++m) {
    Cmat e = matrix_from_json(j["effects"][m], origin, "effects[" + std::to_string(m) + "]");
    if (e.rows() != dim) {
      throw Error(origin + ": effects[" + std::to_string(m) + "] does not match \"dim\"");
    }
    effects.push_back(std::move(e));
  }
  try {
    return Povm(dim, std::move(effects));
  } catch (const InvalidPovm& e) {
    throw InvalidPovm(origin + ": " + e.what());
  }
}

Povm load_povm_file(const std::string& path) {
  return parse_povm_json(read_file(path), path);
}

OverlapProfile parse_profile_table(const std::string& text, const std::string& origin) {
  const json j = parse_or_throw(text, origin);
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) {
    throw Error(origin + ": profile tables need a \"samples\" array of [r, f] pairs");
  }
  std::string name = j.contains("name") && j["name"].is_string()
                         ? j["name"].get<std::string>()
                         : std::string("table");
  std::vector<double> r;
  std::vector<double> f;
  for (std::size_t i = 0; i < j["samples"].size(); ++i) {
    const auto& pair = j["samples"][i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(origin + ": samples[" + std::to_string(i) + "] must be [r, f]");
    }
    r.push_back(pair[0].get<double>());
    f.push_back(pair[1].get<double>());
  }
  try {
    return profile_from_table(std::move(name), std::move(r), std::move(f));
  } catch (const Error& e) {
    throw Error(origin + ": " + e.what());
  }
}

OverlapProfile load_profile_table(const std::string& path) {
  return parse_profile_table(read_file(path), path);
}

}  // namespace io
}  // namespace qmetric
