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
#include <string>
#include <utility>
#include <vector>

#include "qmetric/harness.hpp"
#include "qmetric/operational.hpp"

namespace qmetric {

struct ExperimentConfig {
  std::uint64_t seed = 42;
  std::vector<Index> dims;  // empty: per-command default
  long samples = -1;        // negative: per-command default
  std::string format = "json";
  std::string out_path;  // empty: stdout
  EntropyBase entropy_base = EntropyBase::Natural;
  int workers = 0;  // 0: hardware concurrency
};

enum class Verdict { Consistent, Inconsistent, ReportOnly };

const char* verdict_name(Verdict v);

struct ParamValue {
  enum class Kind { Int, Real, Text } kind = Kind::Int;
  long long i = 0;
  double d = 0.0;
  std::string s;

  static ParamValue integer(long long v);
  static ParamValue real(double v);
  static ParamValue text(std::string v);
};

// One experiment outcome: what ran, with which knobs, what was measured, and
// whether the result is consistent with the tested claim. Inconsistent
// records embed the chunk seed and item index needed to replay the violation.
struct ExperimentRecord {
  std::string experiment;
  std::vector<std::pair<std::string, ParamValue>> parameters;
  std::vector<std::pair<std::string, double>> statistics;
  std::string claim;
  Verdict verdict = Verdict::ReportOnly;
  std::string witness_json;
  // Extra structured payload (e.g. a POVM) emitted verbatim in JSON output.
  std::vector<std::pair<std::string, std::string>> extra_json;

  void param(const std::string& key, ParamValue v);
  void stat(const std::string& key, double v);
  double stat_value(const std::string& key) const;
  long long dim_hint() const;  // "dim" param, or dimA*dimB, or 0
};

// Balanced (dimA, dimB) factorizations of the composite entries.
std::vector<std::pair<Index, Index>> bipartite_splits(const std::vector<Index>& dims);

// Fills per-command defaults (samples, dims) and validates the result.
// Commands: inequalities, concentration, identities, helstrom, dist,
// discriminate, qfi, axioms.
ExperimentConfig resolve_config(const std::string& command, ExperimentConfig cfg);

std::vector<ExperimentRecord> run_inequalities(const ExperimentConfig& cfg);
std::vector<ExperimentRecord> run_concentration(const ExperimentConfig& cfg);

// Closed-form identity cross-checks (Bures vs chord, trace vs sine, success
// probability vs sine) over Haar pairs.
std::vector<ExperimentRecord> run_identities(const ExperimentConfig& cfg);

// Random-POVM scan against the constructed optimal measurement.
std::vector<ExperimentRecord> run_helstrom_saturation(const ExperimentConfig& cfg, long pairs,
                                                      long povms);

ExperimentRecord run_dist(const std::string& file_a, const std::string& file_b,
                          const std::vector<std::string>& which, const ExperimentConfig& cfg);
ExperimentRecord run_discriminate(const std::string& file_a, const std::string& file_b,
                                  const ExperimentConfig& cfg);
ExperimentRecord run_qfi(const std::string& family, double theta, double step,
                         const ExperimentConfig& cfg);

struct AxiomsRun {
  ConformanceReport report;
  bool claimed_pass = false;
};

// Candidate specs: fs | bures | hilbert | entanglement[:AxB] |
// measurement:<povm-file> | profile:<table-file>.
DistanceCandidate parse_candidate_spec(const std::string& spec, EntropyBase base);
AxiomsRun run_axioms(const std::string& spec, const HarnessConfig& config, EntropyBase base);

std::string records_to_json(const std::string& command, const ExperimentConfig& cfg,
                            const std::vector<ExperimentRecord>& records);
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
bool any_inconsistent(const std::vector<ExperimentRecord>& records);

}  // namespace qmetric
