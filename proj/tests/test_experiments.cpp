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

#include <cstdio>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "qmetric/experiments.hpp"
#include "qmetric/io.hpp"

using namespace qmetric;
using qmetric::testing::bell;

namespace {

ExperimentConfig small_cfg(int workers) {
  ExperimentConfig cfg;
  cfg.seed = 42;
  cfg.samples = 2000;
  cfg.dims = {2, 8};
  cfg.workers = workers;
  return cfg;
}

const ExperimentRecord& find_record(const std::vector<ExperimentRecord>& records,
                                    const std::string& name, long long dim = 0) {
  for (const auto& r : records) {
    if (r.experiment == name && (dim == 0 || r.dim_hint() == dim)) return r;
  }
  throw std::runtime_error("record not found: " + name);
}

}  // namespace

TEST_CASE("bipartite splits pick balanced factorizations") {
  const auto splits = bipartite_splits({2, 8, 64});
  REQUIRE(splits.size() == 2);
  CHECK(splits[0] == std::make_pair<Index, Index>(2, 4));
  CHECK(splits[1] == std::make_pair<Index, Index>(8, 8));
  CHECK(bipartite_splits({2, 3, 5}).empty());
}

TEST_CASE("config validation catches unusable setups") {
  ExperimentConfig cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(resolve_config("inequalities", cfg), ConfigError);

  ExperimentConfig primes;
  primes.dims = {2, 3};
  CHECK_THROWS_AS(resolve_config("inequalities", primes), ConfigError);

  ExperimentConfig fmt;
  fmt.format = "xml";
  CHECK_THROWS_AS(resolve_config("concentration", fmt), ConfigError);

  ExperimentConfig ok;
  const ExperimentConfig resolved = resolve_config("inequalities", ok);
  CHECK(resolved.samples == 100000);
  CHECK(resolved.dims == std::vector<Index>{2, 8, 64});
}

TEST_CASE("inequality suites hold on a small run") {
  const auto records = run_inequalities(small_cfg(1));
  CHECK(records.size() > 10);
  for (const auto& r : records) {
    CHECK(r.verdict != Verdict::Inconsistent);
  }
  const auto& sandwich = find_record(records, "comparison_sandwich", 8);
  CHECK(sandwich.stat_value("violations") == 0.0);
  CHECK(sandwich.stat_value("max_excess") <= 0.0);

  const auto& tight = find_record(records, "tightness_probes");
  CHECK(tight.stat_value("fs_over_bures_near_one") == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(tight.stat_value("bures_over_fs_near_zero") ==
        doctest::Approx(2.0 * std::sqrt(2.0) / kPi).epsilon(1e-6));

  const auto& floor = find_record(records, "complementarity_floor");
  CHECK(floor.verdict == Verdict::ReportOnly);
  CHECK(floor.stat_value("empirical_floor") > 0.0);
}

TEST_CASE("parallel and serial sweeps produce byte-identical output") {
  const auto serial = run_inequalities(small_cfg(1));
  const auto threaded = run_inequalities(small_cfg(4));
  const ExperimentConfig cfg = resolve_config("inequalities", small_cfg(1));
  CHECK(records_to_json("inequalities", cfg, serial) ==
        records_to_json("inequalities", cfg, threaded));
  CHECK(records_to_csv(serial) == records_to_csv(threaded));
}

TEST_CASE("concentration statistics follow the Beta law") {
  ExperimentConfig cfg;
  cfg.seed = 42;
  cfg.samples = 20000;
  cfg.dims = {2, 8, 64};
  cfg.workers = 2;
  const auto records = run_concentration(cfg);

  const auto& d2 = find_record(records, "concentration", 2);
  CHECK(d2.stat_value("mean_overlap_sq") == doctest::Approx(0.5).epsilon(0.02));

  const auto& d64 = find_record(records, "concentration", 64);
  CHECK(d64.stat_value("mean_overlap_sqrt_d") == doctest::Approx(0.886).epsilon(0.02));
  CHECK(d64.stat_value("beta_constant_gamma_3_2") ==
        doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
  CHECK(d64.stat_value("stated_constant_pi_over_4") ==
        doctest::Approx(kPi / 4.0).epsilon(1e-12));

  const auto& trend = find_record(records, "concentration_trend");
  CHECK(trend.verdict == Verdict::Consistent);
}

TEST_CASE("identity suite stays at machine precision") {
  ExperimentConfig cfg;
  cfg.seed = 42;
  cfg.samples = 3000;
  cfg.dims = {2, 8};
  cfg.workers = 2;
  for (const auto& r : run_identities(cfg)) {
    CHECK(r.verdict == Verdict::Consistent);
    CHECK(r.stat_value("max_dev_bures_vs_chord") <= 1e-12);
  }
}

TEST_CASE("helstrom scan never finds a better POVM") {
  ExperimentConfig cfg;
  cfg.seed = 42;
  cfg.dims = {2};
  cfg.workers = 2;
  const auto records = run_helstrom_saturation(cfg, 20, 50);
  for (const auto& r : records) {
    CHECK(r.verdict == Verdict::Consistent);
    CHECK(r.stat_value("max_saturation_gap") <= 1e-9);
    CHECK(r.stat_value("max_scan_excess") <= 1e-9);
  }
}

TEST_CASE("dist command reports the Bell-pair distances") {
  const std::string file_a = "qmetric_test_bell_plus.json";
  const std::string file_b = "qmetric_test_bell_minus.json";
  io::write_file(file_a, io::state_to_json(bell(+1), std::make_pair<Index, Index>(2, 2)));
  io::write_file(file_b, io::state_to_json(bell(-1), std::make_pair<Index, Index>(2, 2)));

  ExperimentConfig cfg;
  const ExperimentRecord rec = run_dist(file_a, file_b, {"all"}, cfg);
  CHECK(rec.stat_value("d_fs") == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(rec.stat_value("d_entanglement") == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(rec.stat_value("d_bures") == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rec.stat_value("d_trace") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rec.stat_value("overlap") == doctest::Approx(0.0));

  const ExperimentRecord same = run_dist(file_a, file_a, {"all"}, cfg);
  CHECK(same.stat_value("d_fs") == 0.0);
  CHECK(same.stat_value("d_entanglement") == 0.0);

  CHECK_THROWS_AS(run_dist(file_a, file_b, {"nonsense"}, cfg), ConfigError);
  std::remove(file_a.c_str());
  std::remove(file_b.c_str());
}

TEST_CASE("discriminate command saturates the bound and embeds the POVM") {
  const std::string file_a = "qmetric_test_e0.json";
  const std::string file_b = "qmetric_test_rot.json";
  io::write_file(file_a, io::state_to_json(StateVector::basis(2, 0)));
  io::write_file(file_b, io::state_to_json(qmetric::testing::qubit(kPi / 6.0)));

  ExperimentConfig cfg;
  const ExperimentRecord rec = run_discriminate(file_a, file_b, cfg);
  CHECK(rec.stat_value("p_success") == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rec.verdict == Verdict::Consistent);
  REQUIRE(rec.extra_json.size() == 1);
  CHECK(rec.extra_json[0].first == "povm");
  const Povm back = io::parse_povm_json(rec.extra_json[0].second, "embedded");
  CHECK(back.dim() == 2);
  std::remove(file_a.c_str());
  std::remove(file_b.c_str());
}

TEST_CASE("qfi command values and unknown-family error") {
  ExperimentConfig cfg;
  const ExperimentRecord rot = run_qfi("qubit-rotation", 0.2, 1e-4, cfg);
  CHECK(rot.stat_value("value") == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rot.verdict == Verdict::Consistent);

  const ExperimentRecord flat = run_qfi("constant", 0.0, 1e-4, cfg);
  CHECK(flat.stat_value("value") == 0.0);

  // Step halving in the truncation-dominated regime (roundoff takes over
  // below roughly 2e-4).
  const ExperimentRecord halved = run_qfi("qubit-phase", 0.2, 2e-3, cfg);
  const ExperimentRecord full = run_qfi("qubit-phase", 0.2, 4e-3, cfg);
  CHECK(std::abs(halved.stat_value("value") - 1.0) < std::abs(full.stat_value("value") - 1.0));

  CHECK_THROWS_AS(run_qfi("warp-drive", 0.0, 1e-4, cfg), ConfigError);
}

TEST_CASE("axioms runner honors candidate claims") {
  HarnessConfig hc;
  hc.seed = 5;
  hc.trials = 80;
  hc.dims = {2, 3};
  CHECK(run_axioms("fs", hc, EntropyBase::Natural).claimed_pass);
  CHECK(run_axioms("bures", hc, EntropyBase::Natural).claimed_pass);
  CHECK(!run_axioms("hilbert", hc, EntropyBase::Natural).claimed_pass);
  CHECK(run_axioms("entanglement:2x2", hc, EntropyBase::Natural).claimed_pass);
  CHECK_THROWS_AS(run_axioms("warp-drive", hc, EntropyBase::Natural), ConfigError);

  const AxiomsRun one = run_axioms("fs", hc, EntropyBase::Natural);
  const AxiomsRun two = run_axioms("fs", hc, EntropyBase::Natural);
  CHECK(report_to_json(one.report) == report_to_json(two.report));
}

TEST_CASE("records serialize witnesses and slack utilization") {
  ExperimentRecord rec;
  rec.experiment = "probe";
  rec.param("dim", ParamValue::integer(2));
  rec.stat("violations", 1.0);
  rec.verdict = Verdict::Inconsistent;
  rec.witness_json = "{\"chunkSeed\": 7, \"itemIndex\": 3}";
  ExperimentConfig cfg;
  cfg.dims = {2};
  cfg.samples = 1;
  const std::string json = records_to_json("probe", cfg, {rec});
  CHECK(json.find("\"witness\": {\"chunkSeed\": 7, \"itemIndex\": 3}") != std::string::npos);
  CHECK(json.find("\"verdict\": \"Inconsistent\"") != std::string::npos);

  const auto records = run_inequalities(small_cfg(1));
  const auto& sandwich = find_record(records, "comparison_sandwich", 2);
  CHECK(sandwich.stat_value("slack_utilization") <= 0.0);
}

TEST_CASE("csv output follows the row schema") {
  ExperimentConfig cfg;
  cfg.samples = 500;
  cfg.dims = {2, 4};
  cfg.workers = 1;
  const auto records = run_identities(cfg);
  const std::string csv = records_to_csv(records);
  CHECK(csv.rfind("experiment,dim,key,value,verdict\n", 0) == 0);
  CHECK(csv.find("identities,2,max_dev_bures_vs_chord,") != std::string::npos);
  CHECK(csv.find("Consistent") != std::string::npos);
}
