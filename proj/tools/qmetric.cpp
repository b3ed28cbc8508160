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

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmetric/experiments.hpp"
#include "qmetric/io.hpp"

namespace {

using namespace qmetric;

std::vector<Index> parse_dims(const std::string& csv) {
  std::vector<Index> dims;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      dims.push_back(static_cast<Index>(std::stol(item)));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse dimension '" + item + "'");
    }
  }
  return dims;
}

std::vector<std::string> parse_names(const std::string& csv) {
  std::vector<std::string> names;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return names;
}

int emit_records(const std::string& command, const ExperimentConfig& cfg,
                 const std::vector<ExperimentRecord>& records) {
  const std::string payload =
      cfg.format == "csv" ? records_to_csv(records) : records_to_json(command, cfg, records);
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    io::write_file(cfg.out_path, payload);
    long inconsistent = 0;
    for (const auto& r : records) {
      if (r.verdict == Verdict::Inconsistent) ++inconsistent;
    }
    std::cout << command << ": wrote " << records.size() << " record(s) to " << cfg.out_path
              << " (" << inconsistent << " inconsistent)\n";
  }
  return any_inconsistent(records) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distances, axiom conformance, and experiments on pure quantum states"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string dims_csv;
  std::string entropy_base = "e";
  bool samples_given = false;
  bool dims_given = false;

  app.add_option("--seed", cfg.seed, "root seed for every sampled quantity")
      ->envname("QMETRIC_SEED");
  auto* samples_opt =
      app.add_option("--samples", cfg.samples, "sample count per suite (per-command default)");
  auto* dims_opt = app.add_option("--dims", dims_csv, "comma-separated Hilbert-space dimensions");
  app.add_option("--format", cfg.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  app.add_option("--entropy-base", entropy_base, "entropy base: e or 2")
      ->check(CLI::IsMember({"e", "2"}));
  app.add_option("--workers", cfg.workers, "worker threads for sample sweeps (0 = hardware)");

  auto* dist = app.add_subcommand("dist", "distances between two state files");
  std::string file_a;
  std::string file_b;
  std::string which_csv = "all";
  dist->add_option("fileA", file_a, "first state JSON file")->required();
  dist->add_option("fileB", file_b, "second state JSON file")->required();
  dist->add_option("--which", which_csv,
                   "comma list of fs,bures,trace,fidelity,overlap,hilbert,entanglement or all");

  auto* axioms = app.add_subcommand("axioms", "run the axiom conformance harness");
  std::string candidate_spec;
  axioms
      ->add_option("candidate", candidate_spec,
                   "fs | bures | hilbert | entanglement[:AxB] | measurement:<povm-file> | "
                   "profile:<table-file>")
      ->required();

  auto* inequalities = app.add_subcommand("inequalities", "sweep every inequality suite");
  auto* concentration =
      app.add_subcommand("concentration", "overlap statistics of Haar-random pairs");

  auto* discriminate =
      app.add_subcommand("discriminate", "optimal two-outcome discrimination of a state pair");
  std::string disc_a;
  std::string disc_b;
  discriminate->add_option("fileA", disc_a, "first state JSON file")->required();
  discriminate->add_option("fileB", disc_b, "second state JSON file")->required();

  auto* qfi = app.add_subcommand("qfi", "finite-difference Fisher information of a family");
  std::string family = "qubit-rotation";
  double theta = 0.0;
  double step = 1e-4;
  qfi->add_option("--family", family, "qubit-rotation | qubit-phase | constant");
  qfi->add_option("--theta", theta, "parameter point");
  qfi->add_option("--step", step, "finite-difference step");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  samples_given = samples_opt->count() > 0;
  dims_given = dims_opt->count() > 0;

  try {
    if (dims_given) cfg.dims = parse_dims(dims_csv);
    cfg.entropy_base = entropy_base == "2" ? EntropyBase::Two : EntropyBase::Natural;

    if (dist->parsed()) {
      const ExperimentConfig run_cfg = resolve_config("dist", cfg);
      return emit_records("dist", run_cfg,
                          {run_dist(file_a, file_b, parse_names(which_csv), run_cfg)});
    }
    if (axioms->parsed()) {
      HarnessConfig hc;
      hc.seed = cfg.seed;
      if (dims_given) hc.dims = cfg.dims;
      if (samples_given) hc.trials = cfg.samples;
      const AxiomsRun run = run_axioms(candidate_spec, hc, cfg.entropy_base);
      const std::string payload = report_to_json(run.report) + "\n";
      if (cfg.out_path.empty()) {
        std::cout << payload;
      } else {
        io::write_file(cfg.out_path, payload);
        std::cout << "axioms: wrote report for '" << run.report.candidate << "' to "
                  << cfg.out_path << "\n";
      }
      return run.claimed_pass ? 0 : 1;
    }
    if (inequalities->parsed()) {
      const ExperimentConfig run_cfg = resolve_config("inequalities", cfg);
      return emit_records("inequalities", run_cfg, run_inequalities(run_cfg));
    }
    if (concentration->parsed()) {
      const ExperimentConfig run_cfg = resolve_config("concentration", cfg);
      return emit_records("concentration", run_cfg, run_concentration(run_cfg));
    }
    if (discriminate->parsed()) {
      const ExperimentConfig run_cfg = resolve_config("discriminate", cfg);
      return emit_records("discriminate", run_cfg, {run_discriminate(disc_a, disc_b, run_cfg)});
    }
    if (qfi->parsed()) {
      const ExperimentConfig run_cfg = resolve_config("qfi", cfg);
      return emit_records("qfi", run_cfg, {run_qfi(family, theta, step, run_cfg)});
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
