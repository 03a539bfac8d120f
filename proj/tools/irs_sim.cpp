// SPDX-License-Identifier: Apache-2.0
//
// irs-beamforming: joint active and passive beamforming for IRS-assisted links
// Copyright (C) 2026 The irs-beamforming authors
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

// Monte Carlo driver for the IRS beamforming designs.
//
//   irs_sim sweep-distance  [--config FILE] [--KEY VALUE ...]
//   irs_sim sweep-elements  ...
//   irs_sim convergence     ...
//   irs_sim oracle-check    ...
//
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 I/O error.

#include "irs/config.hpp"
#include "irs/errors.hpp"
#include "irs/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw irs::IoError("failed to write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw irs::IoError("cannot open output file '" + path + "'");
  out << text;
  out.close();
  if (!out) throw irs::IoError("failed to write output file '" + path + "'");
}

void print_summary(const std::vector<irs::TrialResult>& rows) {
  for (const irs::SchemeSummary& s : irs::summarize(rows)) {
    std::cerr << irs::scheme_name(s.scheme) << "  d=" << s.d_m << " m  N=" << s.elements
              << "  mean SNR " << s.mean_snr_db << " dB (sem " << s.sem_db << ")\n";
  }
}

int run(irs::Experiment experiment, const irs::ConfigMap& values) {
  const irs::SweepConfig cfg = irs::make_sweep_config(experiment, values);
  std::ostringstream csv;
  switch (experiment) {
    case irs::Experiment::distance_sweep: {
      const auto rows = irs::run_distance_sweep(cfg);
      irs::write_trials_csv(csv, rows);
      print_summary(rows);
      break;
    }
    case irs::Experiment::elements_sweep: {
      const auto rows = irs::run_elements_sweep(cfg);
      irs::write_trials_csv(csv, rows);
      print_summary(rows);
      break;
    }
    case irs::Experiment::convergence_trace: {
      const auto rows = irs::run_convergence_trace(cfg);
      irs::write_convergence_csv(csv, rows);
      break;
    }
    case irs::Experiment::oracle_check: {
      const auto rows = irs::run_oracle_check(cfg);
      irs::write_oracle_csv(csv, rows);
      double worst = 1.0;
      for (const auto& r : rows)
        worst = std::min({worst, r.centralized_power / r.oracle_power,
                          r.distributed_power / r.oracle_power});
      std::cerr << "worst optimizer/oracle power ratio: " << worst << '\n';
      break;
    }
  }
  emit(cfg.output_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRS-assisted MISO link: joint active and passive beamforming simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file");

  std::map<std::string, std::string> flags;
  for (const std::string& key : irs::config_keys())
    app.add_option("--" + key, flags[key], "overrides config key '" + key + "'");

  const std::map<std::string, irs::Experiment> commands = {
      {"sweep-distance", irs::Experiment::distance_sweep},
      {"sweep-elements", irs::Experiment::elements_sweep},
      {"convergence", irs::Experiment::convergence_trace},
      {"oracle-check", irs::Experiment::oracle_check},
  };
  for (const auto& [name, experiment] : commands) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    irs::ConfigMap cli;
    for (const std::string& key : irs::config_keys())
      if (app.count("--" + key) > 0) cli[key] = flags[key];
    const irs::ConfigMap file = config_path.empty() ? irs::ConfigMap{} : irs::read_config_file(config_path);
    const std::string command = app.get_subcommands().front()->get_name();
    return run(commands.at(command), irs::merge(file, cli));
  } catch (const irs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const irs::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const irs::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
