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

#pragma once

#include "irs/alternating_optimizer.hpp"
#include "irs/baselines.hpp"
#include "irs/channel_gen.hpp"
#include "irs/model.hpp"
#include "irs/sdr_optimizer.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace irs {

enum class Experiment { distance_sweep, elements_sweep, convergence_trace, oracle_check };

/// Everything a Monte Carlo experiment depends on. Output is a pure function
/// of this struct; `threads` and `timing` only affect how it is produced.
struct SweepConfig {
  Experiment experiment = Experiment::distance_sweep;
  Geometry geometry;
  PathLossParams path_loss;
  int antennas = 8;
  double max_power_dbm = 5.0;
  double noise_power_dbm = -80.0;
  std::vector<double> d_values;
  std::vector<int> n_values;  // elements sweep: Nx = N / Ny
  int trials = 500;
  std::vector<Scheme> schemes;
  std::uint64_t seed = 1;
  std::string output_path;

  AltOptConfig alt;
  int randomizations = 1000;
  double sdp_feasibility_tol = 1e-6;
  double sdp_objective_tol = 1e-7;
  int sdp_restarts = 3;

  int grid_points = 64;  // oracle check
  int instances = 100;   // oracle check

  int threads = 1;
  bool timing = false;  // runtime_ms is written as 0 unless set

  SystemParams system(int elements) const;
  /// Throws ConfigError naming the offending key.
  void validate() const;
};

struct TrialResult {
  Scheme scheme;
  double d_m;
  int elements;
  int trial;
  double snr_db;  // -inf when the received power is zero
  int iterations; // distributed only
  double runtime_ms;
};

/// Per (scheme, d, N) statistics. The mean SNR is the average of the linear
/// SNR expressed in dB; its standard error comes from the delta method.
struct SchemeSummary {
  Scheme scheme;
  double d_m;
  int elements;
  int count;
  double mean_snr_db;
  double sem_db;
  double mean_iterations;
  double mean_runtime_ms;
};

/// Runs every requested scheme on one realization. upper_bound and
/// centralized share a single SDR solve.
std::vector<TrialResult> evaluate_trial(const ChannelSet& ch, const SystemParams& sys,
                                        const SweepConfig& cfg, double d_m, int trial,
                                        RngSeed rng);

std::vector<TrialResult> run_distance_sweep(const SweepConfig& cfg);
std::vector<TrialResult> run_elements_sweep(const SweepConfig& cfg);

/// Groups are emitted in (scheme, d, N) order.
std::vector<SchemeSummary> summarize(std::span<const TrialResult> rows);

/// Header `scheme,d_m,N,trial,snr_db,iterations,runtime_ms`. Each group lists
/// its trial rows, then a `mean` and a `sem` row.
void write_trials_csv(std::ostream& os, std::span<const TrialResult> rows);

struct ConvergenceRow {
  double d_m;
  int elements;
  int trial;
  int iteration;  // 0 is the initialization
  double snr_db;
  bool converged;
};

std::vector<ConvergenceRow> run_convergence_trace(const SweepConfig& cfg);
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows);

struct OracleResult {
  PhaseConfig best_theta;
  double best_power = 0.0;
};

/// Exhaustive search of theta over {2 pi k / grid_points}^N with MRT at every
/// point. First maximizer in lexicographic grid order wins.
OracleResult brute_force_oracle(const ChannelSet& ch, const SystemParams& sys, int grid_points);

struct OracleCheckRow {
  int instance;
  int elements;
  int antennas;
  double oracle_power;
  double centralized_power;
  double distributed_power;
};

/// Random unit-variance instances with N in {1,2,3}, M in {1,2}.
std::vector<OracleCheckRow> run_oracle_check(const SweepConfig& cfg);
void write_oracle_csv(std::ostream& os, std::span<const OracleCheckRow> rows);

/// Largest d such that every sampled point up to d meets `target_db`, with
/// linear interpolation at the first drop below it. `d` must be increasing.
/// Returns d.front() if the first point already misses and d.back() if no
/// point does.
double coverage_distance(std::span<const double> d, std::span<const double> snr_db,
                         double target_db);

/// Shortest round-trip decimal form; -inf for negative infinity.
std::string format_double(double value);

}  // namespace irs
