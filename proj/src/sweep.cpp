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

#include "irs/sweep.hpp"

#include "irs/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>
#include <tuple>

namespace irs {

SystemParams SweepConfig::system(int elements) const {
  SystemParams sys;
  sys.antennas = antennas;
  sys.elements = elements;
  sys.max_power_w = dbm_to_watts(max_power_dbm);
  sys.noise_power_w = dbm_to_watts(noise_power_dbm);
  return sys;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

// Runs fn(i) for i in [0, count). Each index writes only its own slot, so the
// result does not depend on the worker count.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool wants(const SweepConfig& cfg, Scheme s) {
  return std::find(cfg.schemes.begin(), cfg.schemes.end(), s) != cfg.schemes.end();
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {
    if (enabled_) start_ = std::chrono::steady_clock::now();
  }
  double elapsed_ms() const {
    if (!enabled_) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_{};
};

auto sort_key(const TrialResult& r) {
  return std::make_tuple(static_cast<int>(r.scheme), r.d_m, r.elements, r.trial);
}

void sort_rows(std::vector<TrialResult>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const TrialResult& a, const TrialResult& b) { return sort_key(a) < sort_key(b); });
}

CentralizedOptions centralized_options(const SweepConfig& cfg, RngSeed rng) {
  CentralizedOptions opts;
  opts.sdp.feasibility_tol = cfg.sdp_feasibility_tol;
  opts.sdp.objective_tol = cfg.sdp_objective_tol;
  opts.sdp.restarts = cfg.sdp_restarts;
  opts.sdp.rng = substream(rng, 1);
  opts.randomizations = cfg.randomizations;
  opts.rng = substream(rng, 2);
  return opts;
}

struct SweepPoint {
  double d_m;
  int nx;
};

std::vector<TrialResult> run_points(const SweepConfig& cfg, const std::vector<SweepPoint>& points) {
  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::vector<TrialResult>> slots(points.size() * trials);
  parallel_for(slots.size(), cfg.threads, [&](std::size_t job) {
    const SweepPoint& point = points[job / trials];
    const int trial = static_cast<int>(job % trials);
    Geometry geo = cfg.geometry;
    geo.user_distance_m = point.d_m;
    geo.nx = point.nx;
    const SystemParams sys = cfg.system(geo.elements());
    // Common random numbers: trial t draws from the same stream at every point.
    const RngSeed rng{cfg.seed, static_cast<std::uint64_t>(trial)};
    const ChannelSet ch = generate_channels(geo, cfg.path_loss, sys, rng);
    slots[job] = evaluate_trial(ch, sys, cfg, point.d_m, trial, rng);
  });
  std::vector<TrialResult> rows;
  for (auto& slot : slots) rows.insert(rows.end(), slot.begin(), slot.end());
  sort_rows(rows);
  return rows;
}

}  // namespace

std::vector<TrialResult> evaluate_trial(const ChannelSet& ch, const SystemParams& sys,
                                        const SweepConfig& cfg, double d_m, int trial,
                                        RngSeed rng) {
  std::vector<TrialResult> out;
  const int elements = static_cast<int>(ch.elements());
  auto push = [&](Scheme s, double power, int iterations, double ms) {
    out.push_back({s, d_m, elements, trial, to_db(power / sys.noise_power_w), iterations, ms});
  };

  if (wants(cfg, Scheme::upper_bound) || wants(cfg, Scheme::centralized)) {
    const Stopwatch clock(cfg.timing);
    const CentralizedResult res = centralized_optimize(ch, sys, centralized_options(cfg, rng));
    const double ms = clock.elapsed_ms();
    if (wants(cfg, Scheme::upper_bound)) push(Scheme::upper_bound, res.upper_bound_power, 0, ms);
    if (wants(cfg, Scheme::centralized)) push(Scheme::centralized, res.achieved_power, 0, ms);
  }
  if (wants(cfg, Scheme::distributed)) {
    const Stopwatch clock(cfg.timing);
    const AltOptTrace trace = alternating_optimize(ch, sys, cfg.alt);
    push(Scheme::distributed, trace.objectives.back(), trace.iterations, clock.elapsed_ms());
  }
  if (wants(cfg, Scheme::ap_user_mrt)) {
    const Stopwatch clock(cfg.timing);
    const FixedBeamDesign design = ap_user_mrt(ch, sys);
    push(Scheme::ap_user_mrt, received_power(ch, design.phases, design.beamformer), 0,
         clock.elapsed_ms());
  }
  if (wants(cfg, Scheme::ap_irs_mrt)) {
    const Stopwatch clock(cfg.timing);
    const FixedBeamDesign design = ap_irs_mrt(ch, sys);
    push(Scheme::ap_irs_mrt, received_power(ch, design.phases, design.beamformer), 0,
         clock.elapsed_ms());
  }
  if (wants(cfg, Scheme::no_irs)) {
    const Stopwatch clock(cfg.timing);
    const NoIrsDesign design = no_irs(ch, sys);
    push(Scheme::no_irs, design.power, 0, clock.elapsed_ms());
  }
  return out;
}

std::vector<TrialResult> run_distance_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<SweepPoint> points;
  for (double d : cfg.d_values) points.push_back({d, cfg.geometry.nx});
  return run_points(cfg, points);
}

std::vector<TrialResult> run_elements_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<SweepPoint> points;
  for (double d : cfg.d_values)
    for (int n : cfg.n_values) points.push_back({d, n / cfg.geometry.ny});
  return run_points(cfg, points);
}

std::vector<SchemeSummary> summarize(std::span<const TrialResult> input) {
  std::vector<TrialResult> rows(input.begin(), input.end());
  sort_rows(rows);
  std::vector<SchemeSummary> out;
  for (std::size_t begin = 0; begin < rows.size();) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].scheme == rows[begin].scheme &&
           rows[end].d_m == rows[begin].d_m && rows[end].elements == rows[begin].elements)
      ++end;
    const auto count = static_cast<double>(end - begin);
    double sum = 0.0, sum_sq = 0.0, iters = 0.0, ms = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double lin = std::isinf(rows[i].snr_db) ? 0.0 : from_db(rows[i].snr_db);
      sum += lin;
      sum_sq += lin * lin;
      iters += rows[i].iterations;
      ms += rows[i].runtime_ms;
    }
    const double mean = sum / count;
    const double var = count > 1 ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1)) : 0.0;
    const double sem_lin = std::sqrt(var / count);
    SchemeSummary s;
    s.scheme = rows[begin].scheme;
    s.d_m = rows[begin].d_m;
    s.elements = rows[begin].elements;
    s.count = static_cast<int>(end - begin);
    s.mean_snr_db = to_db(mean);
    s.sem_db = mean > 0.0 ? 10.0 / std::log(10.0) * sem_lin / mean
                          : std::numeric_limits<double>::infinity();
    s.mean_iterations = iters / count;
    s.mean_runtime_ms = ms / count;
    out.push_back(s);
    begin = end;
  }
  return out;
}

void write_trials_csv(std::ostream& os, std::span<const TrialResult> input) {
  std::vector<TrialResult> rows(input.begin(), input.end());
  sort_rows(rows);
  const std::vector<SchemeSummary> summaries = summarize(rows);
  os << "scheme,d_m,N,trial,snr_db,iterations,runtime_ms\n";
  std::size_t next = 0;
  for (const SchemeSummary& s : summaries) {
    const std::string prefix =
        std::string(scheme_name(s.scheme)) + ',' + format_double(s.d_m) + ',' + std::to_string(s.elements) + ',';
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.count); ++i, ++next) {
      const TrialResult& r = rows[next];
      os << prefix << r.trial << ',' << format_double(r.snr_db) << ',' << r.iterations << ','
         << format_double(r.runtime_ms) << '\n';
    }
    os << prefix << "mean," << format_double(s.mean_snr_db) << ','
       << format_double(s.mean_iterations) << ',' << format_double(s.mean_runtime_ms) << '\n';
    os << prefix << "sem," << format_double(s.sem_db) << ",0,0\n";
  }
  if (!os) throw IoError("failed to write CSV output");
}

std::vector<ConvergenceRow> run_convergence_trace(const SweepConfig& cfg) {
  cfg.validate();
  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::vector<ConvergenceRow>> slots(cfg.d_values.size() * trials);
  parallel_for(slots.size(), cfg.threads, [&](std::size_t job) {
    const double d = cfg.d_values[job / trials];
    const int trial = static_cast<int>(job % trials);
    Geometry geo = cfg.geometry;
    geo.user_distance_m = d;
    const SystemParams sys = cfg.system(geo.elements());
    const ChannelSet ch =
        generate_channels(geo, cfg.path_loss, sys, {cfg.seed, static_cast<std::uint64_t>(trial)});
    const AltOptTrace trace = alternating_optimize(ch, sys, cfg.alt);
    for (std::size_t k = 0; k < trace.objectives.size(); ++k) {
      slots[job].push_back({d, geo.elements(), trial, static_cast<int>(k),
                            to_db(trace.objectives[k] / sys.noise_power_w), trace.converged});
    }
  });
  std::vector<ConvergenceRow> rows;
  for (auto& slot : slots) rows.insert(rows.end(), slot.begin(), slot.end());
  return rows;
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows) {
  os << "d_m,N,trial,iteration,snr_db,converged\n";
  for (const ConvergenceRow& r : rows) {
    os << format_double(r.d_m) << ',' << r.elements << ',' << r.trial << ',' << r.iteration << ','
       << format_double(r.snr_db) << ',' << (r.converged ? 1 : 0) << '\n';
  }
  if (!os) throw IoError("failed to write CSV output");
}

OracleResult brute_force_oracle(const ChannelSet& ch, const SystemParams& sys, int grid_points) {
  sys.validate();
  ch.validate(sys);
  const Eigen::Index n = ch.elements();
  if (n > 3) {
    throw InvalidInput("brute-force oracle is limited to N <= 3: N = " + std::to_string(n) +
                       " would need grid_points^N = " +
                       format_double(std::pow(static_cast<double>(grid_points), static_cast<double>(n))) +
                       " evaluations");
  }
  if (grid_points < 16) throw InvalidInput("brute-force oracle needs at least 16 grid points");

  const CMatrix phi = ch.reflect.conjugate().asDiagonal() * ch.ap_irs;
  const CRowVector direct = ch.direct.adjoint();
  std::vector<cd> unit(static_cast<std::size_t>(grid_points));
  for (int k = 0; k < grid_points; ++k) unit[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / grid_points);

  std::vector<int> index(static_cast<std::size_t>(n), 0);
  std::vector<int> best_index = index;
  double best = -1.0;
  CRowVector composite(direct.size());
  while (true) {
    composite = direct;
    for (Eigen::Index i = 0; i < n; ++i) composite += unit[static_cast<std::size_t>(index[static_cast<std::size_t>(i)])] * phi.row(i);
    const double power = sys.max_power_w * composite.squaredNorm();
    if (power > best) {
      best = power;
      best_index = index;
    }
    Eigen::Index pos = 0;
    while (pos < n && ++index[static_cast<std::size_t>(pos)] == grid_points) index[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }

  RVector theta(n);
  for (Eigen::Index i = 0; i < n; ++i)
    theta[i] = kTwoPi * best_index[static_cast<std::size_t>(i)] / grid_points;
  return {PhaseConfig(std::move(theta)), best};
}

std::vector<OracleCheckRow> run_oracle_check(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<OracleCheckRow> rows(static_cast<std::size_t>(cfg.instances));
  parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
    const RngSeed rng{cfg.seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 engine = make_engine(rng);
    std::normal_distribution<double> normal;
    auto sample = [&](Eigen::Index rows_, Eigen::Index cols) {
      CMatrix m(rows_, cols);
      for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows_; ++r) {
          const double re = normal(engine);
          const double im = normal(engine);
          m(r, c) = cd(re, im) * std::sqrt(0.5);
        }
      return m;
    };
    const int elements = 1 + static_cast<int>(i % 3);
    const int antennas = 1 + static_cast<int>((i / 3) % 2);
    SystemParams sys = cfg.system(elements);
    sys.antennas = antennas;
    ChannelSet ch;
    ch.direct = sample(antennas, 1).col(0);
    ch.reflect = sample(elements, 1).col(0);
    ch.ap_irs = sample(elements, antennas);

    OracleCheckRow& row = rows[i];
    row.instance = static_cast<int>(i);
    row.elements = elements;
    row.antennas = antennas;
    row.oracle_power = brute_force_oracle(ch, sys, cfg.grid_points).best_power;
    row.centralized_power = centralized_optimize(ch, sys, centralized_options(cfg, rng)).achieved_power;
    row.distributed_power = alternating_optimize(ch, sys, cfg.alt).objectives.back();
  });
  return rows;
}

void write_oracle_csv(std::ostream& os, std::span<const OracleCheckRow> rows) {
  os << "instance,N,M,oracle_power,centralized_power,distributed_power,centralized_ratio,"
        "distributed_ratio\n";
  for (const OracleCheckRow& r : rows) {
    os << r.instance << ',' << r.elements << ',' << r.antennas << ',' << format_double(r.oracle_power)
       << ',' << format_double(r.centralized_power) << ',' << format_double(r.distributed_power)
       << ',' << format_double(r.centralized_power / r.oracle_power) << ','
       << format_double(r.distributed_power / r.oracle_power) << '\n';
  }
  if (!os) throw IoError("failed to write CSV output");
}

double coverage_distance(std::span<const double> d, std::span<const double> snr_db,
                         double target_db) {
  if (d.empty() || d.size() != snr_db.size())
    throw InvalidInput("coverage needs matching, non-empty distance and SNR series");
  if (snr_db[0] < target_db) return d[0];
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (snr_db[i] < target_db) {
      const double frac = (snr_db[i - 1] - target_db) / (snr_db[i - 1] - snr_db[i]);
      return d[i - 1] + frac * (d[i] - d[i - 1]);
    }
  }
  return d.back();
}

}  // namespace irs
