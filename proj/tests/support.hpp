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

// Test-only helpers: random instances and oracles that do not go through the
// library's vectorized code paths.

#pragma once

#include "irs/channel_gen.hpp"
#include "irs/model.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace irs::test {

/// i.i.d. CN(0, 1) entries for h_d, h_r and a full G.
inline ChannelSet random_channel(int antennas, int elements, std::uint64_t seed,
                                 std::uint64_t stream = 0) {
  std::mt19937_64 engine = make_engine({seed, stream});
  std::normal_distribution<double> normal;
  auto draw = [&] {
    const double re = normal(engine);
    const double im = normal(engine);
    return cd(re, im) * std::sqrt(0.5);
  };
  ChannelSet ch;
  ch.direct.resize(antennas);
  ch.reflect.resize(elements);
  ch.ap_irs.resize(elements, antennas);
  for (int m = 0; m < antennas; ++m) ch.direct[m] = draw();
  for (int n = 0; n < elements; ++n) ch.reflect[n] = draw();
  for (int n = 0; n < elements; ++n)
    for (int m = 0; m < antennas; ++m) ch.ap_irs(n, m) = draw();
  return ch;
}

inline SystemParams unit_system(int antennas, int elements, double max_power = 1.0) {
  return SystemParams{antennas, elements, max_power, 1.0};
}

/// c_m = conj(h_d[m]) + sum_n conj(h_r[n]) e^{j theta_n} G[n][m], one entry at a time.
inline std::vector<cd> composite_by_loops(const ChannelSet& ch, const std::vector<double>& theta) {
  std::vector<cd> out(static_cast<std::size_t>(ch.direct.size()));
  for (Eigen::Index m = 0; m < ch.direct.size(); ++m) {
    cd acc = std::conj(ch.direct[m]);
    for (Eigen::Index n = 0; n < ch.reflect.size(); ++n)
      acc += std::conj(ch.reflect[n]) * std::polar(1.0, theta[static_cast<std::size_t>(n)]) *
             ch.ap_irs(n, m);
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

inline double norm_sq(const std::vector<cd>& v) {
  double s = 0.0;
  for (const cd& x : v) s += std::norm(x);
  return s;
}

/// Best p_bar |c(theta)|^2 over the uniform phase grid, N <= 3.
inline double grid_search_power(const ChannelSet& ch, double max_power, int grid) {
  const auto n = static_cast<int>(ch.reflect.size());
  std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
  int total = 1;
  for (int i = 0; i < n; ++i) total *= grid;
  double best = 0.0;
  for (int code = 0; code < total; ++code) {
    int rest = code;
    for (int i = 0; i < n; ++i) {
      theta[static_cast<std::size_t>(i)] = 2.0 * M_PI * (rest % grid) / grid;
      rest /= grid;
    }
    best = std::max(best, max_power * norm_sq(composite_by_loops(ch, theta)));
  }
  return best;
}

inline CVector random_beamformer(std::mt19937_64& engine, Eigen::Index antennas, double max_power,
                                 bool saturate) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CVector w(antennas);
  for (Eigen::Index m = 0; m < antennas; ++m) {
    const double re = normal(engine);
    const double im = normal(engine);
    w[m] = cd(re, im);
  }
  const double scale = saturate ? 1.0 : std::sqrt(unit(engine));
  return w * (scale * std::sqrt(max_power) / w.norm());
}

inline PhaseConfig random_phases(std::mt19937_64& engine, Eigen::Index elements) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  RVector theta(elements);
  for (Eigen::Index n = 0; n < elements; ++n) theta[n] = angle(engine);
  return PhaseConfig(theta);
}

}  // namespace irs::test
