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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace irs {

using cd = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Link-level constants. Powers are linear watts.
struct SystemParams {
  int antennas = 8;          // M
  int elements = 50;         // N, zero means no IRS
  double max_power_w = 0.0;  // p_bar
  double noise_power_w = 0.0;

  void validate() const;
};

/// One fading realization.
///
/// `direct` holds h_d and `reflect` holds h_r as column vectors; the link
/// products use their conjugate transposes. `ap_irs` is G (N x M). An empty
/// `reflect` with a 0 x M `ap_irs` is the no-IRS case.
struct ChannelSet {
  CVector direct;
  CVector reflect;
  CMatrix ap_irs;

  Eigen::Index antennas() const { return direct.size(); }
  Eigen::Index elements() const { return reflect.size(); }

  /// Throws InvalidInput on inconsistent dimensions or non-finite entries.
  void validate() const;
  void validate(const SystemParams& sys) const;
};

/// Wraps an angle into [0, 2pi).
double wrap_phase(double radians);

/// IRS phase shifts with unit reflection amplitude. Angles are stored
/// wrapped to [0, 2pi).
class PhaseConfig {
 public:
  static constexpr double kAmplitude = 1.0;

  PhaseConfig() = default;
  explicit PhaseConfig(RVector theta);

  static PhaseConfig zeros(Eigen::Index elements);

  const RVector& theta() const { return theta_; }
  Eigen::Index size() const { return theta_.size(); }
  double operator[](Eigen::Index n) const { return theta_[n]; }

  /// Diagonal of Theta, i.e. e^{j theta_n}.
  CVector reflection() const;

 private:
  RVector theta_;
};

/// AP transmit vector w.
struct Beamformer {
  CVector w;

  double power() const { return w.squaredNorm(); }
};

/// h_r^H Theta G + h_d^H. Reduces to h_d^H when N = 0.
CRowVector composite_channel(const ChannelSet& ch, const PhaseConfig& phases);

/// |(h_r^H Theta G + h_d^H) w|^2 in watts.
double received_power(const ChannelSet& ch, const PhaseConfig& phases,
                      const Beamformer& bf);

/// Received power over noise power. Also rejects beamformers above the
/// power budget.
double receive_snr(const ChannelSet& ch, const PhaseConfig& phases,
                   const Beamformer& bf, const SystemParams& sys);

/// w = sqrt(p_bar) h_eff^H / |h_eff|. Throws DegenerateChannel on zero input.
Beamformer mrt_beamformer(const CRowVector& h_eff, double max_power_w);

/// 10 log10(x); zero maps to -infinity.
double to_db(double linear);
double from_db(double db);
double dbm_to_watts(double dbm);

}  // namespace irs
