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

#include "irs/model.hpp"

#include <cstddef>
#include <vector>

namespace irs {

struct AltOptConfig {
  /// Target phase of h_d^H w. Pinned to zero: the AP rotates its beam so the
  /// IRS never needs arg(h_d^H w) fed back.
  static constexpr double kTargetPhase = 0.0;

  double epsilon = 1e-4;  // threshold on the fractional objective increase
  int max_iter = 30;

  void validate() const;
};

struct AltOptTrace {
  /// Received power (W). Entry 0 is the initialization, w = MRT on h_d with
  /// theta = 0; entry k is the power after iteration k.
  std::vector<double> objectives;
  /// Power after the phase half-step of iteration k (old w, new theta).
  std::vector<double> phase_step_objectives;
  /// | |c w| - (|reflected| + |direct|) | / (|reflected| + |direct|) after
  /// each phase update; zero means the triangle inequality is tight.
  std::vector<double> alignment_residuals;
  int iterations = 0;
  bool converged = false;
  Beamformer final_w;
  PhaseConfig final_theta;
};

/// Phases that co-phase every reflected term with `target_phase`:
/// theta_n = target - arg(conj(h_r[n])) - arg(g_n^H w).
/// Elements with h_r[n] = 0 or g_n^H w = 0 get theta_n = 0.
PhaseConfig optimal_phases_given_w(const ChannelSet& ch, const CVector& w, double target_phase);

/// Indices n where h_r[n] = 0 or g_n^H w = 0, i.e. where the phase above is
/// arbitrary.
std::vector<std::size_t> degenerate_elements(const ChannelSet& ch, const CVector& w);

struct RotatedBeamformer {
  Beamformer beamformer;
  double alpha = 0.0;
  /// h_d^H w_MRT was zero, so any rotation satisfies the constraint.
  bool alpha_arbitrary = false;
};

/// MRT on the composite channel times e^{j alpha}, with alpha chosen so
/// h_d^H w is real and non-negative.
RotatedBeamformer rotated_mrt(const ChannelSet& ch, const PhaseConfig& phases, double max_power_w);

/// Alternates phase alignment and rotated MRT until the fractional increase
/// drops below epsilon or max_iter is reached. Requires N >= 1 and h_d != 0.
AltOptTrace alternating_optimize(const ChannelSet& ch, const SystemParams& sys,
                                 const AltOptConfig& cfg = {});

}  // namespace irs
