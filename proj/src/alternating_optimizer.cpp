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

#include "irs/alternating_optimizer.hpp"

#include "irs/errors.hpp"

#include <cmath>
#include <limits>

namespace irs {

void AltOptConfig::validate() const {
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  if (max_iter < 1) throw InvalidInput("max_iter must be >= 1");
}

PhaseConfig optimal_phases_given_w(const ChannelSet& ch, const CVector& w, double target_phase) {
  ch.validate();
  if (w.size() != ch.antennas()) throw InvalidInput("beamformer length does not match antennas");
  const CVector incident = ch.ap_irs * w;  // g_n^H w
  RVector theta(ch.elements());
  for (Eigen::Index n = 0; n < ch.elements(); ++n) {
    const cd h = std::conj(ch.reflect[n]);
    if (h == cd(0.0) || incident[n] == cd(0.0)) {
      theta[n] = 0.0;
      continue;
    }
    theta[n] = target_phase - std::arg(h) - std::arg(incident[n]);
  }
  return PhaseConfig(std::move(theta));
}

std::vector<std::size_t> degenerate_elements(const ChannelSet& ch, const CVector& w) {
  ch.validate();
  if (w.size() != ch.antennas()) throw InvalidInput("beamformer length does not match antennas");
  const CVector incident = ch.ap_irs * w;
  std::vector<std::size_t> out;
  for (Eigen::Index n = 0; n < ch.elements(); ++n)
    if (ch.reflect[n] == cd(0.0) || incident[n] == cd(0.0)) out.push_back(static_cast<std::size_t>(n));
  return out;
}

RotatedBeamformer rotated_mrt(const ChannelSet& ch, const PhaseConfig& phases, double max_power_w) {
  RotatedBeamformer out;
  out.beamformer = mrt_beamformer(composite_channel(ch, phases), max_power_w);
  const cd direct = ch.direct.dot(out.beamformer.w);  // h_d^H w
  if (direct == cd(0.0)) {
    out.alpha_arbitrary = true;
    return out;
  }
  out.alpha = wrap_phase(-std::arg(direct));
  out.beamformer.w *= std::polar(1.0, out.alpha);
  return out;
}

namespace {

double alignment_residual(const ChannelSet& ch, const PhaseConfig& phases, const CVector& w) {
  const cd reflected =
      ch.reflect.conjugate().cwiseProduct(phases.reflection()).cwiseProduct(ch.ap_irs * w).sum();
  const cd direct = ch.direct.dot(w);
  const double bound = std::abs(reflected) + std::abs(direct);
  if (bound == 0.0) return 0.0;
  return std::abs(std::abs(reflected + direct) - bound) / bound;
}

}  // namespace

AltOptTrace alternating_optimize(const ChannelSet& ch, const SystemParams& sys,
                                 const AltOptConfig& cfg) {
  sys.validate();
  cfg.validate();
  ch.validate(sys);
  if (ch.elements() < 1) throw InvalidInput("alternating design needs at least one element");

  AltOptTrace trace;
  Beamformer w = mrt_beamformer(ch.direct.adjoint(), sys.max_power_w);
  PhaseConfig theta = PhaseConfig::zeros(ch.elements());
  double previous = received_power(ch, theta, w);
  trace.objectives.push_back(previous);

  for (int k = 1; k <= cfg.max_iter; ++k) {
    theta = optimal_phases_given_w(ch, w.w, AltOptConfig::kTargetPhase);
    trace.phase_step_objectives.push_back(received_power(ch, theta, w));
    trace.alignment_residuals.push_back(alignment_residual(ch, theta, w.w));

    w = rotated_mrt(ch, theta, sys.max_power_w).beamformer;
    const double current = received_power(ch, theta, w);
    trace.objectives.push_back(current);
    trace.iterations = k;

    const double increase = previous > 0.0 ? (current - previous) / previous
                            : current > 0.0 ? std::numeric_limits<double>::infinity()
                                            : 0.0;
    previous = current;
    if (increase < cfg.epsilon) {
      trace.converged = true;
      break;
    }
  }
  trace.final_w = std::move(w);
  trace.final_theta = std::move(theta);
  return trace;
}

}  // namespace irs
