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

#include "irs/model.hpp"

#include "irs/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace irs {

void SystemParams::validate() const {
  if (antennas < 1) throw InvalidInput("antenna count must be >= 1");
  if (elements < 0) throw InvalidInput("element count must be >= 0");
  if (!(max_power_w > 0.0) || !std::isfinite(max_power_w))
    throw InvalidInput("max transmit power must be positive");
  if (!(noise_power_w > 0.0) || !std::isfinite(noise_power_w))
    throw InvalidInput("noise power must be positive");
}

void ChannelSet::validate() const {
  if (direct.size() < 1) throw InvalidInput("direct channel is empty");
  if (ap_irs.rows() != reflect.size() || ap_irs.cols() != direct.size()) {
    throw InvalidInput("AP-IRS channel is " + std::to_string(ap_irs.rows()) + "x" +
                       std::to_string(ap_irs.cols()) + ", expected " +
                       std::to_string(reflect.size()) + "x" +
                       std::to_string(direct.size()));
  }
  if (!direct.allFinite() || !reflect.allFinite() || !ap_irs.allFinite())
    throw InvalidInput("channel contains non-finite entries");
}

void ChannelSet::validate(const SystemParams& sys) const {
  validate();
  if (antennas() != sys.antennas || elements() != sys.elements)
    throw InvalidInput("channel dimensions do not match system parameters");
}

double wrap_phase(double radians) {
  double wrapped = std::fmod(radians, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

PhaseConfig::PhaseConfig(RVector theta) : theta_(std::move(theta)) {
  for (Eigen::Index n = 0; n < theta_.size(); ++n) {
    if (!std::isfinite(theta_[n])) throw InvalidInput("phase shift is not finite");
    theta_[n] = wrap_phase(theta_[n]);
  }
}

PhaseConfig PhaseConfig::zeros(Eigen::Index elements) {
  return PhaseConfig(RVector::Zero(elements));
}

CVector PhaseConfig::reflection() const {
  CVector out(theta_.size());
  for (Eigen::Index n = 0; n < theta_.size(); ++n) out[n] = std::polar(kAmplitude, theta_[n]);
  return out;
}

CRowVector composite_channel(const ChannelSet& ch, const PhaseConfig& phases) {
  ch.validate();
  if (phases.size() != ch.elements())
    throw InvalidInput("phase vector length does not match element count");
  CRowVector out = ch.direct.adjoint();
  if (ch.elements() > 0) {
    const CVector weights = ch.reflect.conjugate().cwiseProduct(phases.reflection());
    out.noalias() += weights.transpose() * ch.ap_irs;
  }
  return out;
}

double received_power(const ChannelSet& ch, const PhaseConfig& phases,
                      const Beamformer& bf) {
  if (bf.w.size() != ch.antennas())
    throw InvalidInput("beamformer length does not match antenna count");
  const cd y = (composite_channel(ch, phases) * bf.w).value();
  return std::norm(y);
}

double receive_snr(const ChannelSet& ch, const PhaseConfig& phases,
                   const Beamformer& bf, const SystemParams& sys) {
  sys.validate();
  if (bf.power() > sys.max_power_w * (1.0 + 1e-9))
    throw InvalidInput("beamformer exceeds the transmit power budget");
  return received_power(ch, phases, bf) / sys.noise_power_w;
}

Beamformer mrt_beamformer(const CRowVector& h_eff, double max_power_w) {
  if (!(max_power_w > 0.0)) throw InvalidInput("max transmit power must be positive");
  const double norm = h_eff.norm();
  if (norm == 0.0) throw DegenerateChannel("MRT requested on a zero channel");
  return Beamformer{CVector(h_eff.adjoint()) * (std::sqrt(max_power_w) / norm)};
}

double to_db(double linear) {
  if (linear == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) { return from_db(dbm - 30.0); }

}  // namespace irs
