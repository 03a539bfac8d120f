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

#include "irs/baselines.hpp"

#include "irs/alternating_optimizer.hpp"
#include "irs/errors.hpp"

#include <cmath>

namespace irs {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::upper_bound: return "upper_bound";
    case Scheme::centralized: return "centralized";
    case Scheme::distributed: return "distributed";
    case Scheme::ap_user_mrt: return "ap_user_mrt";
    case Scheme::ap_irs_mrt: return "ap_irs_mrt";
    case Scheme::no_irs: return "no_irs";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes)
    if (scheme_name(s) == name) return s;
  return std::nullopt;
}

namespace {

FixedBeamDesign align_to(const ChannelSet& ch, Beamformer bf) {
  const cd direct = ch.direct.dot(bf.w);
  const double target = direct == cd(0.0) ? 0.0 : std::arg(direct);
  PhaseConfig phases = optimal_phases_given_w(ch, bf.w, target);
  return {std::move(bf), std::move(phases)};
}

}  // namespace

FixedBeamDesign ap_user_mrt(const ChannelSet& ch, const SystemParams& sys) {
  sys.validate();
  ch.validate(sys);
  return align_to(ch, mrt_beamformer(ch.direct.adjoint(), sys.max_power_w));
}

FixedBeamDesign ap_irs_mrt(const ChannelSet& ch, const SystemParams& sys, Eigen::Index row) {
  sys.validate();
  ch.validate(sys);
  if (ch.elements() == 0 || ch.ap_irs.isZero(0.0))
    throw DegenerateChannel("AP-IRS MRT needs a nonzero AP-IRS channel");
  if (row < 0 || row >= ch.elements()) throw InvalidInput("AP-IRS row index out of range");
  // g_n^H is row n of G, so MRT toward it is sqrt(p_bar) g_n / |g_n|.
  return align_to(ch, mrt_beamformer(ch.ap_irs.row(row), sys.max_power_w));
}

NoIrsDesign no_irs(const ChannelSet& ch, const SystemParams& sys) {
  sys.validate();
  ch.validate(sys);
  NoIrsDesign out;
  out.beamformer = mrt_beamformer(ch.direct.adjoint(), sys.max_power_w);
  ChannelSet direct_only;
  direct_only.direct = ch.direct;
  direct_only.reflect = CVector(0);
  direct_only.ap_irs = CMatrix(0, ch.antennas());
  out.power = received_power(direct_only, PhaseConfig::zeros(0), out.beamformer);
  return out;
}

}  // namespace irs
