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

#include <array>
#include <optional>
#include <string_view>

namespace irs {

/// Stable scheme identifiers, as used on the command line and in CSV output.
enum class Scheme { upper_bound, centralized, distributed, ap_user_mrt, ap_irs_mrt, no_irs };

inline constexpr std::array<Scheme, 6> kAllSchemes{Scheme::upper_bound, Scheme::centralized,
                                                   Scheme::distributed, Scheme::ap_user_mrt,
                                                   Scheme::ap_irs_mrt, Scheme::no_irs};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct FixedBeamDesign {
  Beamformer beamformer;
  PhaseConfig phases;
};

/// w = sqrt(p_bar) h_d / |h_d|, phases aligned to arg(h_d^H w).
FixedBeamDesign ap_user_mrt(const ChannelSet& ch, const SystemParams& sys);

/// w = sqrt(p_bar) g / |g| with g^H the chosen row of G (row 0 by default),
/// phases aligned to arg(h_d^H w). For rank-one G every row gives the same
/// power since rows differ by a scalar.
FixedBeamDesign ap_irs_mrt(const ChannelSet& ch, const SystemParams& sys, Eigen::Index row = 0);

struct NoIrsDesign {
  Beamformer beamformer;
  double power = 0.0;
};

/// Direct link only: MRT on h_d, power p_bar |h_d|^2.
NoIrsDesign no_irs(const ChannelSet& ch, const SystemParams& sys);

}  // namespace irs
