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

#include <cstdint>
#include <random>

namespace irs {

/// Deployment geometry. AP at the origin, IRS centre at (d0, 0), user at
/// (d, dv). Both arrays sit at the same altitude, parallel to each other and
/// facing along the AP-IRS line, so the LoS link is seen at broadside unless
/// `los_azimuth_rad` says otherwise.
struct Geometry {
  double ap_irs_distance_m = 51.0;  // d0
  double user_offset_m = 2.0;       // dv
  double user_distance_m = 0.0;     // d
  int nx = 5;
  int ny = 10;
  double los_azimuth_rad = 0.0;

  int elements() const { return nx * ny; }
  void validate() const;
};

struct PathLossParams {
  double ref_loss_db = 30.0;
  double alpha_direct = 3.0;  // AP-user and IRS-user
  double alpha_los = 2.0;     // AP-IRS
  double penetration_db = 10.0;
  double gain_ap_dbi = 0.0;
  double gain_user_dbi = 0.0;
  double gain_irs_element_dbi = 5.0;
  double spacing_wavelengths = 0.5;

  void validate() const;
};

/// Identifies one independent random substream.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Engine for a substream. The (seed, stream_id) pair is mixed through
/// std::seed_seq, so nearby ids give unrelated streams.
std::mt19937_64 make_engine(RngSeed rng);

/// Derives a child substream, e.g. the randomization stream of a trial.
RngSeed substream(RngSeed parent, std::uint64_t salt);

struct LinkDistances {
  double ap_user_m;   // d1
  double irs_user_m;  // d2
};

LinkDistances link_distances(const Geometry& geo);

/// Linear power gain of the reference-distance law
/// -ref_loss - 10 alpha log10(distance) [- penetration] + gains.
/// Throws OutOfModel below 1 m.
double path_gain_linear(double distance_m, double exponent, const PathLossParams& params,
                        bool include_penetration, double gains_db = 0.0);

/// Entry m is e^{j 2 pi s m sin(angle)}, m = 0..M-1.
CVector ula_steering(int antennas, double angle_rad, double spacing_wavelengths);

/// Row-major URA response: element n = iy * nx + ix carries
/// e^{j 2 pi s (ix sin(azimuth) + iy sin(elevation))}.
CVector ura_steering(int nx, int ny, double azimuth_rad, double elevation_rad,
                     double spacing_wavelengths);

/// One fading realization: rank-one LoS G, Rayleigh h_d and h_r.
/// `sys.elements` must equal geo.nx * geo.ny.
ChannelSet generate_channels(const Geometry& geo, const PathLossParams& params,
                             const SystemParams& sys, RngSeed rng);

}  // namespace irs
