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

#include "irs/channel_gen.hpp"

#include "irs/errors.hpp"

#include <cmath>
#include <string>

namespace irs {

void Geometry::validate() const {
  if (!(ap_irs_distance_m > 0.0)) throw InvalidInput("AP-IRS distance must be positive");
  if (!(user_offset_m >= 0.0)) throw InvalidInput("user offset must be non-negative");
  if (!std::isfinite(user_distance_m)) throw InvalidInput("user distance is not finite");
  if (nx < 1 || ny < 1) throw InvalidInput("URA dimensions must be >= 1");
}

void PathLossParams::validate() const {
  for (double db : {ref_loss_db, penetration_db, gain_ap_dbi, gain_user_dbi,
                    gain_irs_element_dbi}) {
    if (!std::isfinite(db)) throw InvalidInput("path-loss dB quantity is not finite");
  }
  if (!(alpha_direct >= 1.0) || !(alpha_los >= 1.0))
    throw InvalidInput("path-loss exponents must be >= 1");
  if (!(spacing_wavelengths > 0.0)) throw InvalidInput("element spacing must be positive");
}

std::mt19937_64 make_engine(RngSeed rng) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng.seed), static_cast<std::uint32_t>(rng.seed >> 32),
                    static_cast<std::uint32_t>(rng.stream_id),
                    static_cast<std::uint32_t>(rng.stream_id >> 32)};
  return std::mt19937_64(seq);
}

RngSeed substream(RngSeed parent, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = parent.stream_id + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return RngSeed{parent.seed ^ (salt * 0xd6e8feb86659fd93ULL), z};
}

LinkDistances link_distances(const Geometry& geo) {
  const double d = geo.user_distance_m;
  const double dv = geo.user_offset_m;
  const double rest = geo.ap_irs_distance_m - d;
  return {std::sqrt(d * d + dv * dv), std::sqrt(rest * rest + dv * dv)};
}

double path_gain_linear(double distance_m, double exponent, const PathLossParams& params,
                        bool include_penetration, double gains_db) {
  if (!(distance_m >= 1.0))
    throw OutOfModel("path-loss law is defined from the 1 m reference distance, got " +
                     std::to_string(distance_m) + " m");
  double db = -params.ref_loss_db - 10.0 * exponent * std::log10(distance_m) + gains_db;
  if (include_penetration) db -= params.penetration_db;
  return from_db(db);
}

CVector ula_steering(int antennas, double angle_rad, double spacing_wavelengths) {
  if (antennas < 1) throw InvalidInput("ULA needs at least one element");
  const double step = kTwoPi * spacing_wavelengths * std::sin(angle_rad);
  CVector out(antennas);
  for (int m = 0; m < antennas; ++m) out[m] = std::polar(1.0, step * m);
  return out;
}

CVector ura_steering(int nx, int ny, double azimuth_rad, double elevation_rad,
                     double spacing_wavelengths) {
  const CVector horizontal = ula_steering(nx, azimuth_rad, spacing_wavelengths);
  const CVector vertical = ula_steering(ny, elevation_rad, spacing_wavelengths);
  CVector out(static_cast<Eigen::Index>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) out[iy * nx + ix] = vertical[iy] * horizontal[ix];
  return out;
}

namespace {

CVector rayleigh(Eigen::Index size, double gain, std::mt19937_64& engine) {
  std::normal_distribution<double> normal;
  const double scale = std::sqrt(gain / 2.0);
  CVector out(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    out[i] = cd(scale * re, scale * im);
  }
  return out;
}

}  // namespace

ChannelSet generate_channels(const Geometry& geo, const PathLossParams& params,
                             const SystemParams& sys, RngSeed rng) {
  geo.validate();
  params.validate();
  sys.validate();
  if (sys.elements != geo.elements())
    throw InvalidInput("element count " + std::to_string(sys.elements) +
                       " does not match URA " + std::to_string(geo.nx) + "x" +
                       std::to_string(geo.ny));

  const LinkDistances dist = link_distances(geo);
  const double direct_gain = path_gain_linear(dist.ap_user_m, params.alpha_direct, params, true,
                                              params.gain_ap_dbi + params.gain_user_dbi);
  const double reflect_gain =
      path_gain_linear(dist.irs_user_m, params.alpha_direct, params, true,
                       params.gain_irs_element_dbi + params.gain_user_dbi);
  const double los_gain = path_gain_linear(geo.ap_irs_distance_m, params.alpha_los, params, false,
                                           params.gain_ap_dbi + params.gain_irs_element_dbi);

  // AP departure and IRS arrival share the azimuth of the facing arrays.
  const CVector ap_response = ula_steering(sys.antennas, geo.los_azimuth_rad,
                                           params.spacing_wavelengths);
  const CVector irs_response =
      ura_steering(geo.nx, geo.ny, geo.los_azimuth_rad, 0.0, params.spacing_wavelengths);

  std::mt19937_64 engine = make_engine(rng);
  ChannelSet ch;
  ch.direct = rayleigh(sys.antennas, direct_gain, engine);
  ch.reflect = rayleigh(sys.elements, reflect_gain, engine);
  ch.ap_irs = std::sqrt(los_gain) * irs_response * ap_response.adjoint();
  return ch;
}

}  // namespace irs
