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

#include "irs/config.hpp"

#include "irs/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>

namespace irs {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw ConfigError(key, "cannot parse '" + text + "' as a number");
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw ConfigError(key, "value must be finite");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError(key, "expected a boolean, got '" + text + "'");
}

using Setter = std::function<void(SweepConfig&, const std::string& key, const std::string& value)>;

template <class T, class Member>
Setter number(Member member) {
  return [member](SweepConfig& cfg, const std::string& key, const std::string& value) {
    std::invoke(member, cfg) = parse_number<T>(key, value);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"seed", number<std::uint64_t>([](SweepConfig& c) -> auto& { return c.seed; })},
      {"trials", number<int>([](SweepConfig& c) -> auto& { return c.trials; })},
      {"threads", number<int>([](SweepConfig& c) -> auto& { return c.threads; })},
      {"timing", [](SweepConfig& c, const std::string& k, const std::string& v) { c.timing = parse_bool(k, v); }},
      {"out", [](SweepConfig& c, const std::string&, const std::string& v) { c.output_path = v; }},
      {"schemes",
       [](SweepConfig& c, const std::string& k, const std::string& v) {
         c.schemes.clear();
         for (const std::string& name : split_list(v)) {
           const auto s = parse_scheme(name);
           if (!s) throw ConfigError(k, "unknown scheme '" + name + "'");
           if (std::find(c.schemes.begin(), c.schemes.end(), *s) == c.schemes.end())
             c.schemes.push_back(*s);
         }
       }},
      {"M", number<int>([](SweepConfig& c) -> auto& { return c.antennas; })},
      {"Nx", number<int>([](SweepConfig& c) -> auto& { return c.geometry.nx; })},
      {"Ny", number<int>([](SweepConfig& c) -> auto& { return c.geometry.ny; })},
      {"d0", number<double>([](SweepConfig& c) -> auto& { return c.geometry.ap_irs_distance_m; })},
      {"dv", number<double>([](SweepConfig& c) -> auto& { return c.geometry.user_offset_m; })},
      {"los_azimuth_deg",
       [](SweepConfig& c, const std::string& k, const std::string& v) {
         c.geometry.los_azimuth_rad = parse_number<double>(k, v) * kTwoPi / 360.0;
       }},
      {"d_values",
       [](SweepConfig& c, const std::string& k, const std::string& v) {
         c.d_values.clear();
         for (const std::string& item : split_list(v)) c.d_values.push_back(parse_number<double>(k, item));
       }},
      {"N_values",
       [](SweepConfig& c, const std::string& k, const std::string& v) {
         c.n_values.clear();
         for (const std::string& item : split_list(v)) c.n_values.push_back(parse_number<int>(k, item));
       }},
      {"p_bar_dbm", number<double>([](SweepConfig& c) -> auto& { return c.max_power_dbm; })},
      {"sigma2_dbm", number<double>([](SweepConfig& c) -> auto& { return c.noise_power_dbm; })},
      {"ref_loss_db", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.ref_loss_db; })},
      {"alpha_direct", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.alpha_direct; })},
      {"alpha_los", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.alpha_los; })},
      {"penetration_db", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.penetration_db; })},
      {"gain_ap_dbi", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.gain_ap_dbi; })},
      {"gain_user_dbi", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.gain_user_dbi; })},
      {"gain_irs_element_dbi",
       number<double>([](SweepConfig& c) -> auto& { return c.path_loss.gain_irs_element_dbi; })},
      {"spacing", number<double>([](SweepConfig& c) -> auto& { return c.path_loss.spacing_wavelengths; })},
      {"epsilon", number<double>([](SweepConfig& c) -> auto& { return c.alt.epsilon; })},
      {"max_iter", number<int>([](SweepConfig& c) -> auto& { return c.alt.max_iter; })},
      {"randomizations", number<int>([](SweepConfig& c) -> auto& { return c.randomizations; })},
      {"sdp_tol", number<double>([](SweepConfig& c) -> auto& { return c.sdp_feasibility_tol; })},
      {"sdp_objective_tol", number<double>([](SweepConfig& c) -> auto& { return c.sdp_objective_tol; })},
      {"sdp_restarts", number<int>([](SweepConfig& c) -> auto& { return c.sdp_restarts; })},
      {"grid_points", number<int>([](SweepConfig& c) -> auto& { return c.grid_points; })},
      {"instances", number<int>([](SweepConfig& c) -> auto& { return c.instances; })},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [key, setter] : setters()) out.push_back(key);
    return out;
  }();
  return keys;
}

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap out;
  std::stringstream ss(text);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number), "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(number), "missing key");
    out[key] = trim(std::string_view(line).substr(eq + 1));
  }
  return out;
}

ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file '" + path + "'");
  return parse_config_text(buffer.str());
}

ConfigMap merge(const ConfigMap& base, const ConfigMap& overrides) {
  ConfigMap out = base;
  for (const auto& [key, value] : overrides) out[key] = value;
  return out;
}

SweepConfig make_sweep_config(Experiment experiment, const ConfigMap& values) {
  SweepConfig cfg;
  cfg.experiment = experiment;
  switch (experiment) {
    case Experiment::distance_sweep:
      cfg.d_values = {15, 17, 20, 25, 30, 33, 35, 38, 40, 43, 45, 47, 50};
      cfg.schemes.assign(kAllSchemes.begin(), kAllSchemes.end());
      break;
    case Experiment::elements_sweep:
      cfg.d_values = {15, 43, 50};
      cfg.n_values = {10, 20, 30, 40, 50, 60, 70, 80};
      cfg.schemes.assign(kAllSchemes.begin(), kAllSchemes.end());
      break;
    case Experiment::convergence_trace:
      cfg.d_values = {15, 43, 50};
      cfg.schemes = {Scheme::distributed};
      break;
    case Experiment::oracle_check:
      cfg.d_values = {0};
      cfg.schemes = {Scheme::centralized, Scheme::distributed};
      break;
  }
  const auto& table = setters();
  for (const auto& [key, value] : values) {
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError(key, "unknown key");
    it->second(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

void SweepConfig::validate() const {
  auto require = [](bool ok, const char* key, const std::string& what) {
    if (!ok) throw ConfigError(key, what);
  };
  require(trials >= 1, "trials", "must be >= 1");
  require(threads >= 1, "threads", "must be >= 1");
  require(antennas >= 1, "M", "must be >= 1");
  require(geometry.nx >= 1, "Nx", "must be >= 1");
  require(geometry.ny >= 1, "Ny", "must be >= 1");
  require(geometry.ap_irs_distance_m > 0.0, "d0", "must be positive");
  require(geometry.user_offset_m >= 0.0, "dv", "must be non-negative");
  require(!schemes.empty(), "schemes", "at least one scheme is required");
  require(alt.epsilon > 0.0, "epsilon", "must be positive");
  require(alt.max_iter >= 1, "max_iter", "must be >= 1");
  require(randomizations >= 1, "randomizations", "must be >= 1");
  require(sdp_feasibility_tol > 0.0, "sdp_tol", "must be positive");
  require(sdp_objective_tol > 0.0, "sdp_objective_tol", "must be positive");
  require(sdp_restarts >= 1, "sdp_restarts", "must be >= 1");
  require(grid_points >= 16, "grid_points", "must be >= 16");
  require(instances >= 1, "instances", "must be >= 1");
  require(path_loss.alpha_direct >= 1.0, "alpha_direct", "must be >= 1");
  require(path_loss.alpha_los >= 1.0, "alpha_los", "must be >= 1");
  require(path_loss.spacing_wavelengths > 0.0, "spacing", "must be positive");

  if (experiment == Experiment::oracle_check) return;

  require(!d_values.empty(), "d_values", "at least one distance is required");
  for (double d : d_values) {
    require(d >= 0.0 && d <= geometry.ap_irs_distance_m, "d_values",
            "distance " + format_double(d) + " m outside [0, d0]");
    Geometry geo = geometry;
    geo.user_distance_m = d;
    const LinkDistances dist = link_distances(geo);
    require(dist.ap_user_m >= 1.0 && dist.irs_user_m >= 1.0, "d_values",
            "distance " + format_double(d) + " m puts a link inside the 1 m reference distance");
  }
  if (experiment == Experiment::elements_sweep) {
    require(!n_values.empty(), "N_values", "at least one element count is required");
    for (int n : n_values)
      require(n > 0 && n % geometry.ny == 0, "N_values",
              "element count " + std::to_string(n) + " is not a positive multiple of Ny");
  }
}

}  // namespace irs
