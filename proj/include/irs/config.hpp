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

#include "irs/sweep.hpp"

#include <map>
#include <string>
#include <vector>

namespace irs {

using ConfigMap = std::map<std::string, std::string>;

/// Every recognized key. Config files and command-line flags share them.
const std::vector<std::string>& config_keys();

/// Reads flat `key = value` lines. `#` starts a comment; blank lines are
/// ignored; a repeated key keeps its last value.
ConfigMap read_config_file(const std::string& path);
ConfigMap parse_config_text(const std::string& text);

/// Later maps win, so pass (file, command line).
ConfigMap merge(const ConfigMap& base, const ConfigMap& overrides);

/// Defaults for `experiment`, overridden by `values`, then validated.
SweepConfig make_sweep_config(Experiment experiment, const ConfigMap& values);

}  // namespace irs
