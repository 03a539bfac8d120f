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

#include <stdexcept>
#include <string>
#include <utility>

namespace irs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch, out-of-range parameter, or otherwise malformed input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A channel (or composite channel) that is identically zero where a
/// direction is required, e.g. MRT on a zero vector.
class DegenerateChannel : public Error {
 public:
  using Error::Error;
};

/// Rounded SDP solution that cannot be turned into phases.
class DegenerateSolution : public Error {
 public:
  using Error::Error;
};

/// Distance below the 1 m reference of the path-loss law.
class OutOfModel : public Error {
 public:
  using Error::Error;
};

/// Iterative numerical method stopped without meeting its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration value; carries the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config key '" + key + "': " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace irs
