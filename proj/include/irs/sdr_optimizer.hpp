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

#include "irs/channel_gen.hpp"
#include "irs/errors.hpp"
#include "irs/model.hpp"

#include <string>

namespace irs {

/// Unit-modulus QCQP max v_bar^H R v_bar over |v_bar_n| = 1, n = 1..N+1.
///
///   R = [ Phi Phi^H   Phi h_d ]      v_bar = [ v ]
///       [ h_d^H Phi^H    0    ],             [ t ]
///
/// with Phi = diag(h_r^H) G. The quadratic form drops the constant |h_d|^2,
/// kept in `direct_gain` so callers can restore received power.
struct HomogenizedProblem {
  CMatrix r;
  CMatrix phi;
  double direct_gain = 0.0;

  Eigen::Index elements() const { return phi.rows(); }
};

/// Solution of max tr(R V) s.t. diag(V) = 1, V PSD.
struct SdpSolution {
  CMatrix v;
  double objective = 0.0;       // tr(R V)
  double diag_residual = 0.0;   // max |V_nn - 1|
  double psd_residual = 0.0;    // max(0, -lambda_min(V))
  double gap_certificate = 0.0; // duality gap bound, same units as objective
  double stationarity = 0.0;    // |R Y - Diag(y) Y|_F, normalized units
  double restart_spread = 0.0;  // max objective difference between restarts, relative
  int rank = 0;                 // factor width
  int sweeps = 0;               // sweeps of the accepted restart
};

struct SdpOptions {
  double feasibility_tol = 1e-6;
  double objective_tol = 1e-7;  // relative, on the duality gap
  int restarts = 3;
  int max_sweeps = 20000;
  int rank = 0;  // 0 picks ceil(sqrt(2 n))
  RngSeed rng{};
};

/// Thrown when no restart closes the duality gap. Carries the best iterate.
class SdpConvergenceFailure : public NumericalError {
 public:
  SdpConvergenceFailure(const std::string& what, SdpSolution best)
      : NumericalError(what), best_(std::move(best)) {}

  const SdpSolution& best() const noexcept { return best_; }

 private:
  SdpSolution best_;
};

/// Row n of Phi is conj(h_r[n]) times row n of G.
CMatrix build_phi(const CVector& reflect, const CMatrix& ap_irs);

HomogenizedProblem build_homogenized(const CMatrix& phi, const CVector& direct);

/// Solves the unit-diagonal SDP on a factorization V = Y Y^H with unit rows.
///
/// Each sweep replaces row i of Y by the normalized gradient
/// sum_{j != i} R_ij y_j, the exact maximizer of the objective in that row.
/// The iterate is accepted once the dual candidate y_i = Re (R V)_ii gives
/// Diag(y) - R PSD up to the relative gap tolerance; the gap reported is
/// n * max(0, -lambda_min(Diag(y) - R)).
SdpSolution solve_diag_sdp(const CMatrix& r, const SdpOptions& opts = {});

struct RandomizationResult {
  CVector v_bar;
  double objective = 0.0;
};

/// Draws `count` candidates U Sigma^{1/2} r with r ~ CN(0, I), projects each
/// entry to unit modulus and keeps the first best v_bar^H R v_bar.
/// Candidates come from a single stream, so a larger count only appends.
RandomizationResult gaussian_randomization(const SdpSolution& sol, const CMatrix& r, int count,
                                           RngSeed rng);

/// theta_n = -arg(v_bar_n / v_bar_{N+1}), wrapped.
///
/// The homogenized variable stacks v = [e^{j theta_1}, ..., e^{j theta_N}]^H,
/// so its entries carry the conjugate phases.
PhaseConfig recover_phases(const CVector& v_bar);

struct CentralizedOptions {
  SdpOptions sdp;
  int randomizations = 1000;
  RngSeed rng{};
};

struct CentralizedResult {
  Beamformer beamformer;
  PhaseConfig phases;
  double upper_bound_power = 0.0;  // p_bar (tr(R V) + gap + |h_d|^2)
  double achieved_power = 0.0;
  SdpSolution sdp;
  double rounded_objective = 0.0;
};

/// SDR pipeline: homogenize, solve the SDP, randomize, recover phases, then
/// MRT on the composite channel. Requires N >= 1.
CentralizedResult centralized_optimize(const ChannelSet& ch, const SystemParams& sys,
                                       const CentralizedOptions& opts = {});

}  // namespace irs
