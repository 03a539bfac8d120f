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

#include "irs/sdr_optimizer.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace irs {

CMatrix build_phi(const CVector& reflect, const CMatrix& ap_irs) {
  if (ap_irs.rows() != reflect.size())
    throw InvalidInput("IRS-user channel length does not match AP-IRS rows");
  return reflect.conjugate().asDiagonal() * ap_irs;
}

HomogenizedProblem build_homogenized(const CMatrix& phi, const CVector& direct) {
  if (phi.cols() != direct.size())
    throw InvalidInput("Phi columns do not match direct channel length");
  const Eigen::Index n = phi.rows();
  HomogenizedProblem out;
  out.phi = phi;
  out.direct_gain = direct.squaredNorm();
  out.r = CMatrix::Zero(n + 1, n + 1);
  out.r.topLeftCorner(n, n) = phi * phi.adjoint();
  const CVector cross = phi * direct;
  out.r.topRightCorner(n, 1) = cross;
  out.r.bottomLeftCorner(1, n) = cross.adjoint();
  return out;
}

namespace {

struct Certificate {
  double objective;     // normalized units
  double stationarity;
  double gap;           // normalized units
};

// (R Y) and the per-row dual candidate y_i = Re <y_i, (R Y)_i>.
Certificate certify(const CMatrix& rn, const CMatrix& y, bool with_gap) {
  const CMatrix ry = rn * y;
  const Eigen::Index n = rn.rows();
  RVector dual(n);
  for (Eigen::Index i = 0; i < n; ++i) dual[i] = y.row(i).dot(ry.row(i)).real();
  Certificate cert{};
  cert.objective = dual.sum();
  cert.stationarity = (ry - dual.asDiagonal() * y).norm();
  cert.gap = std::numeric_limits<double>::infinity();
  if (with_gap) {
    CMatrix slack = -rn;
    slack.diagonal() += dual.cast<cd>();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(slack, Eigen::EigenvaluesOnly);
    cert.gap = static_cast<double>(n) * std::max(0.0, -es.eigenvalues()[0]);
  }
  return cert;
}

void normalize_rows(CMatrix& y) {
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    const double norm = y.row(i).norm();
    if (norm > 0.0) {
      y.row(i) /= norm;
    } else {
      y.row(i).setZero();
      y(i, 0) = 1.0;
    }
  }
}

struct RestartOutcome {
  CMatrix y;
  Certificate cert;
  int sweeps = 0;
  bool certified = false;
};

RestartOutcome run_restart(const CMatrix& rn, int rank, const SdpOptions& opts, RngSeed rng) {
  const Eigen::Index n = rn.rows();
  std::mt19937_64 engine = make_engine(rng);
  std::normal_distribution<double> normal;
  RestartOutcome out;
  out.y.resize(n, rank);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int k = 0; k < rank; ++k) {
      const double re = normal(engine);
      const double im = normal(engine);
      out.y(i, k) = cd(re, im);
    }
  normalize_rows(out.y);

  double previous = -std::numeric_limits<double>::infinity();
  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    for (Eigen::Index i = 0; i < n; ++i) {
      CRowVector grad = rn.row(i) * out.y;
      grad -= rn(i, i) * out.y.row(i);
      const double norm = grad.norm();
      if (norm > 0.0) out.y.row(i) = grad / norm;
    }
    out.sweeps = sweep;

    Certificate cert = certify(rn, out.y, false);
    const double scale = 1.0 + std::abs(cert.objective);
    const bool stalled = cert.objective - previous <= 1e-15 * scale;
    previous = cert.objective;
    if (cert.stationarity > std::sqrt(opts.objective_tol) * scale && !stalled) continue;
    if (!stalled && sweep % 5 != 0) continue;

    cert = certify(rn, out.y, true);
    out.cert = cert;
    if (cert.gap <= opts.objective_tol * scale) {
      out.certified = true;
      return out;
    }
    if (stalled && cert.stationarity <= 1e-12 * scale) break;  // stuck at a non-optimal critical point
  }
  out.cert = certify(rn, out.y, true);
  out.certified = out.cert.gap <= opts.objective_tol * (1.0 + std::abs(out.cert.objective));
  return out;
}

SdpSolution finish(const CMatrix& r, const CMatrix& y, double scale, const Certificate& cert,
                   int rank, int sweeps) {
  SdpSolution sol;
  sol.v = y * y.adjoint();
  sol.rank = rank;
  sol.sweeps = sweeps;
  sol.objective = (r.cwiseProduct(sol.v.transpose())).sum().real();
  sol.diag_residual = (sol.v.diagonal().array() - cd(1.0)).abs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sol.v, Eigen::EigenvaluesOnly);
  sol.psd_residual = std::max(0.0, -es.eigenvalues()[0]);
  sol.gap_certificate = cert.gap * scale;
  sol.stationarity = cert.stationarity;
  return sol;
}

SdpSolution identity_solution(Eigen::Index n) {
  SdpSolution sol;
  sol.v = CMatrix::Identity(n, n);
  sol.rank = static_cast<int>(n);
  return sol;
}

}  // namespace

SdpSolution solve_diag_sdp(const CMatrix& r, const SdpOptions& opts) {
  const Eigen::Index n = r.rows();
  if (n == 0 || r.cols() != n) throw InvalidInput("SDP cost matrix must be square and non-empty");
  if (!r.allFinite()) throw InvalidInput("SDP cost matrix has non-finite entries");
  if (opts.restarts < 1 || opts.max_sweeps < 1)
    throw InvalidInput("SDP solver needs at least one restart and one sweep");

  const double scale = r.cwiseAbs().maxCoeff();
  if ((r - r.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidInput("SDP cost matrix is not Hermitian");
  if (scale == 0.0) return identity_solution(n);
  if (n == 1) {
    SdpSolution sol = identity_solution(1);
    sol.objective = r(0, 0).real();
    return sol;
  }

  const CMatrix rn = (r + r.adjoint()) / (2.0 * scale);
  int rank = opts.rank > 0 ? opts.rank
                           : static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(n))));
  rank = std::clamp(rank, 1, static_cast<int>(n));

  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(opts.restarts));
  for (int k = 0; k < opts.restarts; ++k)
    outcomes.push_back(run_restart(rn, rank, opts, substream(opts.rng, static_cast<std::uint64_t>(k))));

  // First best certified restart; otherwise the best iterate overall.
  std::size_t best = 0;
  bool any_certified = false;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    if (o.certified && (!any_certified || o.cert.objective > outcomes[best].cert.objective)) {
      best = k;
      any_certified = true;
    } else if (!any_certified && o.cert.objective > outcomes[best].cert.objective) {
      best = k;
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& o : outcomes) {
    lo = std::min(lo, o.cert.objective);
    hi = std::max(hi, o.cert.objective);
  }

  const auto& chosen = outcomes[best];
  SdpSolution sol = finish(r, chosen.y, scale, chosen.cert, rank, chosen.sweeps);
  sol.restart_spread = (hi - lo) / (1.0 + std::abs(hi));

  if (!any_certified) {
    std::ostringstream msg;
    msg << "unit-diagonal SDP did not reach the gap tolerance (gap " << sol.gap_certificate
        << ", objective " << sol.objective << ")";
    throw SdpConvergenceFailure(msg.str(), sol);
  }
  return sol;
}

RandomizationResult gaussian_randomization(const SdpSolution& sol, const CMatrix& r, int count,
                                           RngSeed rng) {
  if (count < 1) throw InvalidInput("randomization count must be >= 1");
  const Eigen::Index n = sol.v.rows();
  if (n == 0 || sol.v.cols() != n || r.rows() != n || r.cols() != n)
    throw InvalidInput("SDP solution and cost matrix sizes differ");

  Eigen::SelfAdjointEigenSolver<CMatrix> es(sol.v);
  RVector sqrt_eig = es.eigenvalues();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sqrt_eig[i] < -1e-9) throw InvalidInput("SDP solution is not positive semidefinite");
    sqrt_eig[i] = std::sqrt(std::max(0.0, sqrt_eig[i]));
  }
  const CMatrix factor = es.eigenvectors() * sqrt_eig.asDiagonal();

  std::mt19937_64 engine = make_engine(rng);
  std::normal_distribution<double> normal;
  const double half = std::sqrt(0.5);

  RandomizationResult best;
  best.objective = -std::numeric_limits<double>::infinity();
  CVector draw(n);
  CVector candidate(n);
  for (int k = 0; k < count; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      draw[i] = cd(half * re, half * im);
    }
    candidate.noalias() = factor * draw;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mag = std::abs(candidate[i]);
      candidate[i] = mag > 0.0 ? candidate[i] / mag : cd(1.0);
    }
    const double objective = candidate.dot(r * candidate).real();
    if (objective > best.objective) {
      best.objective = objective;
      best.v_bar = candidate;
    }
  }
  return best;
}

PhaseConfig recover_phases(const CVector& v_bar) {
  if (v_bar.size() < 1) throw InvalidInput("homogenized vector is empty");
  const cd last = v_bar[v_bar.size() - 1];
  if (std::abs(last) == 0.0) throw DegenerateSolution("auxiliary entry of v_bar is zero");
  const Eigen::Index n = v_bar.size() - 1;
  RVector theta(n);
  for (Eigen::Index i = 0; i < n; ++i) theta[i] = -std::arg(v_bar[i] / last);
  return PhaseConfig(std::move(theta));
}

CentralizedResult centralized_optimize(const ChannelSet& ch, const SystemParams& sys,
                                       const CentralizedOptions& opts) {
  sys.validate();
  ch.validate(sys);
  if (ch.elements() < 1) throw InvalidInput("centralized design needs at least one element");

  const HomogenizedProblem problem =
      build_homogenized(build_phi(ch.reflect, ch.ap_irs), ch.direct);

  CentralizedResult out;
  out.sdp = solve_diag_sdp(problem.r, opts.sdp);
  const RandomizationResult rounded =
      gaussian_randomization(out.sdp, problem.r, opts.randomizations, opts.rng);
  out.rounded_objective = rounded.objective;
  out.phases = recover_phases(rounded.v_bar);
  out.beamformer = mrt_beamformer(composite_channel(ch, out.phases), sys.max_power_w);
  out.achieved_power = received_power(ch, out.phases, out.beamformer);
  // primal value plus the certified gap bounds the relaxation optimum from above
  out.upper_bound_power =
      sys.max_power_w * (out.sdp.objective + out.sdp.gap_certificate + problem.direct_gain);
  return out;
}

}  // namespace irs
