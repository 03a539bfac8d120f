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

#include "irs/alternating_optimizer.hpp"
#include "irs/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace irs;

TEST_CASE("optimal_phases_given_w") {
  SUBCASE("already aligned real channels") {
    ChannelSet ch;
    ch.direct = CVector::Constant(2, 0.5);
    ch.reflect = CVector::Constant(3, 0.2);
    ch.ap_irs = CMatrix::Constant(3, 2, 0.1);
    const PhaseConfig p = optimal_phases_given_w(ch, CVector::Constant(2, 1.0), 0.0);
    CHECK(p.theta().norm() == 0.0);
  }
  SUBCASE("direct evaluation of the closed form") {
    ChannelSet ch;
    ch.direct = CVector::Constant(1, 1.0);
    // conj(h_r) has phase pi/4, g^H w has phase pi/3
    ch.reflect = CVector::Constant(1, std::polar(0.3, -M_PI / 4));
    ch.ap_irs = CMatrix::Constant(1, 1, std::polar(2.0, M_PI / 3));
    const PhaseConfig p = optimal_phases_given_w(ch, CVector::Constant(1, 1.0), 0.0);
    CHECK(p[0] == doctest::Approx(17 * M_PI / 12));
  }
  SUBCASE("seed-42 beats 1000 random phase vectors with the same w") {
    const ChannelSet ch = test::random_channel(3, 6, 42);
    std::mt19937_64 engine(42);
    const Beamformer w{test::random_beamformer(engine, 3, 1.0, true)};
    const double target = std::arg(ch.direct.dot(w.w));
    const double best = received_power(ch, optimal_phases_given_w(ch, w.w, target), w);
    for (int k = 0; k < 1000; ++k)
      CHECK(received_power(ch, test::random_phases(engine, 6), w) <= best * (1 + 1e-12));
  }
  SUBCASE("equality condition and amplitude independence") {
    std::mt19937_64 engine(4);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const ChannelSet ch = test::random_channel(4, 7, 88, s);
      CVector w = test::random_beamformer(engine, 4, 1.0, true);
      w *= std::polar(1.0, -std::arg(ch.direct.dot(w)));  // arg(h_d^H w) = 0
      const PhaseConfig p = optimal_phases_given_w(ch, w, 0.0);
      const cd reflected =
          ch.reflect.conjugate().cwiseProduct(p.reflection()).cwiseProduct(ch.ap_irs * w).sum();
      const cd direct = ch.direct.dot(w);
      CHECK(std::abs(std::remainder(std::arg(reflected), kTwoPi)) < 1e-9);
      CHECK(std::abs(reflected + direct) ==
            doctest::Approx(std::abs(reflected) + std::abs(direct)).epsilon(1e-9));

      ChannelSet scaled = ch;
      std::uniform_real_distribution<double> gain(0.1, 10.0);
      for (Eigen::Index n = 0; n < scaled.reflect.size(); ++n) scaled.reflect[n] *= gain(engine);
      CHECK((optimal_phases_given_w(scaled, w, 0.0).theta() - p.theta()).norm() < 1e-12);
    }
  }
  SUBCASE("degenerate elements get phase 0") {
    ChannelSet ch = test::random_channel(2, 3, 3);
    ch.reflect[1] = 0.0;
    ch.ap_irs.row(2).setZero();
    const CVector w = CVector::Constant(2, 0.5);
    const PhaseConfig p = optimal_phases_given_w(ch, w, 0.0);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 0.0);
    CHECK(degenerate_elements(ch, w) == std::vector<std::size_t>{1, 2});
  }
  CHECK_THROWS_AS(optimal_phases_given_w(test::random_channel(2, 3, 1), CVector::Ones(3), 0.0),
                  InvalidInput);
}

TEST_CASE("rotated_mrt") {
  SUBCASE("dead reflect path") {
    ChannelSet ch = test::random_channel(4, 3, 12);
    ch.reflect.setZero();
    const RotatedBeamformer r = rotated_mrt(ch, PhaseConfig::zeros(3), 2.0);
    CHECK(std::abs(r.alpha) < 1e-15);
    const cd direct = ch.direct.dot(r.beamformer.w);
    CHECK(std::abs(direct.imag()) < 1e-12);
    CHECK(direct.real() == doctest::Approx(std::sqrt(2.0) * ch.direct.norm()));
  }
  SUBCASE("rotation changes bookkeeping only") {
    std::mt19937_64 engine(13);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const ChannelSet ch = test::random_channel(1 + static_cast<int>(s % 5), 4, 42, s);
      const PhaseConfig theta = test::random_phases(engine, 4);
      const RotatedBeamformer r = rotated_mrt(ch, theta, 0.8);
      const Beamformer plain = mrt_beamformer(composite_channel(ch, theta), 0.8);
      CHECK(r.beamformer.power() == doctest::Approx(0.8).epsilon(1e-12));
      const double rotated_power = received_power(ch, theta, r.beamformer);
      CHECK(rotated_power == doctest::Approx(received_power(ch, theta, plain)).epsilon(1e-12));
      const cd direct = ch.direct.dot(r.beamformer.w);
      CHECK(std::abs(direct.imag()) <= 1e-9 * std::abs(direct));
      CHECK(direct.real() >= 0.0);
      CHECK(std::abs(std::arg(direct)) < 1e-9);
    }
  }
  SUBCASE("orthogonal direct channel leaves alpha arbitrary") {
    ChannelSet ch;
    ch.direct = CVector::Zero(2);
    ch.direct[0] = 1.0;
    ch.reflect = CVector::Constant(1, 1.0);
    ch.ap_irs = CMatrix::Zero(1, 2);
    ch.ap_irs(0, 1) = 1.0;
    ch.ap_irs(0, 0) = -1.0;  // composite = [0, 1]
    const RotatedBeamformer r = rotated_mrt(ch, PhaseConfig::zeros(1), 1.0);
    CHECK(r.alpha_arbitrary);
    CHECK(r.alpha == 0.0);
  }
  SUBCASE("zero composite channel") {
    ChannelSet ch;
    ch.direct = CVector::Zero(2);
    ch.reflect = CVector::Zero(1);
    ch.ap_irs = CMatrix::Zero(1, 2);
    CHECK_THROWS_AS(rotated_mrt(ch, PhaseConfig::zeros(1), 1.0), DegenerateChannel);
  }
}

TEST_CASE("alternating_optimize") {
  SUBCASE("dead reflect path converges after one iteration") {
    ChannelSet ch = test::random_channel(4, 5, 2);
    ch.reflect.setZero();
    const AltOptTrace t = alternating_optimize(ch, test::unit_system(4, 5, 3.0));
    CHECK(t.iterations == 1);
    CHECK(t.converged);
    CHECK(t.objectives.size() == 2);
    CHECK(t.objectives.back() == doctest::Approx(3.0 * ch.direct.squaredNorm()));
  }
  SUBCASE("seed-42 N=2 M=2 within 2% of the grid optimum") {
    const ChannelSet ch = test::random_channel(2, 2, 42);
    const AltOptTrace t = alternating_optimize(ch, test::unit_system(2, 2));
    CHECK(t.objectives.back() >= 0.98 * test::grid_search_power(ch, 1.0, 64));
  }
  SUBCASE("trace invariants") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const int m = 1 + static_cast<int>(s % 6);
      const int n = 1 + static_cast<int>(s % 17);
      const ChannelSet ch = test::random_channel(m, n, 123, s);
      const AltOptTrace t = alternating_optimize(ch, test::unit_system(m, n, 0.3));
      REQUIRE(t.objectives.size() == static_cast<std::size_t>(t.iterations) + 1);
      CHECK(t.phase_step_objectives.size() == static_cast<std::size_t>(t.iterations));
      for (std::size_t k = 1; k < t.objectives.size(); ++k) {
        CHECK(t.phase_step_objectives[k - 1] >= t.objectives[k - 1] * (1 - 1e-12));
        CHECK(t.objectives[k] >= t.phase_step_objectives[k - 1] * (1 - 1e-12));
        CHECK(t.alignment_residuals[k - 1] <= 1e-9);
      }
      CHECK(t.iterations <= 30);
      CHECK(t.final_w.power() == doctest::Approx(0.3));
      CHECK(received_power(ch, t.final_theta, t.final_w) == doctest::Approx(t.objectives.back()));
      // initialization is AP-user MRT with theta = 0
      const Beamformer w0 = mrt_beamformer(ch.direct.adjoint(), 0.3);
      CHECK(t.objectives.front() == doctest::Approx(received_power(ch, PhaseConfig::zeros(n), w0)));
    }
  }
  SUBCASE("iteration cap reports non-convergence") {
    const ChannelSet ch = test::random_channel(3, 8, 5);
    AltOptConfig cfg;
    cfg.max_iter = 1;
    cfg.epsilon = 1e-300;
    const AltOptTrace t = alternating_optimize(ch, test::unit_system(3, 8), cfg);
    CHECK(t.iterations == 1);
    CHECK_FALSE(t.converged);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(alternating_optimize(test::random_channel(2, 0, 1), test::unit_system(2, 0)),
                    InvalidInput);
    ChannelSet ch = test::random_channel(2, 3, 1);
    ch.direct.setZero();
    CHECK_THROWS_AS(alternating_optimize(ch, test::unit_system(2, 3)), DegenerateChannel);
    AltOptConfig bad;
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(alternating_optimize(test::random_channel(2, 3, 1), test::unit_system(2, 3), bad),
                    InvalidInput);
  }
}
