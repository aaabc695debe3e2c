// Copyright 2026 The ioncat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "ioncat/coupling.hpp"
#include "ioncat/errors.hpp"
#include "test_support.hpp"

using namespace ioncat;
using ioncat::testing::max_abs_diff;
using ioncat::testing::random_vector;

TEST_CASE("dispersive coupling constant", "[coupling]") {
  CHECK(compute_chi({1.0, 1.0, 1.0, 1}) == 1.0);
  // 0.1^2 (2 pi 1e5)^2 / (2 * 2 pi 1e7) = 10 pi
  const double chi = compute_chi({0.1, 2 * std::numbers::pi * 1e5, 2 * std::numbers::pi * 1e7, 2});
  CHECK(chi == Catch::Approx(31.415926535897931).epsilon(1e-14));
  const double base = compute_chi({0.3, 2.0, 5.0, 3});
  CHECK(compute_chi({0.3, 4.0, 5.0, 3}) == Catch::Approx(4.0 * base).epsilon(1e-15));
  CHECK_THROWS_AS(compute_chi({0.1, 1.0, 0.0, 1}), ParameterError);
  CHECK_THROWS_AS(compute_chi({-0.1, 1.0, 1.0, 1}), ParameterError);
}

TEST_CASE("pulse schedule doubles each ion", "[coupling]") {
  for (int m = 1; m <= 6; ++m) {
    const auto schedule = make_pulse_schedule(m);
    REQUIRE(schedule.phases.size() == static_cast<std::size_t>(m));
    CHECK(schedule.phases.back() == std::numbers::pi);
    for (int j = 1; j < m; ++j) {
      CHECK(schedule.phases[j] / schedule.phases[j - 1] == 2.0);
    }
  }
  const auto tau = pulse_durations(make_pulse_schedule(2), 10.0);
  CHECK(tau[0] == Catch::Approx(std::numbers::pi / 20.0));
  CHECK(tau[1] == Catch::Approx(std::numbers::pi / 10.0));
}

TEST_CASE("single-ion pulse phases", "[coupling]") {
  const auto u11 = ion_pulse_unitary(1, 1, 4);
  CHECK(std::abs(u11.entry(1, 1) - Complex(-1.0, 0.0)) < 1e-15);
  for (int n = 0; n <= 4; ++n) {
    CHECK(u11.entry(0, n) == Complex(1.0, 0.0));
  }
  const auto u22 = ion_pulse_unitary(2, 2, 4);
  CHECK(std::abs(u22.entry(2, 1) - Complex(-1.0, 0.0)) < 1e-15);
  // ion 2 idle for k = 1 (bit s_2 = 0)
  CHECK(u22.entry(1, 3) == Complex(1.0, 0.0));
  for (int m = 1; m <= 3; ++m) {
    for (int j = 1; j <= m; ++j) {
      const auto u = ion_pulse_unitary(j, m, 20);
      CHECK((u.diagonal().cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-15);
    }
  }
  CHECK_THROWS_AS(ion_pulse_unitary(0, 2, 4), IndexError);
  CHECK_THROWS_AS(ion_pulse_unitary(3, 2, 4), IndexError);
}

TEST_CASE("conditional phase entries", "[coupling]") {
  CHECK(std::abs(conditional_phase_unitary(1, 3).entry(1, 1) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(conditional_phase_unitary(2, 3).entry(1, 1) - Complex(0.0, -1.0)) < 1e-15);
  for (int m = 1; m <= 3; ++m) {
    const auto u = conditional_phase_unitary(m, 10);
    for (int n = 0; n <= 10; ++n) {
      CHECK(u.entry(0, n) == Complex(1.0, 0.0));
    }
    for (int k = 0; k < (1 << m); ++k) {
      CHECK(u.entry(k, 0) == Complex(1.0, 0.0));
    }
    CHECK((u.diagonal().cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-15);
  }
  // m = 3 against the textbook formula, including non-quarter-turn entries.
  const auto u3 = conditional_phase_unitary(3, 12);
  for (int k = 0; k < 8; ++k) {
    for (int n = 0; n <= 12; ++n) {
      CHECK(std::abs(u3.entry(k, n) - std::polar(1.0, -2.0 * std::numbers::pi * n * k / 8.0)) <
            1e-14);
    }
  }
}

TEST_CASE("per-ion pulses compose to the conditional phase", "[coupling]") {
  for (int m = 1; m <= 3; ++m) {
    DiagonalUnitary product = ion_pulse_unitary(1, m, 64);
    for (int j = 2; j <= m; ++j) {
      product = ion_pulse_unitary(j, m, 64) * product;
    }
    CHECK(max_abs_diff(product.diagonal(), conditional_phase_unitary(m, 64).diagonal()) < 1e-12);
  }
}

TEST_CASE("conditional phase commutes with the phonon number", "[coupling]") {
  std::mt19937_64 rng(17);
  const int m = 2;
  const int cutoff = 30;
  const auto u = conditional_phase_unitary(m, cutoff);
  ComplexMatrix amps(4, cutoff + 1);
  for (int k = 0; k < 4; ++k) {
    amps.row(k) = random_vector(rng, cutoff + 1).transpose();
  }
  amps /= amps.norm();
  const JointState psi(m, amps);
  auto number = [&](const JointState& s) {
    ComplexMatrix out = s.amplitudes();
    for (int n = 0; n <= cutoff; ++n) {
      out.col(n) *= static_cast<double>(n);
    }
    return JointState(m, out);
  };
  const ComplexMatrix commutator =
      u.apply(number(psi)).amplitudes() - number(u.apply(psi)).amplitudes();
  CHECK(commutator.norm() < 1e-12);

  // Phonon-number distribution is untouched.
  const auto out = u.apply(psi);
  for (int n = 0; n <= cutoff; ++n) {
    CHECK(std::abs(out.amplitudes().col(n).squaredNorm() - amps.col(n).squaredNorm()) < 1e-15);
  }
}

TEST_CASE("diagonal unitaries check shapes", "[coupling]") {
  const auto u = conditional_phase_unitary(2, 5);
  CHECK_THROWS_AS(u.apply(JointState(2, ComplexMatrix::Zero(4, 4))), DimensionError);
  CHECK_THROWS_AS(u * conditional_phase_unitary(1, 5), DimensionError);
}
