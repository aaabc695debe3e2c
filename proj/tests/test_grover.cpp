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

#include "ioncat/errors.hpp"
#include "ioncat/grover.hpp"
#include "ioncat/states.hpp"
#include "test_support.hpp"

using namespace ioncat;
using ioncat::testing::max_abs_diff;
using ioncat::testing::random_vector;

namespace {

constexpr GroverMode kJointModes[] = {GroverMode::CorrelatedDiffusion,
                                      GroverMode::AmplitudeAmplification,
                                      GroverMode::ElectronicDiffusion};

int qubits_for(int modulus) { return static_cast<int>(std::lround(std::log2(modulus))); }

// Entangled equal-weight state: amplitude 1/sqrt(N) at (k, n = k).
JointState equal_weight_entangled(int modulus, int cutoff) {
  ComplexMatrix amps = ComplexMatrix::Zero(modulus, cutoff + 1);
  for (int k = 0; k < modulus; ++k) {
    amps(k, k) = 1.0 / std::sqrt(static_cast<double>(modulus));
  }
  return JointState(qubits_for(modulus), amps);
}

// Correlated state with residue sectors of a coherent state: row k holds
// |alpha, N, k>.
JointState coherent_entangled(Complex alpha, int modulus) {
  const CoherentParam a(alpha);
  const int cutoff = std::max(choose_cutoff(a, 1e-15), modulus - 1);
  ComplexMatrix amps(modulus, cutoff + 1);
  for (int k = 0; k < modulus; ++k) {
    amps.row(k) = generalized_coherent(a, modulus, k, cutoff).amplitudes().transpose();
  }
  amps /= amps.norm();
  return JointState(qubits_for(modulus), amps);
}

JointState random_joint(std::mt19937_64& rng, int qubits, int cutoff) {
  ComplexMatrix amps(1 << qubits, cutoff + 1);
  for (int k = 0; k < (1 << qubits); ++k) {
    amps.row(k) = random_vector(rng, cutoff + 1).transpose();
  }
  return JointState(qubits, amps / amps.norm());
}

// Explicit N x N Grover iteration on the uniform vector; marked amplitude
// after j rounds.
double matrix_iteration_oracle(int modulus, int k0, int j) {
  const double n = modulus;
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(modulus, modulus, 2.0 / n);
  d.diagonal().array() -= 1.0;
  Eigen::MatrixXd o = Eigen::MatrixXd::Identity(modulus, modulus);
  o(k0, k0) = -1.0;
  Eigen::VectorXd x = Eigen::VectorXd::Constant(modulus, 1.0 / std::sqrt(n));
  for (int i = 0; i < j; ++i) {
    x = d * (o * x);
  }
  return x[k0];
}

}  // namespace

TEST_CASE("Grover angle", "[grover]") {
  CHECK(grover_angle(4) == Catch::Approx(std::numbers::pi / 6).epsilon(1e-15));
  CHECK(grover_angle(4) == Catch::Approx(0.5235988).margin(5e-8));
  CHECK(grover_angle(2) == Catch::Approx(std::numbers::pi / 4).epsilon(1e-15));
  CHECK(grover_angle(16) == Catch::Approx(0.25268025514207865).epsilon(1e-15));
  for (int n : {2, 3, 4, 8, 64}) {
    CHECK(std::abs(std::sin(grover_angle(n)) - 1.0 / std::sqrt(n)) <= 1e-15);
  }
  CHECK_THROWS_AS(grover_angle(1), ParameterError);
}

TEST_CASE("optimal iteration count", "[grover]") {
  const auto n4 = optimal_iterations(grover_angle(4));
  CHECK(std::abs(n4.exact - 1.0) < 1e-15);
  CHECK(n4.rounded == 1);

  const auto n2 = optimal_iterations(grover_angle(2));
  CHECK(std::abs(n2.exact - 0.5) < 1e-15);
  CHECK(n2.rounded == 1);

  const auto n16 = optimal_iterations(grover_angle(16));
  CHECK(n16.exact == Catch::Approx(2.6082688394304085).epsilon(1e-14));
  CHECK(n16.rounded == 3);

  CHECK(optimal_iterations(std::numbers::pi / 2).rounded == 0);
  CHECK_THROWS_AS(optimal_iterations(0.0), ParameterError);
}

TEST_CASE("plans", "[grover]") {
  const auto plan = make_plan(16, 5, GroverMode::CorrelatedDiffusion);
  CHECK(plan.t_rounded == 3);
  CHECK(plan.k0 == 5);
  CHECK(std::abs(std::sin(plan.theta) - 0.25) <= 1e-15);
  CHECK_THROWS_AS(make_plan(4, 4, GroverMode::CorrelatedDiffusion), IndexError);
}

TEST_CASE("closed-form amplitudes", "[grover]") {
  const auto one = model_amplitudes(4, 1);
  CHECK(std::abs(one.marked - 1.0) < 1e-15);
  CHECK(std::abs(one.unmarked) < 1e-15);
  CHECK(std::abs(matrix_iteration_oracle(4, 2, 1) - 1.0) < 1e-15);

  const auto zero = model_amplitudes(4, 0);
  CHECK(zero.marked == Catch::Approx(0.5).epsilon(1e-15));
  CHECK(zero.unmarked == Catch::Approx(0.5).epsilon(1e-15));

  const auto n16 = model_amplitudes(16, 3);
  CHECK(n16.marked == Catch::Approx(0.98046875).epsilon(1e-14));
  CHECK(std::abs(matrix_iteration_oracle(16, 0, 3) - n16.marked) < 1e-13);

  for (int n : {2, 4, 8, 16, 64}) {
    for (int j = 0; j < 12; ++j) {
      const auto a = model_amplitudes(n, j);
      CHECK(std::abs(a.marked * a.marked + (n - 1) * a.unmarked * a.unmarked - 1.0) < 1e-14);
      CHECK(std::abs(matrix_iteration_oracle(n, n - 1, j) - a.marked) < 1e-12);
      const auto unit = model_amplitudes(n, j, AmplitudeConvention::UnitBranch);
      CHECK(std::abs(unit.marked - std::sqrt(n) * a.marked) < 1e-13);
    }
  }
  CHECK(model_amplitudes(4, 0, AmplitudeConvention::UnitBranch).marked ==
        Catch::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("oracle flips the marked sector", "[grover]") {
  std::mt19937_64 rng(2);
  const auto s = random_joint(rng, 2, 7);
  const auto flipped = oracle_apply(s, 2);
  for (int k = 0; k < 4; ++k) {
    const double sign = k == 2 ? -1.0 : 1.0;
    CHECK(max_abs_diff(ComplexVector(flipped.amplitudes().row(k).transpose()),
                       ComplexVector(sign * s.amplitudes().row(k).transpose())) == 0.0);
  }
  CHECK(max_abs_diff(oracle_apply(flipped, 2).amplitudes(), s.amplitudes()) == 0.0);
  CHECK(std::abs(flipped.squared_norm() - s.squared_norm()) < 1e-15);
  CHECK_THROWS_AS(oracle_apply(s, 4), IndexError);
}

TEST_CASE("electronic diffusion is the inversion-about-average matrix", "[grover]") {
  for (int n : {2, 4, 8, 16}) {
    const int m = qubits_for(n);
    const Diffusion diffusion(GroverMode::ElectronicDiffusion, m, 0);
    ComplexMatrix d(n, n);
    for (int k = 0; k < n; ++k) {
      ComplexMatrix basis = ComplexMatrix::Zero(n, 1);
      basis(k, 0) = 1.0;
      d.col(k) = diffusion.apply(JointState(m, basis)).amplitudes().col(0);
    }
    // Oracle: D = 2|u><u| - I with u uniform.
    const ComplexVector u = ComplexVector::Constant(n, 1.0 / std::sqrt(n));
    const ComplexMatrix expected = 2.0 * u * u.adjoint() - ComplexMatrix::Identity(n, n);
    CHECK(max_abs_diff(d, expected) < 1e-15);
    CHECK(std::abs(d(0, 0) - (2.0 / n - 1.0)) < 1e-15);
    CHECK(std::abs(d(n - 1, 0) - 2.0 / n) < 1e-15);
    CHECK(max_abs_diff(d * d.adjoint(), ComplexMatrix::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("correlated diffusion fixes the uniform correlated state", "[grover]") {
  for (int n : {2, 4, 8}) {
    const auto s = equal_weight_entangled(n, 20);
    const auto plan = make_plan(n, 0, GroverMode::CorrelatedDiffusion);
    CHECK(max_abs_diff(diffusion_apply(s, plan, &s).amplitudes(), s.amplitudes()) < 1e-12);
  }
}

TEST_CASE("diffusion modes need their context", "[grover]") {
  const auto s = equal_weight_entangled(4, 8);
  CHECK_THROWS_AS(diffusion_apply(s, make_plan(4, 0, GroverMode::CorrelatedDiffusion)),
                  ConfigurationError);
  CHECK_THROWS_AS(diffusion_apply(s, make_plan(4, 0, GroverMode::AmplitudeAmplification)),
                  ConfigurationError);
  CHECK_THROWS_AS(diffusion_apply(s, make_plan(4, 0, GroverMode::IdealModel), &s),
                  ConfigurationError);
  CHECK_NOTHROW(diffusion_apply(s, make_plan(4, 0, GroverMode::ElectronicDiffusion)));
  CHECK_THROWS_AS(grover_run(s, make_plan(4, 0, GroverMode::IdealModel), 1),
                  ConfigurationError);
}

TEST_CASE("every diffusion mode is unitary", "[grover]") {
  std::mt19937_64 rng(31);
  for (GroverMode mode : kJointModes) {
    for (int m = 1; m <= 3; ++m) {
      const auto context = random_joint(rng, m, 12);
      const auto plan = make_plan(1 << m, 0, mode);
      for (int trial = 0; trial < 5; ++trial) {
        const auto s = random_joint(rng, m, 12);
        const auto out = diffusion_apply(s, plan, &context);
        CHECK(std::abs(out.squared_norm() - 1.0) < 1e-12);
        // Unitarity: inner products are preserved too.
        const auto t = random_joint(rng, m, 12);
        CHECK(std::abs(inner_product(out, diffusion_apply(t, plan, &context)) -
                       inner_product(s, t)) < 1e-12);
      }
    }
  }
}

TEST_CASE("empty sectors get a stand-in branch", "[grover]") {
  // Only sectors 0 and 1 populated.
  ComplexMatrix amps = ComplexMatrix::Zero(4, 10);
  amps(0, 4) = 0.6;
  amps(1, 5) = 0.8;
  const JointState context(2, amps);
  const Diffusion diffusion(GroverMode::CorrelatedDiffusion, 2, 9, &context);
  const ComplexMatrix& basis = diffusion.branch_basis();
  CHECK(basis(2, 2) == Complex(1.0, 0.0));
  CHECK(basis(3, 3) == Complex(1.0, 0.0));
  std::mt19937_64 rng(4);
  const auto s = random_joint(rng, 2, 9);
  CHECK(std::abs(diffusion.apply(s).squared_norm() - 1.0) < 1e-12);
}

TEST_CASE("run with zero iterations", "[grover]") {
  const auto s = equal_weight_entangled(4, 6);
  const auto run = grover_run(s, make_plan(4, 1, GroverMode::CorrelatedDiffusion), 0);
  CHECK(max_abs_diff(run.state.amplitudes(), s.amplitudes()) == 0.0);
  REQUIRE(run.trace.size() == 1);
  CHECK(run.trace[0].iteration == 0);
  CHECK(run.trace[0].success == Catch::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("one iteration is exact at N = 4", "[grover]") {
  for (GroverMode mode : {GroverMode::CorrelatedDiffusion, GroverMode::AmplitudeAmplification}) {
    for (int k0 = 0; k0 < 4; ++k0) {
      const auto run = grover_run(equal_weight_entangled(4, 6), make_plan(4, k0, mode), 1);
      CHECK(std::abs(run.trace.back().success - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("equal-weight runs follow the closed form", "[grover]") {
  for (int n : {4, 8, 16}) {
    const auto s = equal_weight_entangled(n, n + 3);
    const int count = 2 * make_plan(n, 0, GroverMode::CorrelatedDiffusion).t_rounded;
    const auto corr = grover_run(s, make_plan(n, n / 2, GroverMode::CorrelatedDiffusion), count);
    const auto amp = grover_run(s, make_plan(n, n / 2, GroverMode::AmplitudeAmplification), count);
    for (int j = 0; j <= count; ++j) {
      const auto model = model_amplitudes(n, j);
      CHECK(std::abs(corr.trace[j].marked - std::abs(model.marked)) < 1e-10);
      CHECK(std::abs(corr.trace[j].unmarked - std::abs(model.unmarked)) < 1e-10);
      CHECK(std::abs(corr.trace[j].success - std::pow(std::sin((2 * j + 1) * grover_angle(n)), 2)) <
            1e-10);
      CHECK(std::abs(amp.trace[j].success - corr.trace[j].success) < 1e-10);
    }
    CHECK(max_abs_diff(corr.state.amplitudes(), amp.state.amplitudes()) < 1e-10);
  }
}

TEST_CASE("electronic diffusion cannot amplify equal-weight inputs", "[grover]") {
  for (int n : {2, 4, 8, 16}) {
    const auto run = grover_run(equal_weight_entangled(n, n),
                                make_plan(n, 1, GroverMode::ElectronicDiffusion), 10);
    for (const auto& rec : run.trace) {
      CHECK(std::abs(rec.success - 1.0 / n) < 1e-12);
    }
  }
}

TEST_CASE("two equal-weight branches never exceed one half", "[grover]") {
  // theta = pi/4, so every odd multiple lands on sin^2 = 1/2.
  const auto s = equal_weight_entangled(2, 5);
  for (GroverMode mode : {GroverMode::CorrelatedDiffusion, GroverMode::AmplitudeAmplification,
                          GroverMode::ElectronicDiffusion}) {
    for (int k0 = 0; k0 < 2; ++k0) {
      for (const auto& rec : grover_run(s, make_plan(2, k0, mode), 10).trace) {
        CHECK(rec.success <= 0.5 + 1e-12);
      }
    }
  }
  for (const auto& rec : ideal_model_trace(make_plan(2, 0, GroverMode::IdealModel), 10)) {
    CHECK(rec.success <= 0.5 + 1e-12);
  }
}

TEST_CASE("amplitude amplification on coherent input", "[grover]") {
  for (double a : {1.0, 1.5, 2.0}) {
    for (int n : {2, 4, 8}) {
      const auto s = coherent_entangled(Complex(a, 0.0), n);
      for (int k0 = 0; k0 < n; ++k0) {
        const double p = s.sector_probability(k0);
        const double theta = std::asin(std::sqrt(p));
        const auto run = grover_run(s, make_plan(n, k0, GroverMode::AmplitudeAmplification), 8);
        for (const auto& rec : run.trace) {
          CHECK(std::abs(rec.success - std::pow(std::sin((2 * rec.iteration + 1) * theta), 2)) <
                1e-10);
        }
      }
    }
  }
}

TEST_CASE("Grover rotation is periodic", "[grover]") {
  // pi / (2 theta) iterations flip the state; twice that restores it.
  for (const auto& [n, period] : {std::pair{4, 3}, std::pair{2, 2}}) {
    const auto s = equal_weight_entangled(n, 6);
    for (GroverMode mode : {GroverMode::CorrelatedDiffusion, GroverMode::AmplitudeAmplification}) {
      const auto run = grover_run(s, make_plan(n, 0, mode), 2 * period);
      CHECK(std::abs(fidelity(run.state, s) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("ideal-model trace", "[grover]") {
  const auto trace = ideal_model_trace(make_plan(4, 0, GroverMode::IdealModel), 3);
  REQUIRE(trace.size() == 4);
  CHECK(trace[0].success == Catch::Approx(0.25).epsilon(1e-14));
  CHECK(trace[1].success == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(trace[1].marked == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mode names", "[grover]") {
  for (GroverMode mode : {GroverMode::CorrelatedDiffusion, GroverMode::AmplitudeAmplification,
                          GroverMode::ElectronicDiffusion, GroverMode::IdealModel}) {
    CHECK(parse_grover_mode(to_string(mode)) == mode);
  }
  CHECK(to_string(GroverMode::CorrelatedDiffusion) == "correlated-diffusion");
  CHECK_THROWS_AS(parse_grover_mode("grover"), ParameterError);
}
