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

#include "ioncat/grover.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "ioncat/errors.hpp"

namespace ioncat {
namespace {

constexpr std::array<std::pair<GroverMode, std::string_view>, 4> kModeNames{{
    {GroverMode::CorrelatedDiffusion, "correlated-diffusion"},
    {GroverMode::AmplitudeAmplification, "amplitude-amplification"},
    {GroverMode::ElectronicDiffusion, "electronic-diffusion"},
    {GroverMode::IdealModel, "ideal-model"},
}};

void require_target(int k0, int modulus) {
  if (k0 < 0 || k0 >= modulus) {
    throw IndexError("marked index " + std::to_string(k0) + " outside 0.." +
                     std::to_string(modulus - 1));
  }
}

// In-place c <- (2/N) sum(c) - c along each column.
void invert_about_mean(ComplexMatrix& amps) {
  const double scale = 2.0 / static_cast<double>(amps.rows());
  for (Eigen::Index n = 0; n < amps.cols(); ++n) {
    const Complex mean_term = scale * amps.col(n).sum();
    for (Eigen::Index k = 0; k < amps.rows(); ++k) {
      amps(k, n) = mean_term - amps(k, n);
    }
  }
}

}  // namespace

std::string_view to_string(GroverMode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) {
      return name;
    }
  }
  return "unknown";
}

GroverMode parse_grover_mode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) {
      return m;
    }
  }
  throw ParameterError("unknown Grover mode '" + std::string(name) + "'");
}

double grover_angle(int modulus) {
  if (modulus < 2) {
    throw ParameterError("Grover angle needs N >= 2, got " + std::to_string(modulus));
  }
  return std::asin(1.0 / std::sqrt(static_cast<double>(modulus)));
}

IterationCount optimal_iterations(double theta) {
  if (!(theta > 0.0 && theta <= std::numbers::pi / 2)) {
    throw ParameterError("Grover angle must lie in (0, pi/2]");
  }
  const double exact = (std::numbers::pi - 2.0 * theta) / (4.0 * theta);
  // Ties round up; the slack absorbs last-ulp error in exact halves (N = 2).
  const double rounded = std::floor(exact + 0.5 + 1e-12);
  return {exact, rounded < 0.0 ? 0 : static_cast<int>(rounded)};
}

GroverPlan make_plan_with_angle(int modulus, int k0, double theta, GroverMode mode) {
  if (modulus < 2) {
    throw ParameterError("Grover search needs N >= 2");
  }
  require_target(k0, modulus);
  const auto t = optimal_iterations(theta);
  return GroverPlan{k0, modulus, theta, t.exact, t.rounded, mode};
}

GroverPlan make_plan(int modulus, int k0, GroverMode mode) {
  return make_plan_with_angle(modulus, k0, grover_angle(modulus), mode);
}

ModelAmplitudes model_amplitudes(int modulus, int iteration, AmplitudeConvention convention) {
  if (iteration < 0) {
    throw ParameterError("iteration count must be >= 0");
  }
  const double theta = grover_angle(modulus);
  const double n = static_cast<double>(modulus);
  const double angle = (2.0 * iteration + 1.0) * theta;
  if (convention == AmplitudeConvention::UnitBranch) {
    return {std::sqrt(n) * std::sin(angle), std::sqrt((n - 1.0) / n) * std::cos(angle)};
  }
  return {std::sin(angle), std::cos(angle) / std::sqrt(n - 1.0)};
}

JointState oracle_apply(const JointState& s, int k0) {
  require_target(k0, s.dimension());
  ComplexMatrix amps = s.amplitudes();
  amps.row(k0) *= -1.0;
  return JointState(s.qubits(), std::move(amps), s.tail_bound());
}

Diffusion::Diffusion(GroverMode mode, int qubits, int cutoff, const JointState* context)
    : mode_(mode), qubits_(qubits), cutoff_(cutoff) {
  switch (mode_) {
    case GroverMode::IdealModel:
      throw ConfigurationError("ideal-model mode has no joint-space diffusion operator");
    case GroverMode::ElectronicDiffusion:
      return;
    case GroverMode::CorrelatedDiffusion:
    case GroverMode::AmplitudeAmplification:
      break;
  }
  if (context == nullptr) {
    throw ConfigurationError(std::string(to_string(mode_)) +
                             " diffusion needs the initial state as context");
  }
  if (context->qubits() != qubits || context->cutoff() != cutoff) {
    throw DimensionError("diffusion context shape differs from the state");
  }
  const double norm2 = context->squared_norm();
  if (norm2 == 0.0) {
    throw DegenerateStateError("diffusion context has zero norm");
  }
  if (mode_ == GroverMode::AmplitudeAmplification) {
    reference_ = context->amplitudes() / std::sqrt(norm2);
    return;
  }
  // Orthonormal branch basis: each sector of the context, normalized. An
  // empty sector gets the Fock state of its own residue as a stand-in.
  reference_ = ComplexMatrix::Zero(context->dimension(), cutoff + 1);
  for (int k = 0; k < context->dimension(); ++k) {
    const double p = context->sector_probability(k);
    if (p > 0.0) {
      reference_.row(k) = context->amplitudes().row(k) / std::sqrt(p);
    } else {
      reference_(k, k % (cutoff + 1)) = 1.0;
    }
  }
}

JointState Diffusion::apply(const JointState& s) const {
  if (s.qubits() != qubits_ || s.cutoff() != cutoff_) {
    throw DimensionError("diffusion operator and state shapes differ");
  }
  ComplexMatrix amps = s.amplitudes();
  switch (mode_) {
    case GroverMode::ElectronicDiffusion:
      invert_about_mean(amps);
      break;
    case GroverMode::AmplitudeAmplification: {
      const Complex overlap = (reference_.array().conjugate() * amps.array()).sum();
      amps = 2.0 * overlap * reference_ - amps;
      break;
    }
    case GroverMode::CorrelatedDiffusion: {
      const Eigen::Index dim = amps.rows();
      ComplexVector coeffs(dim);
      for (Eigen::Index k = 0; k < dim; ++k) {
        coeffs[k] = (reference_.row(k).array().conjugate() * amps.row(k).array()).sum();
      }
      const Complex mean_term = 2.0 / static_cast<double>(dim) * coeffs.sum();
      for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex updated = mean_term - coeffs[k];
        amps.row(k) += (updated - coeffs[k]) * reference_.row(k);
      }
      break;
    }
    case GroverMode::IdealModel:
      break;
  }
  return JointState(qubits_, std::move(amps), s.tail_bound());
}

JointState diffusion_apply(const JointState& s, const GroverPlan& plan,
                           const JointState* context) {
  return Diffusion(plan.mode, s.qubits(), s.cutoff(), context).apply(s);
}

TraceRecord measure_branches(const JointState& s, int k0, int iteration) {
  require_target(k0, s.dimension());
  const double success = s.sector_probability(k0);
  double rest = 0.0;
  for (int k = 0; k < s.dimension(); ++k) {
    if (k != k0) {
      rest += s.sector_probability(k);
    }
  }
  return {iteration, std::sqrt(success), std::sqrt(rest / (s.dimension() - 1)), success};
}

GroverRun grover_run(const JointState& s, const GroverPlan& plan, int count) {
  if (count < 0) {
    throw ParameterError("iteration count must be >= 0");
  }
  if (plan.modulus != s.dimension()) {
    throw DimensionError("plan register size differs from the state");
  }
  if (plan.mode == GroverMode::IdealModel) {
    throw ConfigurationError("ideal-model plans run through ideal_model_trace");
  }
  const Diffusion diffusion(plan.mode, s.qubits(), s.cutoff(), &s);
  GroverRun run{s, {}};
  run.trace.reserve(static_cast<std::size_t>(count) + 1);
  run.trace.push_back(measure_branches(s, plan.k0, 0));
  for (int j = 1; j <= count; ++j) {
    run.state = diffusion.apply(oracle_apply(run.state, plan.k0));
    run.trace.push_back(measure_branches(run.state, plan.k0, j));
  }
  return run;
}

AmplitudeTrace ideal_model_trace(const GroverPlan& plan, int count) {
  if (count < 0) {
    throw ParameterError("iteration count must be >= 0");
  }
  AmplitudeTrace trace;
  trace.reserve(static_cast<std::size_t>(count) + 1);
  for (int j = 0; j <= count; ++j) {
    const double angle = (2.0 * j + 1.0) * plan.theta;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    trace.push_back({j, std::abs(s), std::abs(c) / std::sqrt(plan.modulus - 1.0), s * s});
  }
  return trace;
}

}  // namespace ioncat
