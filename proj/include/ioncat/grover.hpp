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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ioncat/hilbert.hpp"

namespace ioncat {

/// Where the inversion-about-average matrix D acts.
enum class GroverMode {
  /// D in the basis of normalized entangled branches of the initial state.
  CorrelatedDiffusion,
  /// 2|psi0><psi0| - I over the whole joint space.
  AmplitudeAmplification,
  /// D (x) I_vib, acting on the register alone.
  ElectronicDiffusion,
  /// Closed-form N-dimensional model with no vibrational space.
  IdealModel,
};

std::string_view to_string(GroverMode mode);
/// Inverse of to_string. Throws ParameterError on unknown names.
GroverMode parse_grover_mode(std::string_view name);

struct IterationCount {
  double exact;
  int rounded;
};

/// theta = arcsin(1 / sqrt(N)).
double grover_angle(int modulus);

/// T = (pi - 2 theta) / (4 theta), rounded to nearest with ties up, >= 0.
IterationCount optimal_iterations(double theta);

struct GroverPlan {
  int k0;
  int modulus;
  double theta;
  double t_exact;
  int t_rounded;
  GroverMode mode;
};

/// Plan with the ideal angle arcsin(1/sqrt(N)).
GroverPlan make_plan(int modulus, int k0, GroverMode mode);
/// Plan with a caller-supplied angle, e.g. arcsin(sqrt(p_k0)) from measured weights.
GroverPlan make_plan_with_angle(int modulus, int k0, double theta, GroverMode mode);

enum class AmplitudeConvention {
  /// a = sin((2j+1) theta), b = cos((2j+1) theta) / sqrt(N-1); a^2 + (N-1) b^2 = 1.
  Normalized,
  /// a = sqrt(N) sin(...), b = sqrt((N-1)/N) cos(...), written against
  /// unit-coefficient branch kets.
  UnitBranch,
};

struct ModelAmplitudes {
  double marked;
  double unmarked;
};

ModelAmplitudes model_amplitudes(int modulus, int iteration,
                                 AmplitudeConvention convention = AmplitudeConvention::Normalized);

/// Flips the sign of electronic sector k0.
JointState oracle_apply(const JointState& s, int k0);

/// Inversion about average for one mode, precomputed from the initial state.
class Diffusion {
 public:
  /// `context` is required for CorrelatedDiffusion and AmplitudeAmplification.
  Diffusion(GroverMode mode, int qubits, int cutoff, const JointState* context = nullptr);

  GroverMode mode() const noexcept { return mode_; }
  JointState apply(const JointState& s) const;

  /// Row k holds the unit vector of branch k (CorrelatedDiffusion only).
  const ComplexMatrix& branch_basis() const noexcept { return reference_; }

 private:
  GroverMode mode_;
  int qubits_;
  int cutoff_;
  ComplexMatrix reference_;
};

JointState diffusion_apply(const JointState& s, const GroverPlan& plan,
                           const JointState* context = nullptr);

struct TraceRecord {
  int iteration;
  double marked;    ///< ||sector k0||
  double unmarked;  ///< rms of the other N-1 sector norms
  double success;   ///< ||sector k0||^2
};

using AmplitudeTrace = std::vector<TraceRecord>;

TraceRecord measure_branches(const JointState& s, int k0, int iteration);

struct GroverRun {
  JointState state;
  AmplitudeTrace trace;
};

/// Applies (diffusion . oracle) `count` times, using `s` as the diffusion
/// context. The trace holds count+1 records, starting at iteration 0.
GroverRun grover_run(const JointState& s, const GroverPlan& plan, int count);

/// Closed-form trace at plan.theta for iterations 0..count.
AmplitudeTrace ideal_model_trace(const GroverPlan& plan, int count);

}  // namespace ioncat
