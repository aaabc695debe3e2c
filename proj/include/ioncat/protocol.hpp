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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ioncat/grover.hpp"
#include "ioncat/hilbert.hpp"
#include "ioncat/states.hpp"

namespace ioncat {

/// Largest norm drift tolerated before a run aborts.
inline constexpr double kNormDriftLimit = 1e-6;

struct ProtocolConfig {
  int qubits = 1;
  Complex alpha{2.0, 0.0};
  int k0 = 0;
  GroverMode mode = GroverMode::CorrelatedDiffusion;
  std::optional<int> iterations;  ///< empty: rounded T from the measured angle
  std::optional<int> cutoff;      ///< empty: choose_cutoff(alpha, epsilon)
  double epsilon = 1e-12;
  std::uint64_t seed = 0;
  bool postselect = false;
};

/// Throws ParameterError / IndexError for an inconsistent configuration.
void validate(const ProtocolConfig& cfg);

/// Draw the register outcome from a seeded generator.
struct Seeded {
  std::uint64_t seed;
};
/// Condition on outcome k and report its probability.
struct Postselect {
  int k;
};
using Sampling = std::variant<Seeded, Postselect>;

struct MeasurementOutcome {
  int k;
  double probability;
  VibrationalState collapsed;  ///< unit norm
};

/// |0...0>_e (x) v. Requires ||v|| = 1 within 1e-9.
JointState initial_state(const VibrationalState& v, int qubits);

/// Uniform superposition, conditional phase, inverse Fourier transform on
/// the register. Requires the register to be in |0...0>.
JointState entangle(const JointState& s);

MeasurementOutcome measure_register(const JointState& s, const Sampling& sampling);

/// Outcome histogram of `draws` measurements from one seeded stream. The
/// first draw agrees with measure_register(s, Seeded{seed}).
std::vector<std::size_t> sample_register(const JointState& s, std::uint64_t seed,
                                         std::size_t draws);

double success_probability(const JointState& s, int k0);

/// Output of the entangling stage, before any search.
struct EntangledPreparation {
  int cutoff;
  double tail_bound;  ///< Poisson mass discarded by the truncation
  VibrationalState input;
  JointState entangled;
  SectorWeights weights;
};

EntangledPreparation prepare_entangled(const ProtocolConfig& cfg);

struct SimulationReport {
  ProtocolConfig config;
  int cutoff = 0;
  double tail_bound = 0.0;
  SectorWeights sector_weights{1, {}};
  double baseline_probability = 0.0;  ///< p_k0 with no search
  double theta_effective = 0.0;
  double t_exact = 0.0;
  int t_rounded = 0;
  int iterations_run = 0;
  double success_probability = 0.0;
  int outcome = 0;
  double outcome_probability = 0.0;
  double fidelity_to_target = 0.0;
  AmplitudeTrace trace;
};

SimulationReport run_protocol(const ProtocolConfig& cfg);

/// Runs each configuration concurrently; results keep the input order.
std::vector<SimulationReport> run_sweep(const std::vector<ProtocolConfig>& configs);

}  // namespace ioncat
