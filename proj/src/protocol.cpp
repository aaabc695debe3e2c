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

#include "ioncat/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "ioncat/coupling.hpp"
#include "ioncat/errors.hpp"
#include "ioncat/register.hpp"

namespace ioncat {
namespace {

constexpr double kNormTolerance = 1e-9;

void require_normalized(double norm2, const char* what) {
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw ParameterError(std::string(what) + " must be normalized, squared norm is " +
                         std::to_string(norm2));
  }
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int pick_outcome(const std::vector<double>& probs, double u) {
  double cumulative = 0.0;
  int last_nonzero = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > 0.0) {
      last_nonzero = static_cast<int>(k);
    }
    cumulative += probs[k];
    if (u < cumulative) {
      return static_cast<int>(k);
    }
  }
  return last_nonzero;
}

std::vector<double> register_distribution(const JointState& s) {
  require_normalized(s.squared_norm(), "measured state");
  std::vector<double> probs(static_cast<std::size_t>(s.dimension()));
  for (int k = 0; k < s.dimension(); ++k) {
    probs[static_cast<std::size_t>(k)] = s.sector_probability(k);
  }
  return probs;
}

void check_drift(double norm2, const char* stage) {
  if (std::abs(norm2 - 1.0) > kNormDriftLimit) {
    throw NumericalIntegrityError(
        std::string("norm drift ") + std::to_string(std::abs(norm2 - 1.0)) + " after " +
        stage + " exceeds 1e-6; the Fock cutoff is too small for this alpha "
        "(raise --cutoff or let choose_cutoff pick it)");
  }
}

// Amplitude amplification in closed form: the marked sector is rescaled to
// sin((2t+1) theta), the rest jointly to cos((2t+1) theta).
JointState amplify_closed_form(const JointState& s, int k0, double theta, int count) {
  const double p = s.sector_probability(k0);
  const double angle = (2.0 * count + 1.0) * theta;
  ComplexMatrix amps = s.amplitudes();
  for (int k = 0; k < s.dimension(); ++k) {
    if (k == k0) {
      amps.row(k) *= std::sin(angle) / std::sqrt(p);
    } else if (p < 1.0) {
      amps.row(k) *= std::cos(angle) / std::sqrt(1.0 - p);
    }
  }
  return JointState(s.qubits(), std::move(amps), s.tail_bound());
}

}  // namespace

void validate(const ProtocolConfig& cfg) {
  const RegisterSpec spec(cfg.qubits);
  if (cfg.k0 < 0 || cfg.k0 >= spec.dimension()) {
    throw IndexError("target " + std::to_string(cfg.k0) + " outside 0.." +
                     std::to_string(spec.dimension() - 1) + " for " +
                     std::to_string(cfg.qubits) + " ions");
  }
  (void)CoherentParam(cfg.alpha);
  if (cfg.iterations && *cfg.iterations < 0) {
    throw ParameterError("iteration count must be >= 0");
  }
  if (cfg.cutoff && *cfg.cutoff < spec.dimension() - 1) {
    throw ParameterError("cutoff must be at least N-1 = " +
                         std::to_string(spec.dimension() - 1));
  }
  if (!cfg.cutoff && !(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1)");
  }
}

JointState initial_state(const VibrationalState& v, int qubits) {
  require_normalized(v.squared_norm(), "initial vibrational state");
  return tensor_product(ElectronicState::basis(0, qubits), v);
}

JointState entangle(const JointState& s) {
  for (int k = 1; k < s.dimension(); ++k) {
    if (s.sector_probability(k) > 1e-24) {
      throw ProtocolOrderError("entangle expects the register in |0...0>; sector " +
                               std::to_string(k) + " is populated");
    }
  }
  const RegisterSpec spec(s.qubits());
  // pi/2 pulses: |0...0> -> uniform superposition.
  const JointState spread = tensor_product(uniform_superposition(spec), s.sector(0));
  // Dispersive coupling: exp(-2 pi i n gamma / N).
  const JointState coupled = conditional_phase_unitary(s.qubits(), s.cutoff()).apply(spread);
  // Inverse Fourier transform on the register.
  ComplexMatrix out =
      fourier_matrix(spec, FourierDirection::Inverse) * coupled.amplitudes();
  return JointState(s.qubits(), std::move(out), s.tail_bound());
}

MeasurementOutcome measure_register(const JointState& s, const Sampling& sampling) {
  const auto probs = register_distribution(s);
  int k = 0;
  if (const auto* forced = std::get_if<Postselect>(&sampling)) {
    k = forced->k;
    if (k < 0 || k >= s.dimension()) {
      throw IndexError("post-selected outcome " + std::to_string(k) + " out of range");
    }
    if (probs[static_cast<std::size_t>(k)] == 0.0) {
      throw DegenerateMeasurementError("post-selected outcome " + std::to_string(k) +
                                       " has zero probability");
    }
  } else {
    std::mt19937_64 rng(std::get<Seeded>(sampling).seed);
    k = pick_outcome(probs, unit_draw(rng));
  }
  return {k, probs[static_cast<std::size_t>(k)], normalized(s.sector(k))};
}

std::vector<std::size_t> sample_register(const JointState& s, std::uint64_t seed,
                                         std::size_t draws) {
  const auto probs = register_distribution(s);
  std::vector<std::size_t> counts(probs.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < draws; ++i) {
    ++counts[static_cast<std::size_t>(pick_outcome(probs, unit_draw(rng)))];
  }
  return counts;
}

double success_probability(const JointState& s, int k0) { return s.sector_probability(k0); }

EntangledPreparation prepare_entangled(const ProtocolConfig& cfg) {
  validate(cfg);
  const CoherentParam alpha(cfg.alpha);
  const int modulus = RegisterSpec(cfg.qubits).dimension();
  const int cutoff =
      cfg.cutoff ? *cfg.cutoff : std::max(choose_cutoff(alpha, cfg.epsilon), modulus - 1);
  const auto raw = coherent_state(alpha, cutoff);
  check_drift(raw.squared_norm(), "Fock truncation");
  // Discarded mass stays on record as tail_bound.
  const auto input =
      VibrationalState(raw.amplitudes() / std::sqrt(raw.squared_norm()), raw.tail_bound());
  auto entangled = entangle(initial_state(input, cfg.qubits));
  check_drift(entangled.squared_norm(), "entangling");
  return {cutoff, raw.tail_bound(), input, std::move(entangled),
          sector_weights(input, modulus)};
}

SimulationReport run_protocol(const ProtocolConfig& cfg) {
  auto prep = prepare_entangled(cfg);
  const int modulus = prep.entangled.dimension();
  const double p = prep.weights.weights[static_cast<std::size_t>(cfg.k0)];
  if (p == 0.0) {
    throw DegenerateMeasurementError("target sector " + std::to_string(cfg.k0) +
                                     " carries no weight for this alpha");
  }

  SimulationReport report;
  report.config = cfg;
  report.cutoff = prep.cutoff;
  report.tail_bound = prep.tail_bound;
  report.sector_weights = prep.weights;
  report.baseline_probability = p;
  report.theta_effective = std::asin(std::sqrt(std::min(p, 1.0)));

  const auto plan = make_plan_with_angle(modulus, cfg.k0, report.theta_effective, cfg.mode);
  report.t_exact = plan.t_exact;
  report.t_rounded = plan.t_rounded;
  report.iterations_run = cfg.iterations.value_or(plan.t_rounded);

  JointState final_state = prep.entangled;
  if (cfg.mode == GroverMode::IdealModel) {
    report.trace = ideal_model_trace(plan, report.iterations_run);
    final_state =
        amplify_closed_form(prep.entangled, cfg.k0, plan.theta, report.iterations_run);
  } else {
    auto run = grover_run(prep.entangled, plan, report.iterations_run);
    report.trace = std::move(run.trace);
    final_state = std::move(run.state);
  }
  for (const auto& rec : report.trace) {
    check_drift(rec.marked * rec.marked + (modulus - 1) * rec.unmarked * rec.unmarked,
                "a Grover iteration");
  }

  report.success_probability = success_probability(final_state, cfg.k0);
  const Sampling sampling =
      cfg.postselect ? Sampling{Postselect{cfg.k0}} : Sampling{Seeded{cfg.seed}};
  const auto outcome = measure_register(final_state, sampling);
  report.outcome = outcome.k;
  report.outcome_probability = outcome.probability;
  report.fidelity_to_target = fidelity(
      outcome.collapsed,
      generalized_coherent(CoherentParam(cfg.alpha), modulus, cfg.k0, prep.cutoff));
  return report;
}

std::vector<SimulationReport> run_sweep(const std::vector<ProtocolConfig>& configs) {
  const std::size_t count = configs.size();
  std::vector<std::optional<SimulationReport>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = run_protocol(configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  std::vector<SimulationReport> reports;
  reports.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) {
      std::rethrow_exception(errors[i]);
    }
    reports.push_back(std::move(*slots[i]));
  }
  return reports;
}

}  // namespace ioncat
