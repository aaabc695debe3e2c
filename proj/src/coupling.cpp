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

#include "ioncat/coupling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ioncat/errors.hpp"
#include "ioncat/register.hpp"

namespace ioncat {

double compute_chi(const PhysicalParams& p) {
  if (p.delta == 0.0) {
    throw ParameterError("detuning must be nonzero: chi = eta^2 Omega^2 / (m Delta)");
  }
  if (!(p.eta > 0.0) || !(p.omega > 0.0)) {
    throw ParameterError("eta and Omega must be positive");
  }
  if (p.qubits < 1) {
    throw ParameterError("register size must be >= 1");
  }
  return p.eta * p.eta * p.omega * p.omega / (p.qubits * p.delta);
}

PulseSchedule make_pulse_schedule(int qubits) {
  const RegisterSpec spec(qubits);
  PulseSchedule schedule{qubits, {}};
  schedule.phases.reserve(static_cast<std::size_t>(qubits));
  for (int j = 1; j <= qubits; ++j) {
    schedule.phases.push_back(std::ldexp(std::numbers::pi, j - qubits));
  }
  return schedule;
}

std::vector<double> pulse_durations(const PulseSchedule& schedule, double chi) {
  if (chi == 0.0 || !std::isfinite(chi)) {
    throw ParameterError("chi must be finite and nonzero");
  }
  std::vector<double> tau;
  tau.reserve(schedule.phases.size());
  for (double phase : schedule.phases) {
    tau.push_back(phase / chi);
  }
  return tau;
}

DiagonalUnitary::DiagonalUnitary(int qubits, ComplexMatrix diagonal)
    : qubits_(qubits), diag_(std::move(diagonal)) {
  const RegisterSpec spec(qubits);
  if (diag_.rows() != spec.dimension() || diag_.cols() < 1) {
    throw DimensionError("diagonal unitary must have 2^m rows");
  }
}

JointState DiagonalUnitary::apply(const JointState& s) const {
  if (s.qubits() != qubits_ || s.cutoff() != cutoff()) {
    throw DimensionError("diagonal unitary and joint state shapes differ");
  }
  ComplexMatrix out = s.amplitudes().cwiseProduct(diag_);
  return JointState(qubits_, std::move(out), s.tail_bound());
}

DiagonalUnitary operator*(const DiagonalUnitary& lhs, const DiagonalUnitary& rhs) {
  if (lhs.qubits_ != rhs.qubits_ || lhs.cutoff() != rhs.cutoff()) {
    throw DimensionError("cannot compose diagonal unitaries of different shapes");
  }
  return DiagonalUnitary(lhs.qubits_, lhs.diag_.cwiseProduct(rhs.diag_));
}

DiagonalUnitary ion_pulse_unitary(int ion, int qubits, int cutoff) {
  const RegisterSpec spec(qubits);
  if (ion < 1 || ion > qubits) {
    throw IndexError("ion " + std::to_string(ion) + " outside 1.." + std::to_string(qubits));
  }
  if (cutoff < 0) {
    throw ParameterError("cutoff must be >= 0");
  }
  const int dim = spec.dimension();
  // 2^j pi / 2^m = 2 pi 2^(j-1) / N
  const long long step = 1LL << (ion - 1);
  ComplexMatrix diag(dim, cutoff + 1);
  for (int k = 0; k < dim; ++k) {
    const long long s = ion_bit(k, ion);
    for (int n = 0; n <= cutoff; ++n) {
      diag(k, n) = root_of_unity(-s * step * n, dim);
    }
  }
  return DiagonalUnitary(qubits, std::move(diag));
}

DiagonalUnitary conditional_phase_unitary(int qubits, int cutoff) {
  const RegisterSpec spec(qubits);
  if (cutoff < 0) {
    throw ParameterError("cutoff must be >= 0");
  }
  const int dim = spec.dimension();
  ComplexMatrix diag(dim, cutoff + 1);
  for (int k = 0; k < dim; ++k) {
    for (int n = 0; n <= cutoff; ++n) {
      diag(k, n) = root_of_unity(-static_cast<long long>(k) * n, dim);
    }
  }
  return DiagonalUnitary(qubits, std::move(diag));
}

}  // namespace ioncat
