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

#include <vector>

#include "ioncat/hilbert.hpp"

namespace ioncat {

/// Laser and trap parameters entering the dispersive coupling constant.
struct PhysicalParams {
  double eta;    ///< Lamb-Dicke parameter
  double omega;  ///< Rabi frequency [rad/s]
  double delta;  ///< detuning [rad/s]
  int qubits;    ///< m in chi = eta^2 Omega^2 / (m Delta)
};

/// chi = eta^2 Omega^2 / (m Delta).
double compute_chi(const PhysicalParams& p);

/// Accumulated pulse phases chi * tau_j = 2^j pi / 2^m for j = 1..m.
struct PulseSchedule {
  int qubits;
  std::vector<double> phases;
};

PulseSchedule make_pulse_schedule(int qubits);

/// tau_j = phase_j / chi.
std::vector<double> pulse_durations(const PulseSchedule& schedule, double chi);

/// Unitary that is diagonal in the joint basis |k>_e |n>_vib, stored as an
/// N x (cutoff+1) matrix of phases.
class DiagonalUnitary {
 public:
  DiagonalUnitary(int qubits, ComplexMatrix diagonal);

  int qubits() const noexcept { return qubits_; }
  int cutoff() const noexcept { return static_cast<int>(diag_.cols()) - 1; }
  const ComplexMatrix& diagonal() const noexcept { return diag_; }
  Complex entry(int k, int n) const { return diag_(k, n); }

  JointState apply(const JointState& s) const;

  /// Composition; both factors are diagonal so the order does not matter.
  friend DiagonalUnitary operator*(const DiagonalUnitary& lhs, const DiagonalUnitary& rhs);

 private:
  int qubits_;
  ComplexMatrix diag_;
};

/// Evolution of ion j's dispersive term over its pulse:
/// exp(-i n s_j(k) 2^j pi / 2^m) on |k>|n>.
DiagonalUnitary ion_pulse_unitary(int ion, int qubits, int cutoff);

/// exp(-2 pi i n k / 2^m) on |k>|n>.
DiagonalUnitary conditional_phase_unitary(int qubits, int cutoff);

}  // namespace ioncat
