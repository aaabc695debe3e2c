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

#include <complex>

#include <Eigen/Dense>

namespace ioncat {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Amplitudes of the vibrational mode over Fock levels 0..cutoff.
///
/// Components need not be normalized. `tail_bound` is an upper bound on the
/// probability mass that lived above `cutoff` in the untruncated state; it is
/// carried along instead of renormalizing.
class VibrationalState {
 public:
  explicit VibrationalState(ComplexVector amps, double tail_bound = 0.0);

  /// Fock state |level> truncated at `cutoff`.
  static VibrationalState fock(int level, int cutoff);

  int cutoff() const noexcept { return static_cast<int>(amps_.size()) - 1; }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex amplitude(int n) const;
  double tail_bound() const noexcept { return tail_bound_; }
  double squared_norm() const noexcept { return amps_.squaredNorm(); }

 private:
  ComplexVector amps_;
  double tail_bound_;
};

/// Amplitudes of an m-ion register over the N = 2^m basis states |k>.
class ElectronicState {
 public:
  ElectronicState(int qubits, ComplexVector amps);

  static ElectronicState basis(int k, int qubits);

  int qubits() const noexcept { return qubits_; }
  int dimension() const noexcept { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex amplitude(int k) const;
  double squared_norm() const noexcept { return amps_.squaredNorm(); }

 private:
  int qubits_;
  ComplexVector amps_;
};

/// Register (x) mode amplitudes, stored as an N x (cutoff+1) matrix indexed
/// (k, n). Row k is the electronic sector |k>_e.
class JointState {
 public:
  JointState(int qubits, ComplexMatrix amps, double tail_bound = 0.0);

  int qubits() const noexcept { return qubits_; }
  int dimension() const noexcept { return static_cast<int>(amps_.rows()); }
  int cutoff() const noexcept { return static_cast<int>(amps_.cols()) - 1; }
  const ComplexMatrix& amplitudes() const noexcept { return amps_; }
  Complex amplitude(int k, int n) const;
  double tail_bound() const noexcept { return tail_bound_; }
  double squared_norm() const noexcept { return amps_.squaredNorm(); }

  /// Unnormalized vibrational content of electronic sector k.
  VibrationalState sector(int k) const;
  /// Squared norm of electronic sector k.
  double sector_probability(int k) const;

 private:
  int qubits_;
  ComplexMatrix amps_;
  double tail_bound_;
};

JointState tensor_product(const ElectronicState& e, const VibrationalState& v);

// <a|b>, conjugate-linear in `a`. Throws DimensionError on shape mismatch.
Complex inner_product(const VibrationalState& a, const VibrationalState& b);
Complex inner_product(const ElectronicState& a, const ElectronicState& b);
Complex inner_product(const JointState& a, const JointState& b);

// |<a|b>|^2 / (<a|a><b|b>). Throws DegenerateStateError on a zero-norm input.
double fidelity(const VibrationalState& a, const VibrationalState& b);
double fidelity(const ElectronicState& a, const ElectronicState& b);
double fidelity(const JointState& a, const JointState& b);

/// Truncated lowering operator: entry (n-1, n) = sqrt(n).
ComplexMatrix annihilation_matrix(int cutoff);

/// a^power |v> by repeated ladder steps. The top `power` levels of the result
/// are zero; the input tail bound is carried over.
VibrationalState apply_annihilation_power(const VibrationalState& v, int power);

}  // namespace ioncat
