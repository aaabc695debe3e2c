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

#include "ioncat/hilbert.hpp"

#include <cmath>
#include <string>

#include "ioncat/errors.hpp"

namespace ioncat {
namespace {

template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& amps, const char* what) {
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const Complex z = amps.derived().data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ParameterError(std::string(what) + ": non-finite amplitude");
    }
  }
}

double checked_tail(double tail_bound) {
  if (!std::isfinite(tail_bound) || tail_bound < 0.0) {
    throw ParameterError("tail bound must be finite and non-negative");
  }
  return tail_bound;
}

Complex dot(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array().conjugate() * b.array()).sum();
}

template <typename State>
double fidelity_impl(const State& a, const State& b) {
  const double na = a.squared_norm();
  const double nb = b.squared_norm();
  if (na == 0.0 || nb == 0.0) {
    throw DegenerateStateError("fidelity of a zero-norm state is undefined");
  }
  return std::norm(inner_product(a, b)) / (na * nb);
}

}  // namespace

VibrationalState::VibrationalState(ComplexVector amps, double tail_bound)
    : amps_(std::move(amps)), tail_bound_(checked_tail(tail_bound)) {
  if (amps_.size() == 0) {
    throw DimensionError("vibrational state needs at least one Fock level");
  }
  require_finite(amps_, "VibrationalState");
}

VibrationalState VibrationalState::fock(int level, int cutoff) {
  if (cutoff < 0 || level < 0 || level > cutoff) {
    throw IndexError("Fock level " + std::to_string(level) + " outside 0.." +
                     std::to_string(cutoff));
  }
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  amps[level] = 1.0;
  return VibrationalState(std::move(amps));
}

Complex VibrationalState::amplitude(int n) const {
  if (n < 0 || n > cutoff()) {
    throw IndexError("Fock level " + std::to_string(n) + " outside 0.." +
                     std::to_string(cutoff()));
  }
  return amps_[n];
}

ElectronicState::ElectronicState(int qubits, ComplexVector amps)
    : qubits_(qubits), amps_(std::move(amps)) {
  if (qubits_ < 1 || qubits_ > 30) {
    throw ParameterError("register size must be in 1..30, got " +
                         std::to_string(qubits_));
  }
  if (amps_.size() != (Eigen::Index{1} << qubits_)) {
    throw DimensionError("electronic state of " + std::to_string(qubits_) +
                         " ions needs 2^m amplitudes, got " +
                         std::to_string(amps_.size()));
  }
  require_finite(amps_, "ElectronicState");
}

ElectronicState ElectronicState::basis(int k, int qubits) {
  if (qubits < 1 || qubits > 30) {
    throw ParameterError("register size must be in 1..30");
  }
  const int dim = 1 << qubits;
  if (k < 0 || k >= dim) {
    throw IndexError("register index " + std::to_string(k) + " outside 0.." +
                     std::to_string(dim - 1));
  }
  ComplexVector amps = ComplexVector::Zero(dim);
  amps[k] = 1.0;
  return ElectronicState(qubits, std::move(amps));
}

Complex ElectronicState::amplitude(int k) const {
  if (k < 0 || k >= dimension()) {
    throw IndexError("register index " + std::to_string(k) + " out of range");
  }
  return amps_[k];
}

JointState::JointState(int qubits, ComplexMatrix amps, double tail_bound)
    : qubits_(qubits), amps_(std::move(amps)), tail_bound_(checked_tail(tail_bound)) {
  if (qubits_ < 1 || qubits_ > 30) {
    throw ParameterError("register size must be in 1..30");
  }
  if (amps_.rows() != (Eigen::Index{1} << qubits_) || amps_.cols() < 1) {
    throw DimensionError("joint state must have 2^m rows and at least one column");
  }
  require_finite(amps_, "JointState");
}

Complex JointState::amplitude(int k, int n) const {
  if (k < 0 || k >= dimension() || n < 0 || n > cutoff()) {
    throw IndexError("joint index (" + std::to_string(k) + ", " + std::to_string(n) +
                     ") out of range");
  }
  return amps_(k, n);
}

VibrationalState JointState::sector(int k) const {
  if (k < 0 || k >= dimension()) {
    throw IndexError("register index " + std::to_string(k) + " out of range");
  }
  return VibrationalState(amps_.row(k).transpose(), tail_bound_);
}

double JointState::sector_probability(int k) const {
  if (k < 0 || k >= dimension()) {
    throw IndexError("register index " + std::to_string(k) + " out of range");
  }
  return amps_.row(k).squaredNorm();
}

JointState tensor_product(const ElectronicState& e, const VibrationalState& v) {
  ComplexMatrix amps = e.amplitudes() * v.amplitudes().transpose();
  return JointState(e.qubits(), std::move(amps), e.squared_norm() * v.tail_bound());
}

Complex inner_product(const VibrationalState& a, const VibrationalState& b) {
  if (a.cutoff() != b.cutoff()) {
    throw DimensionError("inner product of vibrational states with cutoffs " +
                         std::to_string(a.cutoff()) + " and " + std::to_string(b.cutoff()));
  }
  return a.amplitudes().dot(b.amplitudes());
}

Complex inner_product(const ElectronicState& a, const ElectronicState& b) {
  if (a.qubits() != b.qubits()) {
    throw DimensionError("inner product of registers with " + std::to_string(a.qubits()) +
                         " and " + std::to_string(b.qubits()) + " ions");
  }
  return a.amplitudes().dot(b.amplitudes());
}

Complex inner_product(const JointState& a, const JointState& b) {
  if (a.qubits() != b.qubits() || a.cutoff() != b.cutoff()) {
    throw DimensionError("inner product of joint states with different shapes");
  }
  return dot(a.amplitudes(), b.amplitudes());
}

double fidelity(const VibrationalState& a, const VibrationalState& b) {
  return fidelity_impl(a, b);
}
double fidelity(const ElectronicState& a, const ElectronicState& b) {
  return fidelity_impl(a, b);
}
double fidelity(const JointState& a, const JointState& b) { return fidelity_impl(a, b); }

ComplexMatrix annihilation_matrix(int cutoff) {
  if (cutoff < 1) {
    throw ParameterError("annihilation matrix needs cutoff >= 1");
  }
  ComplexMatrix a = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

VibrationalState apply_annihilation_power(const VibrationalState& v, int power) {
  if (power < 1) {
    throw ParameterError("annihilation power must be >= 1");
  }
  ComplexVector cur = v.amplitudes();
  const Eigen::Index size = cur.size();
  for (int step = 0; step < power; ++step) {
    for (Eigen::Index n = 0; n + 1 < size; ++n) {
      cur[n] = std::sqrt(static_cast<double>(n + 1)) * cur[n + 1];
    }
    cur[size - 1] = 0.0;
  }
  return VibrationalState(std::move(cur), v.tail_bound());
}

}  // namespace ioncat
