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

#include "ioncat/register.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ioncat/errors.hpp"

namespace ioncat {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty() || bits_.size() > 30) {
    throw ParameterError("bit string length must be in 1..30");
  }
  for (auto b : bits_) {
    if (b > 1) {
      throw ParameterError("bit values must be 0 or 1");
    }
  }
}

int BitString::ion(int i) const {
  if (i < 1 || i > size()) {
    throw IndexError("ion " + std::to_string(i) + " outside 1.." + std::to_string(size()));
  }
  return bits_[static_cast<std::size_t>(size() - i)];
}

RegisterSpec::RegisterSpec(int qubits) : qubits_(qubits) {
  if (qubits < 1 || qubits > 30) {
    throw ParameterError("register size m must be in 1..30, got " + std::to_string(qubits));
  }
}

int encode_bits(const BitString& bits) {
  int k = 0;
  for (auto b : bits.bits()) {
    k = 2 * k + b;
  }
  return k;
}

BitString decode_index(int k, int qubits) {
  const RegisterSpec spec(qubits);
  if (k < 0 || k >= spec.dimension()) {
    throw IndexError("index " + std::to_string(k) + " outside 0.." +
                     std::to_string(spec.dimension() - 1));
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(qubits));
  for (int i = 1; i <= qubits; ++i) {
    bits[static_cast<std::size_t>(qubits - i)] = static_cast<std::uint8_t>(ion_bit(k, i));
  }
  return BitString(std::move(bits));
}

int ion_bit(int k, int ion) { return (k >> (ion - 1)) & 1; }

std::vector<int> gamma_diagonal(const RegisterSpec& spec) {
  std::vector<int> diag(static_cast<std::size_t>(spec.dimension()));
  for (int k = 0; k < spec.dimension(); ++k) {
    diag[static_cast<std::size_t>(k)] = k;
  }
  return diag;
}

Complex root_of_unity(long long j, long long n) {
  j %= n;
  if (j < 0) {
    j += n;
  }
  if ((4 * j) % n == 0) {
    switch ((4 * j) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(n));
}

ElectronicState fourier_state(int p, const RegisterSpec& spec) {
  const int dim = spec.dimension();
  if (p < 0 || p >= dim) {
    throw IndexError("Fourier index " + std::to_string(p) + " outside 0.." +
                     std::to_string(dim - 1));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexVector amps(dim);
  for (int k = 0; k < dim; ++k) {
    amps[k] = scale * root_of_unity(-static_cast<long long>(k) * p, dim);
  }
  return ElectronicState(spec.qubits(), std::move(amps));
}

ComplexMatrix fourier_matrix(const RegisterSpec& spec, FourierDirection direction) {
  const int dim = spec.dimension();
  ComplexMatrix f(dim, dim);
  for (int p = 0; p < dim; ++p) {
    f.col(p) = fourier_state(p, spec).amplitudes();
  }
  if (direction == FourierDirection::Inverse) {
    return f.adjoint();
  }
  return f;
}

ElectronicState uniform_superposition(const RegisterSpec& spec) {
  const int dim = spec.dimension();
  return ElectronicState(
      spec.qubits(),
      ComplexVector::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

}  // namespace ioncat
