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

#include <cstdint>
#include <vector>

#include "ioncat/hilbert.hpp"

namespace ioncat {

/// Ion internal states (s_m, ..., s_1), most significant first.
class BitString {
 public:
  explicit BitString(std::vector<std::uint8_t> bits);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  /// s_i for ion i in 1..m (ion 1 is the least significant bit).
  int ion(int i) const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Register of m ions spanning N = 2^m basis states.
class RegisterSpec {
 public:
  explicit RegisterSpec(int qubits);

  int qubits() const noexcept { return qubits_; }
  int dimension() const noexcept { return 1 << qubits_; }

 private:
  int qubits_;
};

enum class FourierDirection { Forward, Inverse };

/// k = sum_i s_i 2^(i-1).
int encode_bits(const BitString& bits);
BitString decode_index(int k, int qubits);

/// Bit s_j(k) of ion j (1-based, ion 1 least significant).
int ion_bit(int k, int ion);

/// Spectrum of gamma = sum_k k |k><k|, i.e. (0, 1, ..., N-1).
std::vector<int> gamma_diagonal(const RegisterSpec& spec);

/// |p> = N^(-1/2) sum_k exp(-2 pi i k p / N) |k>.
ElectronicState fourier_state(int p, const RegisterSpec& spec);

/// Forward: column p is fourier_state(p). Inverse: the adjoint.
ComplexMatrix fourier_matrix(const RegisterSpec& spec, FourierDirection direction);

/// Net effect of a pi/2 pulse on every ion starting from |0...0>.
ElectronicState uniform_superposition(const RegisterSpec& spec);

/// exp(2 pi i j / N), exact on multiples of a quarter turn.
Complex root_of_unity(long long j, long long n);

}  // namespace ioncat
