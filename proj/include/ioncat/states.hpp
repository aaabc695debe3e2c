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

/// Coherent-state displacement alpha.
struct CoherentParam {
  explicit CoherentParam(Complex a);
  Complex alpha;
};

/// Residue-class probabilities p_k = sum_n |c_(k+nN)|^2, k = 0..N-1.
struct SectorWeights {
  int modulus;
  std::vector<double> weights;

  double total() const;
};

/// sum_{n > cutoff} e^(-lambda) lambda^n / n!, summed directly.
double poisson_tail(double mean, int cutoff);

/// Smallest cutoff >= 16 whose Poisson tail for |alpha|^2 is below epsilon.
int choose_cutoff(const CoherentParam& alpha, double epsilon);

/// Truncated coherent state; the discarded Poisson mass goes to tail_bound.
VibrationalState coherent_state(const CoherentParam& alpha, int cutoff);

/// Unnormalized |alpha, N, k>: the coherent amplitudes on Fock levels
/// congruent to k mod N, zero elsewhere.
VibrationalState generalized_coherent(const CoherentParam& alpha, int modulus, int k,
                                      int cutoff);

SectorWeights sector_weights(const VibrationalState& v, int modulus);

/// Splits v into its N residue-class components; they sum to v exactly.
std::vector<VibrationalState> residue_decompose(const VibrationalState& v, int modulus);

/// sum_j w^(-j k0) |w^j alpha>, w = exp(2 pi i / N), unnormalized.
VibrationalState multi_component_cat(const CoherentParam& alpha, int modulus, int k0,
                                     int cutoff);

/// v / ||v||. Throws DegenerateStateError for the zero vector.
VibrationalState normalized(const VibrationalState& v);

}  // namespace ioncat
