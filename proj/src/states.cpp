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

#include "ioncat/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ioncat/errors.hpp"
#include "ioncat/register.hpp"

namespace ioncat {
namespace {

constexpr int kMinCutoff = 16;

void require_modulus(int modulus) {
  if (modulus < 1) {
    throw ParameterError("modulus N must be >= 1, got " + std::to_string(modulus));
  }
}

void require_residue(int k, int modulus) {
  require_modulus(modulus);
  if (k < 0 || k >= modulus) {
    throw IndexError("residue " + std::to_string(k) + " outside 0.." +
                     std::to_string(modulus - 1));
  }
}

// Suffix sums of the Poisson pmf: tails[n] = sum_{j >= n} p_j. Summed from
// the far end so that tiny tails keep full relative precision.
std::vector<double> poisson_suffix_sums(double mean) {
  std::vector<double> pmf;
  if (mean == 0.0) {
    pmf = {1.0};
  } else {
    const double log_mean = std::log(mean);
    for (int n = 0;; ++n) {
      const double log_p = -mean + n * log_mean - std::lgamma(n + 1.0);
      pmf.push_back(std::exp(log_p));
      if (n > mean && log_p < -750.0) {
        break;
      }
      if (n > 10'000'000) {
        throw ParameterError("coherent amplitude too large for Fock truncation");
      }
    }
  }
  std::vector<double> tails(pmf.size() + 1, 0.0);
  for (std::size_t i = pmf.size(); i-- > 0;) {
    tails[i] = tails[i + 1] + pmf[i];
  }
  return tails;
}

}  // namespace

CoherentParam::CoherentParam(Complex a) : alpha(a) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw ParameterError("alpha must be finite");
  }
}

double SectorWeights::total() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double poisson_tail(double mean, int cutoff) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw ParameterError("Poisson mean must be finite and non-negative");
  }
  if (cutoff < 0) {
    return 1.0;
  }
  const auto tails = poisson_suffix_sums(mean);
  const auto first = static_cast<std::size_t>(cutoff) + 1;
  return first < tails.size() ? tails[first] : 0.0;
}

int choose_cutoff(const CoherentParam& alpha, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  const auto tails = poisson_suffix_sums(std::norm(alpha.alpha));
  int cutoff = kMinCutoff;
  auto tail_at = [&](int c) {
    const auto first = static_cast<std::size_t>(c) + 1;
    return first < tails.size() ? tails[first] : 0.0;
  };
  while (tail_at(cutoff) >= epsilon) {
    ++cutoff;
  }
  return cutoff;
}

VibrationalState coherent_state(const CoherentParam& alpha, int cutoff) {
  if (cutoff < 1) {
    throw ParameterError("cutoff must be >= 1");
  }
  const double mean = std::norm(alpha.alpha);
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  if (mean == 0.0) {
    amps[0] = 1.0;
    return VibrationalState(std::move(amps), 0.0);
  }
  const double magnitude = std::sqrt(mean);
  const double log_mag = std::log(magnitude);
  const Complex unit = alpha.alpha / magnitude;
  Complex phase = 1.0;
  for (int n = 0; n <= cutoff; ++n) {
    // |alpha|^n / sqrt(n!) via logarithms; survives cutoffs past 170.
    const double log_amp = -0.5 * mean + n * log_mag - 0.5 * std::lgamma(n + 1.0);
    amps[n] = std::exp(log_amp) * phase;
    phase *= unit;
  }
  return VibrationalState(std::move(amps), poisson_tail(mean, cutoff));
}

VibrationalState generalized_coherent(const CoherentParam& alpha, int modulus, int k,
                                      int cutoff) {
  require_residue(k, modulus);
  if (cutoff < k) {
    throw ParameterError("cutoff " + std::to_string(cutoff) + " below residue " +
                         std::to_string(k));
  }
  const auto full = coherent_state(alpha, std::max(cutoff, 1));
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  for (int n = k; n <= cutoff; n += modulus) {
    amps[n] = full.amplitudes()[n];
  }
  return VibrationalState(std::move(amps), full.tail_bound());
}

SectorWeights sector_weights(const VibrationalState& v, int modulus) {
  require_modulus(modulus);
  SectorWeights out{modulus, std::vector<double>(static_cast<std::size_t>(modulus), 0.0)};
  for (int n = 0; n <= v.cutoff(); ++n) {
    out.weights[static_cast<std::size_t>(n % modulus)] += std::norm(v.amplitudes()[n]);
  }
  return out;
}

std::vector<VibrationalState> residue_decompose(const VibrationalState& v, int modulus) {
  require_modulus(modulus);
  std::vector<VibrationalState> parts;
  parts.reserve(static_cast<std::size_t>(modulus));
  for (int k = 0; k < modulus; ++k) {
    ComplexVector amps = ComplexVector::Zero(v.cutoff() + 1);
    for (int n = k; n <= v.cutoff(); n += modulus) {
      amps[n] = v.amplitudes()[n];
    }
    parts.emplace_back(std::move(amps), v.tail_bound());
  }
  return parts;
}

VibrationalState multi_component_cat(const CoherentParam& alpha, int modulus, int k0,
                                     int cutoff) {
  require_residue(k0, modulus);
  ComplexVector sum = ComplexVector::Zero(cutoff + 1);
  double tail = 0.0;
  for (int j = 0; j < modulus; ++j) {
    const auto component =
        coherent_state(CoherentParam(root_of_unity(j, modulus) * alpha.alpha), cutoff);
    sum += root_of_unity(-static_cast<long long>(j) * k0, modulus) * component.amplitudes();
    tail = component.tail_bound();
  }
  // Each of the N unit-weight terms drops the same Poisson tail.
  return VibrationalState(std::move(sum), static_cast<double>(modulus) * modulus * tail);
}

VibrationalState normalized(const VibrationalState& v) {
  const double norm2 = v.squared_norm();
  if (norm2 == 0.0) {
    throw DegenerateStateError("cannot normalize a zero vibrational state");
  }
  const double norm = std::sqrt(norm2);
  return VibrationalState(v.amplitudes() / norm, v.tail_bound() / norm2);
}

}  // namespace ioncat
