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

#include <stdexcept>
#include <string>

namespace ioncat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of two operands disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index (Fock level, register index, ion number) lies outside its range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter violates its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Zero-norm state where a normalizable one is required.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Operation requires inputs the caller did not supply (e.g. a diffusion
/// context for a mode that needs one).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Pipeline stage applied to a state that is not in its expected form.
class ProtocolOrderError : public Error {
 public:
  using Error::Error;
};

/// Norm drift beyond the abort threshold.
class NumericalIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Post-selection on an outcome with zero probability.
class DegenerateMeasurementError : public Error {
 public:
  using Error::Error;
};

}  // namespace ioncat
