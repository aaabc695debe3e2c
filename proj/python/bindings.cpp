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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ioncat/coupling.hpp"
#include "ioncat/errors.hpp"
#include "ioncat/grover.hpp"
#include "ioncat/protocol.hpp"
#include "ioncat/register.hpp"
#include "ioncat/report.hpp"
#include "ioncat/states.hpp"

namespace py = pybind11;
using namespace ioncat;

namespace {

ProtocolConfig make_config(int ions, Complex alpha, int target, const std::string& mode,
                           std::optional<int> iterations, std::optional<int> cutoff,
                           double epsilon, std::uint64_t seed, bool postselect) {
  ProtocolConfig cfg;
  cfg.qubits = ions;
  cfg.alpha = alpha;
  cfg.k0 = target;
  cfg.mode = parse_grover_mode(mode);
  cfg.iterations = iterations;
  cfg.cutoff = cutoff;
  cfg.epsilon = epsilon;
  cfg.seed = seed;
  cfg.postselect = postselect;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_ioncat, m) {
  m.doc() = "Ion-trap multi-phonon coherent state preparation with Grover search";

  auto base = py::register_exception<Error>(m, "IoncatError");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<IndexError>(m, "IoncatIndexError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<DegenerateStateError>(m, "DegenerateStateError", base.ptr());
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());
  py::register_exception<ProtocolOrderError>(m, "ProtocolOrderError", base.ptr());
  py::register_exception<NumericalIntegrityError>(m, "NumericalIntegrityError", base.ptr());
  py::register_exception<DegenerateMeasurementError>(m, "DegenerateMeasurementError",
                                                     base.ptr());

  m.def("choose_cutoff",
        [](Complex alpha, double epsilon) { return choose_cutoff(CoherentParam(alpha), epsilon); },
        py::arg("alpha"), py::arg("epsilon") = 1e-12);
  m.def("coherent_state",
        [](Complex alpha, int cutoff) {
          return ComplexVector(coherent_state(CoherentParam(alpha), cutoff).amplitudes());
        },
        py::arg("alpha"), py::arg("cutoff"));
  m.def("generalized_coherent",
        [](Complex alpha, int modulus, int k, int cutoff) {
          return ComplexVector(
              generalized_coherent(CoherentParam(alpha), modulus, k, cutoff).amplitudes());
        },
        py::arg("alpha"), py::arg("N"), py::arg("k"), py::arg("cutoff"));
  m.def("multi_component_cat",
        [](Complex alpha, int modulus, int k0, int cutoff) {
          return ComplexVector(
              multi_component_cat(CoherentParam(alpha), modulus, k0, cutoff).amplitudes());
        },
        py::arg("alpha"), py::arg("N"), py::arg("k0"), py::arg("cutoff"));
  m.def("sector_weights",
        [](const ComplexVector& amps, int modulus) {
          return sector_weights(VibrationalState(amps), modulus).weights;
        },
        py::arg("amplitudes"), py::arg("N"));

  m.def("fourier_matrix",
        [](int ions, bool inverse) {
          return fourier_matrix(RegisterSpec(ions), inverse ? FourierDirection::Inverse
                                                            : FourierDirection::Forward);
        },
        py::arg("ions"), py::arg("inverse") = false);
  m.def("conditional_phase_diagonal",
        [](int ions, int cutoff) { return conditional_phase_unitary(ions, cutoff).diagonal(); },
        py::arg("ions"), py::arg("cutoff"));
  m.def("compute_chi",
        [](double eta, double omega, double delta, int ions) {
          return compute_chi({eta, omega, delta, ions});
        },
        py::arg("eta"), py::arg("omega"), py::arg("delta"), py::arg("ions"));

  m.def("entangle",
        [](const ComplexVector& vib, int ions) {
          return entangle(initial_state(VibrationalState(vib), ions)).amplitudes();
        },
        py::arg("vibrational"), py::arg("ions"),
        "Joint (k, n) amplitudes after the entangling sequence.");

  m.def("grover_angle", &grover_angle, py::arg("N"));
  m.def("optimal_iterations",
        [](double theta) {
          const auto t = optimal_iterations(theta);
          return py::make_tuple(t.exact, t.rounded);
        },
        py::arg("theta"));
  m.def("model_amplitudes",
        [](int modulus, int j, bool unit_branch) {
          const auto a = model_amplitudes(modulus, j,
                                          unit_branch ? AmplitudeConvention::UnitBranch
                                                      : AmplitudeConvention::Normalized);
          return py::make_tuple(a.marked, a.unmarked);
        },
        py::arg("N"), py::arg("j"), py::arg("unit_branch") = false);

  m.def("run_protocol_json",
        [](int ions, Complex alpha, int target, const std::string& mode,
           std::optional<int> iterations, std::optional<int> cutoff, double epsilon,
           std::uint64_t seed, bool postselect) {
          const auto cfg = make_config(ions, alpha, target, mode, iterations, cutoff, epsilon,
                                       seed, postselect);
          py::gil_scoped_release release;
          return report_to_json(run_protocol(cfg)).dump();
        },
        py::arg("ions"), py::arg("alpha"), py::arg("target"),
        py::arg("mode") = "correlated-diffusion", py::arg("iterations") = py::none(),
        py::arg("cutoff") = py::none(), py::arg("epsilon") = 1e-12, py::arg("seed") = 0,
        py::arg("postselect") = false);
}
