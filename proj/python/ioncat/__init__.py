"""Ion-trap multi-phonon coherent state preparation with Grover search."""

import json as _json

from ._ioncat import (  # noqa: F401
    ConfigurationError,
    DegenerateMeasurementError,
    DegenerateStateError,
    DimensionError,
    IoncatIndexError,
    IoncatError,
    NumericalIntegrityError,
    ParameterError,
    ProtocolOrderError,
    choose_cutoff,
    coherent_state,
    compute_chi,
    conditional_phase_diagonal,
    entangle,
    fourier_matrix,
    generalized_coherent,
    grover_angle,
    model_amplitudes,
    multi_component_cat,
    optimal_iterations,
    run_protocol_json,
    sector_weights,
)

__version__ = "0.1.0"


def run_protocol(ions, alpha, target, **kwargs):
    """Run the full protocol and return the report as a dict."""
    return _json.loads(run_protocol_json(ions, complex(alpha), target, **kwargs))
