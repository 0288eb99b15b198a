"""Entanglement witness calculator for gravitationally coupled
matter-wave interferometers.

Computes the minimal eigenvalue of the partially transposed density matrix
(the PPT witness expectation value) for two- and three-mass layouts under
exponential decoherence, and finds the minimal spatial superposition width
that certifies entanglement.
"""

from .closedform import (
    EigenQuad,
    pt_eigenvalues,
    required_delta_x,
    witness_linear,
    witness_parallel,
)
from .config import (
    CODATA,
    ExperimentConfig,
    Geometry,
    PhysicalConstants,
    config_from_dict,
    config_to_dict,
    load_config,
    validate,
)
from .eigen import hermitian_eigensystem
from .phases import (
    PhaseSet,
    effective_rate_approx,
    phases_for,
    phases_linear2,
    phases_parallel2,
    phases_parallel3,
    phases_triangle3,
)
from .scan import (
    ScanRow,
    ScanSpec,
    ThresholdPoint,
    grid_scan,
    load_scan_spec,
    min_delta_x,
    scan_spec_from_dict,
    threshold_curve,
)
from .units import parse_quantity
from .witness import (
    WitnessDiagnostics,
    WitnessResult,
    apply_dephasing,
    build_state,
    density_from_state,
    partial_transpose,
    witness_expectation,
    witness_operator,
)

__version__ = "0.1.0"

__all__ = [
    "CODATA",
    "EigenQuad",
    "ExperimentConfig",
    "Geometry",
    "PhaseSet",
    "PhysicalConstants",
    "ScanRow",
    "ScanSpec",
    "ThresholdPoint",
    "WitnessDiagnostics",
    "WitnessResult",
    "apply_dephasing",
    "build_state",
    "config_from_dict",
    "config_to_dict",
    "density_from_state",
    "effective_rate_approx",
    "grid_scan",
    "hermitian_eigensystem",
    "load_config",
    "load_scan_spec",
    "min_delta_x",
    "parse_quantity",
    "partial_transpose",
    "phases_for",
    "phases_linear2",
    "phases_parallel2",
    "phases_parallel3",
    "phases_triangle3",
    "pt_eigenvalues",
    "required_delta_x",
    "scan_spec_from_dict",
    "threshold_curve",
    "validate",
    "witness_expectation",
    "witness_linear",
    "witness_operator",
    "witness_parallel",
]
