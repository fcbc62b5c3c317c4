"""Spectra and scattering of the double Dirac delta potential in 1D.

V(x) = v1*delta(x) + v2*delta(x - a), units 2m = hbar^2 = 1, E = k^2.
The package computes the three discrete families (bound states, complex
resonances, perfect-transmission energies), the coefficients R(E) and T(E)
including the analytic continuation of T below threshold, and the critical
zero-energy reflection limit.
"""

from .bound_states import (
    LevelCurvePoint,
    bound_state_residual,
    bound_states,
    large_separation_limits,
    level_sweep,
    merged_delta_energy,
    second_level_threshold,
    signed_bound_residual,
    symmetric_factored_roots,
    wall_limit_eigenvalue,
)
from .complex_spectra import (
    PTEntry,
    ResonanceEntry,
    ZeroCurvatureCheck,
    hardbox_even_eigenvalues,
    perfect_transmission_energies,
    pt_residual,
    resonance_residual,
    resonances,
    zero_curvature_critical,
)
from .core import (
    DeltaPair,
    InvalidParameterError,
    PoleHitError,
    SearchIncompleteError,
    SpectrumEntry,
    WellPair,
    energy_of_k,
    k_of_energy,
)
from .scattering import (
    AmplitudePair,
    ScanRow,
    ZeroEnergyClass,
    amplitudes,
    coefficients,
    limit_consistency_check,
    oracle_square_limit,
    reflection_amplitude,
    transmission_amplitude,
    transmission_negative_energy,
    zero_energy_reflection,
)
from .table1 import REFERENCE_ROWS, CellCheck, reproduce_reference_table

__version__ = "0.1.0"

__all__ = [
    "AmplitudePair",
    "CellCheck",
    "DeltaPair",
    "InvalidParameterError",
    "LevelCurvePoint",
    "PTEntry",
    "PoleHitError",
    "REFERENCE_ROWS",
    "ResonanceEntry",
    "ScanRow",
    "SearchIncompleteError",
    "SpectrumEntry",
    "WellPair",
    "ZeroCurvatureCheck",
    "ZeroEnergyClass",
    "amplitudes",
    "bound_state_residual",
    "bound_states",
    "coefficients",
    "energy_of_k",
    "hardbox_even_eigenvalues",
    "k_of_energy",
    "large_separation_limits",
    "level_sweep",
    "limit_consistency_check",
    "merged_delta_energy",
    "oracle_square_limit",
    "perfect_transmission_energies",
    "pt_residual",
    "reflection_amplitude",
    "reproduce_reference_table",
    "resonance_residual",
    "resonances",
    "second_level_threshold",
    "signed_bound_residual",
    "symmetric_factored_roots",
    "transmission_amplitude",
    "transmission_negative_energy",
    "wall_limit_eigenvalue",
    "zero_curvature_critical",
    "zero_energy_reflection",
]
