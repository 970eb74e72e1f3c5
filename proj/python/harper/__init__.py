"""Spectral toolkit for Harper and almost Mathieu operators.

Thin re-export of the compiled core: matrix builders, a complex Hermitian
eigensolver, elliptic integrals and periods, density-of-states routines,
spectral zeta / partition functions, and Hofstadter-butterfly rasters.
"""

from ._core import (
    NumericalError,
    ValidationError,
    am_matrix,
    band_sweep,
    bands_rational,
    char_poly_am,
    complete_k,
    convergents,
    dos_am,
    dos_counting_derivative,
    dos_elliptic,
    dos_from_half_periods,
    eigenvalues,
    factorization_report,
    family_discriminant,
    fourier_mode_value,
    harper_matrix,
    ids_counting,
    incomplete_f,
    landen_check,
    partition_am,
    partition_harper,
    period_gamma,
    render_butterfly,
    tau_invariant,
    zeta_am_quadrature,
    zeta_am_winding,
    zeta_am_window,
    zeta_harper,
)

__version__ = "0.1.0"

__all__ = [
    "NumericalError",
    "ValidationError",
    "am_matrix",
    "band_sweep",
    "bands_rational",
    "char_poly_am",
    "complete_k",
    "convergents",
    "dos_am",
    "dos_counting_derivative",
    "dos_elliptic",
    "dos_from_half_periods",
    "eigenvalues",
    "factorization_report",
    "family_discriminant",
    "fourier_mode_value",
    "harper_matrix",
    "ids_counting",
    "incomplete_f",
    "landen_check",
    "partition_am",
    "partition_harper",
    "period_gamma",
    "render_butterfly",
    "tau_invariant",
    "zeta_am_quadrature",
    "zeta_am_winding",
    "zeta_am_window",
    "zeta_harper",
]
