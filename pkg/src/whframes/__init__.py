"""Numerical frame-sequence diagnostics for Weyl-Heisenberg (Gabor) systems.

The package decides and quantifies frame and Riesz-sequence properties of
lattice systems generated by piecewise-algebraic windows, and cross-checks
every analytic verdict against brute-force coefficient and Gram oracles.
"""

__version__ = "0.1.0"

from .window import (
    Lattice,
    MalformedNumberError,
    NegativeRadicandError,
    Piece,
    PieceOverlapError,
    PiecewiseWindow,
    Polynomial,
    SqrtPolynomial,
    UnboundedSupportError,
    WindowSpecError,
    as_fraction,
    poly_window,
    window_from_dict,
    window_to_dict,
)
from .periodization import (
    CorrelationSamples,
    EmptyDomainError,
    PeriodizedSamples,
    ZeroSet,
    abs_cross_sum,
    compute_G,
    compute_G_tilde,
    compute_Hk,
    contributing_ks,
    cross_term_sum,
    essential_extrema,
    spectral_translates_power,
    zero_set,
)

__all__ = [
    "Lattice",
    "MalformedNumberError",
    "NegativeRadicandError",
    "Piece",
    "PieceOverlapError",
    "PiecewiseWindow",
    "Polynomial",
    "SqrtPolynomial",
    "UnboundedSupportError",
    "WindowSpecError",
    "as_fraction",
    "poly_window",
    "window_from_dict",
    "window_to_dict",
    "CorrelationSamples",
    "EmptyDomainError",
    "PeriodizedSamples",
    "ZeroSet",
    "abs_cross_sum",
    "compute_G",
    "compute_G_tilde",
    "compute_Hk",
    "contributing_ks",
    "cross_term_sum",
    "essential_extrema",
    "spectral_translates_power",
    "zero_set",
]
