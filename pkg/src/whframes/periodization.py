"""Periodized power and correlation functions of a window on one period.

All sums over lattice shifts are exactly finite because windows are
compactly supported; shift ranges come from support arithmetic, never
from heuristic truncation.  Grids carry every image of a piece boundary
inside the period, and one-sided limits at those points are evaluated
from exact rational arithmetic, so suprema attained only as one-sided
limits are still produced exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .window import PiecewiseWindow, Rational, as_fraction, intersect_intervals, shift_intervals

DEFAULT_RESOLUTION = 4096
DEFAULT_ZERO_RTOL = 1e-12


class EmptyDomainError(ValueError):
    """The requested extremum has an empty domain."""


@dataclass(frozen=True)
class BoundaryLimit:
    x: float
    left: float
    right: float


@dataclass(frozen=True, eq=False)
class PeriodizedSamples:
    period: float
    grid: np.ndarray
    values: np.ndarray
    boundary_limits: tuple[BoundaryLimit, ...]


@dataclass(frozen=True, eq=False)
class CorrelationSamples:
    k: int
    samples: PeriodizedSamples


@dataclass(frozen=True)
class ZeroSet:
    period: float
    intervals: tuple[tuple[float, float], ...]
    measure: float


# -- grid construction -------------------------------------------------------


def _mod(x: Fraction, period: Fraction) -> Fraction:
    return x - (x // period) * period


def _knots_mod(points: Iterable[Fraction], period: Fraction) -> set[Fraction]:
    return {_mod(q, period) for q in points}


def _build_grid(
    period: Fraction, resolution: int, knots: set[Fraction]
) -> tuple[np.ndarray, list[Fraction]]:
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    uniform = {Fraction(i, 1) * period / resolution for i in range(resolution)}
    all_points = sorted(uniform | knots)
    grid = np.unique(np.array([float(q) for q in all_points], dtype=float))
    return grid, sorted(knots)


def _shift_range(
    hull: tuple[Fraction, Fraction] | None, period: Fraction
) -> range:
    """Integers n for which the hull shifted by n*period meets [0, period)."""
    if hull is None:
        return range(0)
    lo, hi = hull
    n_min = math.floor(-hi / period) + 1
    n_max = math.ceil((period - lo) / period) - 1
    return range(n_min, n_max + 1)


def translate_range(w: PiecewiseWindow, period: Fraction) -> range:
    return _shift_range(w.support_hull(), period)


def contributing_ks(w: PiecewiseWindow, b: Rational) -> list[int]:
    """Nonzero k for which supp(w) meets supp(w) shifted by k/b, exactly."""
    b_f = as_fraction(b)
    if b_f <= 0:
        raise ValueError("b must be positive")
    sup = w.support()
    hull = w.support_hull()
    if hull is None:
        return []
    span = hull[1] - hull[0]
    ks = []
    k = 1
    while Fraction(k) / b_f < span:
        for sk in (k, -k):
            if intersect_intervals(sup, shift_intervals(sup, Fraction(sk) / b_f)):
                ks.append(sk)
        k += 1
    return sorted(ks, key=abs)


# -- shared sampling core -----------------------------------------------------


def _product_terms(
    w: PiecewiseWindow,
    period: Fraction,
    shift: Fraction,
    grid: np.ndarray,
    knots: list[Fraction],
):
    """Per-n arrays of w(x - n*period) * w(x - n*period - shift) on the grid.

    Yields (values, left_limits, right_limits); limits are evaluated at the
    exact knot positions (wrapping the left limit at 0 to the period end).
    """
    sup = w.support()
    overlap = intersect_intervals(sup, shift_intervals(sup, shift))
    if not overlap:
        return
    hull = (overlap[0][0], overlap[-1][1])
    for n in _shift_range(hull, period):
        t = Fraction(n) * period
        wa = w.translate(t)
        wb = w.translate(t + shift)
        vals = wa.eval_many(grid) * wb.eval_many(grid)
        left = np.empty(len(knots))
        right = np.empty(len(knots))
        for i, q in enumerate(knots):
            q_left = q if q > 0 else period
            left[i] = wa.value_left(q_left) * wb.value_left(q_left)
            right[i] = wa.value_right(q) * wb.value_right(q)
        yield vals, left, right


def _assemble(
    period: Fraction,
    grid: np.ndarray,
    knots: list[Fraction],
    values: np.ndarray,
    left: np.ndarray,
    right: np.ndarray,
) -> PeriodizedSamples:
    limits = tuple(
        BoundaryLimit(float(q), float(l), float(r))
        for q, l, r in zip(knots, left, right)
    )
    return PeriodizedSamples(float(period), grid, values, limits)


def _periodized_square(
    w: PiecewiseWindow,
    period: Fraction,
    resolution: int,
    extra_knots: Iterable[Rational] = (),
) -> PeriodizedSamples:
    knot_set = _knots_mod(
        set(w.boundaries()) | {as_fraction(q) for q in extra_knots}, period
    )
    grid, knots = _build_grid(period, resolution, knot_set)
    values = np.zeros_like(grid)
    left = np.zeros(len(knots))
    right = np.zeros(len(knots))
    for vals, l, r in _product_terms(w, period, Fraction(0), grid, knots):
        values += vals
        left += l
        right += r
    return _assemble(period, grid, knots, values, left, right)


# -- public periodizations -----------------------------------------------------


def compute_G(
    w: PiecewiseWindow,
    a: Rational,
    resolution: int = DEFAULT_RESOLUTION,
    extra_knots: Iterable[Rational] = (),
) -> PeriodizedSamples:
    """Sum of |w(x - n a)|^2 over all n, sampled on one period [0, a)."""
    a_f = as_fraction(a)
    if a_f <= 0:
        raise ValueError("translation step a must be positive")
    return _periodized_square(w, a_f, resolution, extra_knots)


def compute_G_tilde(
    w: PiecewiseWindow,
    b: Rational,
    resolution: int = DEFAULT_RESOLUTION,
    extra_knots: Iterable[Rational] = (),
) -> PeriodizedSamples:
    """Sum of |w(x + m/b)|^2 over all m, with period 1/b."""
    b_f = as_fraction(b)
    if b_f <= 0:
        raise ValueError("modulation step b must be positive")
    return _periodized_square(w, 1 / b_f, resolution, extra_knots)


def spectral_translates_power(
    w: PiecewiseWindow,
    a: Rational,
    resolution: int = DEFAULT_RESOLUTION,
    extra_knots: Iterable[Rational] = (),
) -> PeriodizedSamples:
    """Sum of |w((x + n)/a)|^2 over n, a 1-periodic function of x."""
    a_f = as_fraction(a)
    if a_f <= 0:
        raise ValueError("translation step a must be positive")
    return _periodized_square(w.dilate(a_f), Fraction(1), resolution, extra_knots)


def _correlation_knots(w: PiecewiseWindow, a: Fraction, shifts: Sequence[Fraction]) -> set[Fraction]:
    base = set(w.boundaries())
    pts: set[Fraction] = set(base)
    for s in shifts:
        pts |= {beta + s for beta in base}
    return _knots_mod(pts, a)


def cross_knots(w: PiecewiseWindow, a: Rational, b: Rational) -> set[Fraction]:
    """Every piece-boundary image, under both n- and k-shifts, mod a."""
    a_f, b_f = as_fraction(a), as_fraction(b)
    shifts = [Fraction(k) / b_f for k in contributing_ks(w, b_f)]
    return _correlation_knots(w, a_f, shifts)


def compute_Hk(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    k: int,
    resolution: int = DEFAULT_RESOLUTION,
    extra_knots: Iterable[Rational] = (),
) -> CorrelationSamples:
    """Correlation sum over n of w(x-na) * w(x-na-k/b), period a."""
    a_f, b_f = as_fraction(a), as_fraction(b)
    if a_f <= 0 or b_f <= 0:
        raise ValueError("lattice steps must be positive")
    shift = Fraction(k) / b_f
    knot_set = _correlation_knots(w, a_f, [shift]) | _knots_mod(
        {as_fraction(q) for q in extra_knots}, a_f
    )
    grid, knots = _build_grid(a_f, resolution, knot_set)
    values = np.zeros_like(grid)
    left = np.zeros(len(knots))
    right = np.zeros(len(knots))
    for vals, l, r in _product_terms(w, a_f, shift, grid, knots):
        values += vals
        left += l
        right += r
    return CorrelationSamples(k, _assemble(a_f, grid, knots, values, left, right))


def cross_term_sum(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    resolution: int = DEFAULT_RESOLUTION,
    extra_knots: Iterable[Rational] = (),
) -> PeriodizedSamples:
    """Pointwise sum over k != 0 of |H_k(x)|, period a."""
    a_f, b_f = as_fraction(a), as_fraction(b)
    if a_f <= 0 or b_f <= 0:
        raise ValueError("lattice steps must be positive")
    ks = contributing_ks(w, b_f)
    knot_set = _correlation_knots(w, a_f, [Fraction(k) / b_f for k in ks])
    knot_set |= _knots_mod({as_fraction(q) for q in extra_knots}, a_f)
    grid, knots = _build_grid(a_f, resolution, knot_set)
    values = np.zeros_like(grid)
    left = np.zeros(len(knots))
    right = np.zeros(len(knots))
    for k in ks:
        shift = Fraction(k) / b_f
        vals_k = np.zeros_like(grid)
        left_k = np.zeros(len(knots))
        right_k = np.zeros(len(knots))
        for vals, l, r in _product_terms(w, a_f, shift, grid, knots):
            vals_k += vals
            left_k += l
            right_k += r
        values += np.abs(vals_k)
        left += np.abs(left_k)
        right += np.abs(right_k)
    return _assemble(a_f, grid, knots, values, left, right)


def abs_cross_sum(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    resolution: int = DEFAULT_RESOLUTION,
    extra_knots: Iterable[Rational] = (),
) -> PeriodizedSamples:
    """Pointwise double sum over k != 0 and n of |w(x-na) w(x-na-k/b)|."""
    a_f, b_f = as_fraction(a), as_fraction(b)
    if a_f <= 0 or b_f <= 0:
        raise ValueError("lattice steps must be positive")
    ks = contributing_ks(w, b_f)
    knot_set = _correlation_knots(w, a_f, [Fraction(k) / b_f for k in ks])
    knot_set |= _knots_mod({as_fraction(q) for q in extra_knots}, a_f)
    grid, knots = _build_grid(a_f, resolution, knot_set)
    values = np.zeros_like(grid)
    left = np.zeros(len(knots))
    right = np.zeros(len(knots))
    for k in ks:
        shift = Fraction(k) / b_f
        for vals, l, r in _product_terms(w, a_f, shift, grid, knots):
            values += np.abs(vals)
            left += np.abs(l)
            right += np.abs(r)
    return _assemble(a_f, grid, knots, values, left, right)


def combine(
    p1: PeriodizedSamples,
    p2: PeriodizedSamples,
    fn: Callable[[np.ndarray, np.ndarray], np.ndarray],
) -> PeriodizedSamples:
    """Pointwise combination of two sample sets sharing one grid."""
    if p1.period != p2.period or not np.array_equal(p1.grid, p2.grid):
        raise ValueError("samples live on different grids")
    xs1 = [bl.x for bl in p1.boundary_limits]
    xs2 = [bl.x for bl in p2.boundary_limits]
    if xs1 != xs2:
        raise ValueError("samples carry different boundary points")
    values = fn(p1.values, p2.values)
    limits = tuple(
        BoundaryLimit(
            b1.x,
            float(fn(np.array(b1.left), np.array(b2.left))),
            float(fn(np.array(b1.right), np.array(b2.right))),
        )
        for b1, b2 in zip(p1.boundary_limits, p2.boundary_limits)
    )
    return PeriodizedSamples(p1.period, p1.grid, values, limits)


# -- zero sets and extrema ------------------------------------------------------


def zero_set(p: PeriodizedSamples, tol_zero: float = DEFAULT_ZERO_RTOL) -> ZeroSet:
    """Subintervals of one period where the samples vanish (relatively)."""
    if tol_zero < 0:
        raise ValueError("tol_zero must be nonnegative")
    mags = np.abs(p.values)
    peak = float(mags.max()) if len(mags) else 0.0
    thr = tol_zero * peak
    flags = mags <= thr
    n = len(flags)
    intervals: list[tuple[float, float]] = []
    i = 0
    while i < n:
        if not flags[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and flags[j + 1]:
            j += 1
        if j > i:
            hi = p.period if j == n - 1 else float(p.grid[j + 1])
            intervals.append((float(p.grid[i]), hi))
        else:
            # isolated zero sample: a measure-zero touch, kept as a degenerate
            # interval so it never masks the approach to the zero
            intervals.append((float(p.grid[i]), float(p.grid[i])))
        i = j + 1
    measure = float(sum(hi - lo for lo, hi in intervals))
    return ZeroSet(p.period, tuple(intervals), measure)


@dataclass(frozen=True)
class ExtremaDetail:
    inf: float
    inf_location: float
    sup: float
    sup_location: float


def extrema_detail(
    p: PeriodizedSamples,
    exclude: ZeroSet | None = None,
    *,
    sup_over_full_period: bool = False,
) -> ExtremaDetail:
    intervals = [
        (lo, hi) for lo, hi in (exclude.intervals if exclude else ()) if hi > lo
    ]

    def point_excluded(x: float) -> bool:
        return any(lo <= x < hi for lo, hi in intervals)

    def left_approach_excluded(x: float) -> bool:
        x_eff = x if x > 0 else p.period
        return any(lo < x_eff <= hi for lo, hi in intervals)

    mask = np.zeros(len(p.grid), dtype=bool)
    for lo, hi in intervals:
        i0 = np.searchsorted(p.grid, lo, side="left")
        i1 = np.searchsorted(p.grid, hi, side="left")
        mask[i0:i1] = True

    candidates: list[tuple[float, float]] = [
        (float(v), float(x)) for v, x in zip(p.values[~mask], p.grid[~mask])
    ]
    all_candidates: list[tuple[float, float]] = [
        (float(v), float(x)) for v, x in zip(p.values, p.grid)
    ]
    for bl in p.boundary_limits:
        all_candidates.append((bl.left, bl.x))
        all_candidates.append((bl.right, bl.x))
        if not left_approach_excluded(bl.x):
            candidates.append((bl.left, bl.x))
        if not point_excluded(bl.x):
            candidates.append((bl.right, bl.x))
    if not candidates:
        raise EmptyDomainError("exclusion set covers the whole period")
    inf_v, inf_x = min(candidates, key=lambda t: t[0])
    sup_pool = all_candidates if sup_over_full_period else candidates
    sup_v, sup_x = max(sup_pool, key=lambda t: t[0])
    return ExtremaDetail(inf_v, inf_x, sup_v, sup_x)


def essential_extrema(
    p: PeriodizedSamples,
    exclude: ZeroSet | None = None,
    *,
    sup_over_full_period: bool = False,
) -> tuple[float, float]:
    """Essential inf and sup over one period, outside ``exclude``.

    One-sided limits at piece-boundary images participate whenever the
    matching side is approachable from outside the excluded intervals, so
    extrema attained only in the limit are still reported exactly.
    """
    d = extrema_detail(p, exclude, sup_over_full_period=sup_over_full_period)
    return d.inf, d.sup
