"""Analytic frame and Riesz-sequence checkers.

Each checker turns one criterion into a verdict with bounds and witnesses.
Structural preconditions (support disjointness, support length, spectral
support away from zero) are decided by exact rational interval arithmetic,
so Inapplicable verdicts are never the product of rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .periodization import (
    DEFAULT_RESOLUTION,
    EmptyDomainError,
    PeriodizedSamples,
    ZeroSet,
    abs_cross_sum,
    combine,
    compute_G,
    compute_G_tilde,
    compute_Hk,
    contributing_ks,
    cross_knots,
    cross_term_sum,
    extrema_detail,
    spectral_translates_power,
    zero_set,
    _build_grid,
    _knots_mod,
)
from .window import (
    PiecewiseWindow,
    Rational,
    as_fraction,
    intersect_intervals,
    shift_intervals,
)

POSITIVITY_RTOL = 1e-12
RIESZ_MEASURE_RTOL = 1e-9
UPPER_BOUND_RTOL = 1e-9

CONDITION_IDS = (
    "HW-1",
    "HW-4",
    "DSXW-5",
    "THM21",
    "COR22",
    "PROP23",
    "PROP24",
    "THM12-TRANSLATES",
    "COR13-MODULATES",
    "THM25-WAVELET",
)


class SpectralSupportError(ValueError):
    """Spectral support touches zero: infinitely many scales would contribute."""


class Verdict(str, Enum):
    SATISFIED = "Satisfied"
    NOT_SATISFIED = "NotSatisfied"
    INAPPLICABLE = "Inapplicable"


class TargetSpace(str, Enum):
    WHOLE_L2 = "WholeL2"
    L2_MINUS_ZERO_SET = "L2MinusNG"
    SPAN_ONLY = "SpanOnly"


@dataclass(frozen=True)
class Witness:
    quantity: str
    value: float
    location: float | None = None

    def to_dict(self) -> dict:
        return {"quantity": self.quantity, "value": self.value, "location": self.location}


@dataclass(frozen=True)
class ConditionReport:
    condition_id: str
    verdict: Verdict
    target_space: TargetSpace
    lower_bound: float | None = None
    upper_bound: float | None = None
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self):
        if self.condition_id not in CONDITION_IDS:
            raise ValueError(f"unknown condition id {self.condition_id!r}")
        if self.verdict is Verdict.SATISFIED:
            if self.lower_bound is not None:
                if not self.lower_bound > 0:
                    raise ValueError("satisfied report needs a positive lower bound")
                if self.upper_bound is not None and not (
                    self.lower_bound <= self.upper_bound and math.isfinite(self.upper_bound)
                ):
                    raise ValueError("satisfied report needs finite ordered bounds")
        if self.verdict is Verdict.INAPPLICABLE and not self.witnesses:
            raise ValueError("inapplicable report needs a reason witness")

    def to_dict(self) -> dict:
        return {
            "condition_id": self.condition_id,
            "verdict": self.verdict.value,
            "target_space": self.target_space.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class RieszVerdict:
    is_frame_sequence: bool
    is_riesz_sequence: bool
    zero_set_measure: float

    def __post_init__(self):
        if self.is_riesz_sequence and not self.is_frame_sequence:
            raise ValueError("a Riesz sequence is in particular a frame sequence")

    def to_dict(self) -> dict:
        return {
            "is_frame_sequence": self.is_frame_sequence,
            "is_riesz_sequence": self.is_riesz_sequence,
            "zero_set_measure": self.zero_set_measure,
        }


def _positive(value: float, scale: float) -> bool:
    return value > POSITIVITY_RTOL * max(abs(scale), 1.0)


def _abs_sup(p: PeriodizedSamples) -> tuple[float, float]:
    """Essential sup of |values| over the full period, limits included."""
    best = (float(np.max(np.abs(p.values))), float(p.grid[int(np.argmax(np.abs(p.values)))]))
    for bl in p.boundary_limits:
        for side in (bl.left, bl.right):
            if abs(side) > best[0]:
                best = (abs(side), bl.x)
    return best


# -- classical whole-line conditions ------------------------------------------


def check_condition1(
    w: PiecewiseWindow,
    a: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    G: PeriodizedSamples | None = None,
) -> ConditionReport:
    """Uniform two-sided bounds of the periodized power over the whole line."""
    samples = G if G is not None else compute_G(w, a, resolution)
    d = extrema_detail(samples)
    ok = _positive(d.inf, d.sup)
    return ConditionReport(
        "HW-1",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.WHOLE_L2,
        lower_bound=d.inf,
        upper_bound=d.sup,
        witnesses=(
            Witness("periodized_power_inf", d.inf, d.inf_location),
            Witness("periodized_power_sup", d.sup, d.sup_location),
        ),
    )


def check_condition4(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    G: PeriodizedSamples | None = None,
) -> ConditionReport:
    """Sum of uniform norms of the correlation functions against the power inf."""
    b_f = as_fraction(b)
    samples = G if G is not None else compute_G(w, a, resolution)
    d = extrema_detail(samples)
    shell_sum = 0.0
    worst: Witness | None = None
    for k in contributing_ks(w, b_f):
        sup_k, loc_k = _abs_sup(compute_Hk(w, a, b, k, resolution).samples)
        shell_sum += sup_k
        if worst is None or sup_k > worst.value:
            worst = Witness(f"correlation_sup_k={k}", sup_k, loc_k)
    ok = _positive(d.inf, d.sup) and shell_sum < d.inf
    witnesses = [
        Witness("correlation_sup_sum", shell_sum),
        Witness("periodized_power_inf", d.inf, d.inf_location),
    ]
    if worst is not None:
        witnesses.append(worst)
    return ConditionReport(
        "HW-4",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.WHOLE_L2,
        lower_bound=(d.inf - shell_sum) / float(b_f),
        upper_bound=(d.sup + shell_sum) / float(b_f),
        witnesses=tuple(witnesses),
    )


def check_condition5(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    G: PeriodizedSamples | None = None,
) -> ConditionReport:
    """Pointwise absolute double sum dominated by the power inf, uniformly."""
    b_f = as_fraction(b)
    samples = G if G is not None else compute_G(w, a, resolution)
    d = extrema_detail(samples)
    double = abs_cross_sum(w, a, b, resolution)
    D, D_loc = _abs_sup(double)
    ok = _positive(d.inf, d.sup) and D < d.inf
    return ConditionReport(
        "DSXW-5",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.WHOLE_L2,
        lower_bound=(d.inf - D) / float(b_f),
        upper_bound=(d.sup + D) / float(b_f),
        witnesses=(
            Witness("absolute_double_sum_sup", D, D_loc),
            Witness("periodized_power_inf", d.inf, d.inf_location),
        ),
    )


# -- pointwise frame-sequence bounds ------------------------------------------


def theorem21_bounds(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    tol_zero: float | None = None,
) -> ConditionReport:
    """Pointwise comparison of the power sum against the correlation tail.

    Lower bound: essential inf, off the zero set, of the power sum minus the
    summed correlation magnitudes.  Upper bound: essential sup, over the
    whole period, of the power sum plus the same tail.  Both divided by b.
    """
    b_f = as_fraction(b)
    knots = cross_knots(w, a, b)
    G = compute_G(w, a, resolution, extra_knots=knots)
    cross = cross_term_sum(w, a, b, resolution)
    diff = combine(G, cross, np.subtract)
    total = combine(G, cross, np.add)
    kwargs = {} if tol_zero is None else {"tol_zero": tol_zero}
    NG = zero_set(G, **kwargs)
    d_low = extrema_detail(diff, exclude=NG)
    d_high = extrema_detail(total, sup_over_full_period=True)
    ok = _positive(d_low.inf, d_high.sup) and math.isfinite(d_high.sup)
    return ConditionReport(
        "THM21",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.L2_MINUS_ZERO_SET,
        lower_bound=d_low.inf / float(b_f),
        upper_bound=d_high.sup / float(b_f),
        witnesses=(
            Witness("pointwise_margin_inf", d_low.inf, d_low.inf_location),
            Witness("pointwise_total_sup", d_high.sup, d_high.sup_location),
            Witness("zero_set_measure", NG.measure),
        ),
    )


def corollary22_check(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    tol_zero: float | None = None,
) -> ConditionReport:
    """Two-sided power bounds off the zero set, for short-support windows."""
    b_f = as_fraction(b)
    hull = w.support_hull()
    if hull is None:
        return ConditionReport(
            "COR22",
            Verdict.INAPPLICABLE,
            TargetSpace.L2_MINUS_ZERO_SET,
            witnesses=(Witness("reason: window is identically zero", 0.0),),
        )
    span = hull[1] - hull[0]
    if span > 1 / b_f:
        return ConditionReport(
            "COR22",
            Verdict.INAPPLICABLE,
            TargetSpace.L2_MINUS_ZERO_SET,
            witnesses=(
                Witness("reason: support longer than 1/b", float(span)),
                Witness("max_support_length", float(1 / b_f)),
            ),
        )
    G = compute_G(w, a, resolution)
    kwargs = {} if tol_zero is None else {"tol_zero": tol_zero}
    NG = zero_set(G, **kwargs)
    try:
        d = extrema_detail(G, exclude=NG)
    except EmptyDomainError:
        return ConditionReport(
            "COR22",
            Verdict.INAPPLICABLE,
            TargetSpace.L2_MINUS_ZERO_SET,
            witnesses=(Witness("reason: power sum vanishes on the whole period", 0.0),),
        )
    ok = _positive(d.inf, d.sup)
    return ConditionReport(
        "COR22",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.L2_MINUS_ZERO_SET,
        lower_bound=d.inf / float(b_f),
        upper_bound=d.sup / float(b_f),
        witnesses=(
            Witness("power_inf_off_zero_set", d.inf, d.inf_location),
            Witness("power_sup_off_zero_set", d.sup, d.sup_location),
            Witness("zero_set_measure", NG.measure),
        ),
    )


def _disjoint_translates_violation(w: PiecewiseWindow, a: Fraction) -> int | None:
    """Smallest n > 0 whose translate meets the window support, if any."""
    sup = w.support()
    hull = w.support_hull()
    if hull is None:
        return None
    span = hull[1] - hull[0]
    n = 1
    while Fraction(n) * a < span:
        if intersect_intervals(sup, shift_intervals(sup, Fraction(n) * a)):
            return n
        n += 1
    return None


def prop23_check(
    w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    tol_zero: float | None = None,
) -> tuple[ConditionReport, RieszVerdict]:
    """Spectral-periodization bounds for windows with disjoint translates."""
    a_f, b_f = as_fraction(a), as_fraction(b)
    Gt = compute_G_tilde(w, b, resolution)
    kwargs = {} if tol_zero is None else {"tol_zero": tol_zero}
    NGt = zero_set(Gt, **kwargs)
    hull = w.support_hull()
    if hull is None:
        report = ConditionReport(
            "PROP23",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=(Witness("reason: window is identically zero", 0.0),),
        )
        return report, RieszVerdict(False, False, NGt.measure)
    n_bad = _disjoint_translates_violation(w, a_f)
    if n_bad is not None:
        report = ConditionReport(
            "PROP23",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=(
                Witness("reason: translates overlap the support", float(n_bad)),
            ),
        )
        return report, RieszVerdict(False, False, NGt.measure)
    try:
        d = extrema_detail(Gt, exclude=NGt)
    except EmptyDomainError:
        report = ConditionReport(
            "PROP23",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=(Witness("reason: spectral power vanishes everywhere", 0.0),),
        )
        return report, RieszVerdict(False, False, NGt.measure)
    ok = _positive(d.inf, d.sup)
    riesz = ok and NGt.measure <= RIESZ_MEASURE_RTOL * Gt.period
    report = ConditionReport(
        "PROP23",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.SPAN_ONLY,
        lower_bound=d.inf / float(b_f),
        upper_bound=d.sup / float(b_f),
        witnesses=(
            Witness("spectral_power_inf", d.inf, d.inf_location),
            Witness("spectral_power_sup", d.sup, d.sup_location),
            Witness("zero_set_measure", NGt.measure),
        ),
    )
    return report, RieszVerdict(ok, riesz, NGt.measure)


def prop24_necessary(
    w: PiecewiseWindow,
    b: Rational,
    claimed_B: float,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    G_tilde: PeriodizedSamples | None = None,
) -> ConditionReport:
    """Necessary upper bound: the spectral periodization must stay below B."""
    b_f = as_fraction(b)
    if b_f <= 0:
        raise ValueError("b must be positive")
    if not claimed_B > 0:
        raise ValueError("claimed upper bound must be positive")
    Gt = G_tilde if G_tilde is not None else compute_G_tilde(w, b, resolution)
    d = extrema_detail(Gt)
    ok = d.sup <= claimed_B + UPPER_BOUND_RTOL * max(claimed_B, 1.0)
    witnesses = [
        Witness("spectral_power_sup", d.sup, d.sup_location),
        Witness("claimed_upper_bound", claimed_B),
    ]
    if not ok:
        witnesses.append(Witness("violation_location", d.sup, d.sup_location))
    return ConditionReport(
        "PROP24",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.SPAN_ONLY,
        lower_bound=None,
        upper_bound=d.sup,
        witnesses=tuple(witnesses),
    )


# -- pure translate / pure modulate systems ------------------------------------


def translates_frame_check(
    spectral_w: PiecewiseWindow,
    a: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    tol_zero: float | None = None,
) -> tuple[ConditionReport, RieszVerdict]:
    """Frame-sequence test for pure translates, from the transform-side profile."""
    a_f = as_fraction(a)
    phi = spectral_translates_power(spectral_w, a, resolution)
    kwargs = {} if tol_zero is None else {"tol_zero": tol_zero}
    N = zero_set(phi, **kwargs)
    try:
        d = extrema_detail(phi, exclude=N)
    except EmptyDomainError:
        report = ConditionReport(
            "THM12-TRANSLATES",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=(Witness("reason: spectral profile identically zero", 0.0),),
        )
        return report, RieszVerdict(False, False, N.measure)
    ok = _positive(d.inf, d.sup)
    riesz = ok and N.measure <= RIESZ_MEASURE_RTOL * phi.period
    report = ConditionReport(
        "THM12-TRANSLATES",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.SPAN_ONLY,
        lower_bound=d.inf / float(a_f),
        upper_bound=d.sup / float(a_f),
        witnesses=(
            Witness("translated_spectral_power_inf", d.inf, d.inf_location),
            Witness("translated_spectral_power_sup", d.sup, d.sup_location),
            Witness("zero_set_measure", N.measure),
        ),
    )
    return report, RieszVerdict(ok, riesz, N.measure)


def modulates_frame_check(
    w: PiecewiseWindow,
    a: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    tol_zero: float | None = None,
    G: PeriodizedSamples | None = None,
) -> tuple[ConditionReport, RieszVerdict]:
    """Frame-sequence test for pure modulations at step 1/a."""
    a_f = as_fraction(a)
    samples = G if G is not None else compute_G(w, a, resolution)
    kwargs = {} if tol_zero is None else {"tol_zero": tol_zero}
    N = zero_set(samples, **kwargs)
    try:
        d = extrema_detail(samples, exclude=N)
    except EmptyDomainError:
        report = ConditionReport(
            "COR13-MODULATES",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=(Witness("reason: window is identically zero", 0.0),),
        )
        return report, RieszVerdict(False, False, N.measure)
    ok = _positive(d.inf, d.sup)
    riesz = ok and N.measure <= RIESZ_MEASURE_RTOL * samples.period
    report = ConditionReport(
        "COR13-MODULATES",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.SPAN_ONLY,
        lower_bound=d.inf * float(a_f),
        upper_bound=d.sup * float(a_f),
        witnesses=(
            Witness("power_inf_off_zero_set", d.inf, d.inf_location),
            Witness("power_sup_off_zero_set", d.sup, d.sup_location),
            Witness("zero_set_measure", N.measure),
        ),
    )
    return report, RieszVerdict(ok, riesz, N.measure)


# -- wavelet scale-period bounds -----------------------------------------------


def _scale_list(a: Fraction, lo: Fraction, hi: Fraction) -> list[int]:
    """Integers n with [a^n, a^(n+1)) meeting the magnitude band (lo, hi)."""
    out = []
    log_a = math.log(float(a))
    n_lo = math.floor(math.log(float(lo)) / log_a) - 2
    n_hi = math.ceil(math.log(float(hi)) / log_a) + 2
    for n in range(n_lo, n_hi + 1):
        if a**n < hi and a ** (n + 1) > lo:
            out.append(n)
    return out


def _scale_branch_samples(
    w: PiecewiseWindow,
    a: Fraction,
    b: Fraction,
    sign: int,
    ks: list[int],
    resolution: int,
) -> tuple[PeriodizedSamples, PeriodizedSamples] | None:
    """Diagonal and cross-term samples over one sign branch of [1, a).

    The scale variable tau = |gamma| - 1 runs over [0, a-1); the wrap at
    tau = 0 continues scale-periodically, matching gamma -> a*gamma.
    """
    period = a - 1
    side = [(s, e) for s, e in w.support() if (s > 0 if sign > 0 else e <= 0)]
    if not side:
        return None
    if sign > 0:
        lo_m, hi_m = side[0][0], side[-1][1]
    else:
        lo_m, hi_m = -side[-1][1], -side[0][0]
    scales = _scale_list(a, lo_m, hi_m)
    if not scales:
        return None

    bounds = set(w.boundaries())
    knots: set[Fraction] = {Fraction(0)}
    shifts = [Fraction(0)] + [Fraction(k) / b for k in ks]
    for n in scales:
        denom = a**n * sign
        for s in shifts:
            for beta in bounds:
                tau = (beta - s) / denom - 1
                if 0 <= tau < period:
                    knots.add(tau)
    grid, knot_list = _build_grid(period, resolution, knots)

    diag = np.zeros_like(grid)
    cross = np.zeros_like(grid)
    n_k = len(knot_list)
    diag_l, diag_r = np.zeros(n_k), np.zeros(n_k)
    cross_l, cross_r = np.zeros(n_k), np.zeros(n_k)
    base = w if sign > 0 else w.reflect()
    for n in scales:
        m = a**n
        w_n = base.dilate(1 / m).translate(-1)
        vals_n = w_n.eval_many(grid)
        diag += vals_n**2
        lims_n = [
            (w_n.value_left(q if q > 0 else period), w_n.value_right(q))
            for q in knot_list
        ]
        for i, (l, r) in enumerate(lims_n):
            diag_l[i] += l * l
            diag_r[i] += r * r
        for k in ks:
            shifted = w.translate(-Fraction(k) / b)
            base_k = shifted if sign > 0 else shifted.reflect()
            w_nk = base_k.dilate(1 / m).translate(-1)
            cross += np.abs(vals_n * w_nk.eval_many(grid))
            for i, q in enumerate(knot_list):
                q_eff = q if q > 0 else period
                cross_l[i] += abs(lims_n[i][0] * w_nk.value_left(q_eff))
                cross_r[i] += abs(lims_n[i][1] * w_nk.value_right(q))

    from .periodization import BoundaryLimit, PeriodizedSamples as PS

    def pack(vals, left, right):
        limits = tuple(
            BoundaryLimit(float(q), float(l), float(r))
            for q, l, r in zip(knot_list, left, right)
        )
        return PS(float(period), grid, vals, limits)

    return pack(diag, diag_l, diag_r), pack(cross, cross_l, cross_r)


def theorem25_wavelet(
    spectral_w: PiecewiseWindow,
    a: Rational,
    b: Rational,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    tol_zero: float | None = None,
) -> ConditionReport:
    """Wavelet frame-sequence bounds over one multiplicative scale period.

    Both signs of the frequency variable are handled separately; the zero
    set of the diagonal scale sum is recorded per sign and excluded from
    the lower-bound infimum.
    """
    a_f, b_f = as_fraction(a), as_fraction(b)
    if a_f <= 1:
        raise ValueError("scale step a must exceed 1")
    if b_f <= 0:
        raise ValueError("b must be positive")
    sup = spectral_w.support()
    if not sup:
        return ConditionReport(
            "THM25-WAVELET",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=(Witness("reason: spectral window identically zero", 0.0),),
        )
    for s, e in sup:
        if s <= 0 <= e:
            raise SpectralSupportError(
                "spectral support touches zero; infinitely many scales contribute"
            )
    ks = contributing_ks(spectral_w, b_f)
    kwargs = {} if tol_zero is None else {"tol_zero": tol_zero}

    lower = None
    upper = None
    witnesses: list[Witness] = []
    for sign, tag in ((1, "positive"), (-1, "negative")):
        branch = _scale_branch_samples(spectral_w, a_f, b_f, sign, ks, resolution)
        if branch is None:
            witnesses.append(Witness(f"{tag}_branch_vanishes", 0.0))
            continue
        diag, cross = branch
        N = zero_set(diag, **kwargs)
        witnesses.append(Witness(f"{tag}_zero_set_measure", N.measure))
        diff = combine(diag, cross, np.subtract)
        total = combine(diag, cross, np.add)
        try:
            d_low = extrema_detail(diff, exclude=N)
        except EmptyDomainError:
            witnesses.append(Witness(f"{tag}_branch_vanishes", 0.0))
            continue
        d_high = extrema_detail(total, sup_over_full_period=True)
        loc_low = sign * (1.0 + d_low.inf_location)
        loc_high = sign * (1.0 + d_high.sup_location)
        if lower is None or d_low.inf < lower.value:
            lower = Witness("scale_margin_inf", d_low.inf, loc_low)
        if upper is None or d_high.sup > upper.value:
            upper = Witness("scale_total_sup", d_high.sup, loc_high)
    if lower is None or upper is None:
        return ConditionReport(
            "THM25-WAVELET",
            Verdict.INAPPLICABLE,
            TargetSpace.SPAN_ONLY,
            witnesses=tuple(
                witnesses
                + [Witness("reason: scale sums vanish on both branches", 0.0)]
            ),
        )
    ok = _positive(lower.value, upper.value) and math.isfinite(upper.value)
    return ConditionReport(
        "THM25-WAVELET",
        Verdict.SATISFIED if ok else Verdict.NOT_SATISFIED,
        TargetSpace.SPAN_ONLY,
        lower_bound=lower.value / float(b_f),
        upper_bound=upper.value / float(b_f),
        witnesses=tuple([lower, upper] + witnesses),
    )
