"""Exact piecewise-algebraic windows on half-open intervals.

A window is a finite list of pieces, each a polynomial or the square root
of a quadratic, living on a half-open interval [lo, hi).  Interval
endpoints and coefficients are kept as exact rationals so that
translation, support arithmetic and L2 norms are exact; sampling uses
cached float coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Union[int, float, str, Fraction]


class WindowSpecError(ValueError):
    """Invalid window description.  ``code`` is a stable diagnostic tag."""

    code = "invalid-window"


class PieceOverlapError(WindowSpecError):
    code = "overlap-of-pieces"


class NegativeRadicandError(WindowSpecError):
    code = "negative-radicand"


class UnboundedSupportError(WindowSpecError):
    code = "unbounded-support"


class MalformedNumberError(WindowSpecError):
    code = "malformed-number"


def as_fraction(x: Rational) -> Fraction:
    """Exact rational from int/float/Fraction, or a decimal/ratio string."""
    try:
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, float):
            if not math.isfinite(x):
                raise UnboundedSupportError(f"non-finite number {x!r}")
            return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedNumberError(f"cannot parse number {x!r}") from exc
    raise MalformedNumberError(f"cannot parse number {x!r}")


def _poly_eval_exact(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_shift(coeffs: Sequence[Fraction], t: Fraction) -> tuple[Fraction, ...]:
    """Coefficients of p(x - t) given those of p(x), exact."""
    n = len(coeffs)
    out = [Fraction(0)] * n
    for i, c in enumerate(coeffs):
        # c * (x - t)^i expanded by the binomial theorem
        for j in range(i + 1):
            out[j] += c * math.comb(i, j) * (-t) ** (i - j)
    return tuple(out)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs) if cs else (Fraction(0),)


@dataclass(frozen=True)
class Polynomial:
    """p(x) = sum coeffs[i] * x**i, in the absolute coordinate."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def make(cls, coeffs: Iterable[Rational]) -> "Polynomial":
        return cls(_trim([as_fraction(c) for c in coeffs]))

    def shifted(self, t: Fraction) -> "Polynomial":
        return Polynomial(_poly_shift(self.coeffs, t))

    def value_exact(self, x: Fraction) -> Fraction:
        return _poly_eval_exact(self.coeffs, x)

    def values(self, xs: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = acc * xs + float(c)
        return acc

    def squared_coeffs(self) -> tuple[Fraction, ...]:
        n = len(self.coeffs)
        out = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(self.coeffs):
                out[i + j] += a * b
        return _trim(out)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class SqrtPolynomial:
    """sqrt(q(x)) for a quadratic radicand q; q must be >= 0 on the piece."""

    coeffs: tuple[Fraction, ...]  # radicand, ascending, degree <= 2

    @classmethod
    def make(cls, coeffs: Iterable[Rational]) -> "SqrtPolynomial":
        cs = _trim([as_fraction(c) for c in coeffs])
        if len(cs) > 3:
            raise WindowSpecError("sqrtpoly radicand must have degree <= 2")
        return cls(cs)

    def shifted(self, t: Fraction) -> "SqrtPolynomial":
        return SqrtPolynomial(_poly_shift(self.coeffs, t))

    def radicand_exact(self, x: Fraction) -> Fraction:
        return _poly_eval_exact(self.coeffs, x)

    def value_exact(self, x: Fraction) -> float:
        r = self.radicand_exact(x)
        return math.sqrt(r) if r > 0 else 0.0

    def values(self, xs: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = acc * xs + float(c)
        return np.sqrt(np.clip(acc, 0.0, None))

    def squared_coeffs(self) -> tuple[Fraction, ...]:
        return self.coeffs

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


PieceKind = Union[Polynomial, SqrtPolynomial]


@dataclass(frozen=True)
class Piece:
    lo: Fraction
    hi: Fraction
    kind: PieceKind

    @classmethod
    def make(cls, lo: Rational, hi: Rational, kind: PieceKind) -> "Piece":
        lo_f, hi_f = as_fraction(lo), as_fraction(hi)
        if hi_f <= lo_f:
            raise WindowSpecError(f"piece interval [{lo_f}, {hi_f}) is empty")
        piece = cls(lo_f, hi_f, kind)
        if isinstance(kind, SqrtPolynomial):
            piece._check_radicand()
        return piece

    def _check_radicand(self) -> None:
        q = self.kind.coeffs
        for x in (self.lo, self.hi):
            if _poly_eval_exact(q, x) < 0:
                raise NegativeRadicandError(
                    f"radicand negative at x={float(x)} on [{self.lo}, {self.hi})"
                )
        # A downward or linear radicand is smallest at the endpoints; only an
        # upward parabola can dip below zero strictly inside the interval.
        if len(q) == 3 and q[2] > 0:
            vertex = -q[1] / (2 * q[2])
            if self.lo < vertex < self.hi and _poly_eval_exact(q, vertex) < 0:
                raise NegativeRadicandError(
                    f"radicand negative at x={float(vertex)} on "
                    f"[{self.lo}, {self.hi})"
                )

    def shifted(self, t: Fraction) -> "Piece":
        return Piece(self.lo + t, self.hi + t, self.kind.shifted(t))

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x < self.hi


@dataclass(frozen=True)
class Lattice:
    """Translation step a and modulation step b of a Gabor system."""

    a: Fraction
    b: Fraction

    @classmethod
    def make(cls, a: Rational, b: Rational) -> "Lattice":
        a_f, b_f = as_fraction(a), as_fraction(b)
        if a_f <= 0 or b_f <= 0:
            raise ValueError("lattice steps must be positive")
        return cls(a_f, b_f)


class PiecewiseWindow:
    """A compactly supported function given by disjoint algebraic pieces."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[Piece]):
        ps = sorted(pieces, key=lambda p: p.lo)
        for prev, nxt in zip(ps, ps[1:]):
            if nxt.lo < prev.hi:
                raise PieceOverlapError(
                    f"pieces [{prev.lo}, {prev.hi}) and [{nxt.lo}, {nxt.hi}) overlap"
                )
        self.pieces = tuple(ps)

    def __eq__(self, other) -> bool:
        return isinstance(other, PiecewiseWindow) and self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        return f"PiecewiseWindow({list(self.pieces)!r})"

    @property
    def is_zero(self) -> bool:
        return all(p.kind.is_zero for p in self.pieces)

    # -- evaluation ------------------------------------------------------

    def eval(self, x: float) -> float:
        for p in self.pieces:
            if float(p.lo) <= x < float(p.hi):
                if isinstance(p.kind, Polynomial):
                    acc = 0.0
                    for c in reversed(p.kind.coeffs):
                        acc = acc * x + float(c)
                    return acc
                r = 0.0
                for c in reversed(p.kind.coeffs):
                    r = r * x + float(c)
                return math.sqrt(r) if r > 0 else 0.0
        return 0.0

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        out = np.zeros_like(xs)
        for p in self.pieces:
            mask = (xs >= float(p.lo)) & (xs < float(p.hi))
            if mask.any():
                out[mask] = p.kind.values(xs[mask])
        return out

    def value_right(self, x: Fraction) -> float:
        """Value as the limit from above (the plain value, intervals half-open)."""
        for p in self.pieces:
            if p.lo <= x < p.hi:
                return float(p.kind.value_exact(x))
        return 0.0

    def value_left(self, x: Fraction) -> float:
        """Limit from below at x, exact at piece boundaries."""
        for p in self.pieces:
            if p.lo < x <= p.hi:
                return float(p.kind.value_exact(x))
        return 0.0

    # -- structure -------------------------------------------------------

    def translate(self, t: Rational) -> "PiecewiseWindow":
        t_f = as_fraction(t)
        return PiecewiseWindow(p.shifted(t_f) for p in self.pieces)

    def dilate(self, s: Rational) -> "PiecewiseWindow":
        """Window x -> self(x/s) for s > 0; intervals and coefficients exact."""
        s_f = as_fraction(s)
        if s_f <= 0:
            raise ValueError("dilation factor must be positive")
        pieces = []
        for p in self.pieces:
            coeffs = tuple(c / s_f**i for i, c in enumerate(p.kind.coeffs))
            kind = type(p.kind)(coeffs)
            pieces.append(Piece(p.lo * s_f, p.hi * s_f, kind))
        return PiecewiseWindow(pieces)

    def reflect(self) -> "PiecewiseWindow":
        """Window x -> self(-x).

        Intervals stay half-open on the left, so the two endpoint values of
        each piece swap sides; that touches a measure-zero set only and all
        one-sided limits stay exact.
        """
        pieces = []
        for p in self.pieces:
            coeffs = tuple(c * (-1) ** i for i, c in enumerate(p.kind.coeffs))
            kind = type(p.kind)(coeffs)
            pieces.append(Piece(-p.hi, -p.lo, kind))
        return PiecewiseWindow(pieces)

    def boundaries(self) -> list[Fraction]:
        bounds: set[Fraction] = set()
        for p in self.pieces:
            bounds.add(p.lo)
            bounds.add(p.hi)
        return sorted(bounds)

    def support(self) -> list[tuple[Fraction, Fraction]]:
        """Minimal sorted disjoint half-open intervals carrying the window."""
        intervals: list[tuple[Fraction, Fraction]] = []
        for p in self.pieces:
            if p.kind.is_zero:
                continue
            if intervals and intervals[-1][1] == p.lo:
                intervals[-1] = (intervals[-1][0], p.hi)
            else:
                intervals.append((p.lo, p.hi))
        return intervals

    def support_hull(self) -> tuple[Fraction, Fraction] | None:
        sup = self.support()
        if not sup:
            return None
        return (sup[0][0], sup[-1][1])

    def l2_norm_sq(self) -> float:
        total = Fraction(0)
        for p in self.pieces:
            sq = p.kind.squared_coeffs()
            anti = [c / (i + 1) for i, c in enumerate(sq)]
            hi_val = _poly_eval_exact([Fraction(0)] + anti, p.hi)
            lo_val = _poly_eval_exact([Fraction(0)] + anti, p.lo)
            total += hi_val - lo_val
        return float(total)


def intersect_intervals(
    xs: Sequence[tuple[Fraction, Fraction]],
    ys: Sequence[tuple[Fraction, Fraction]],
) -> list[tuple[Fraction, Fraction]]:
    """Intersection of two sorted disjoint half-open interval lists, exact."""
    out: list[tuple[Fraction, Fraction]] = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        lo = max(xs[i][0], ys[j][0])
        hi = min(xs[i][1], ys[j][1])
        if lo < hi:
            out.append((lo, hi))
        if xs[i][1] <= ys[j][1]:
            i += 1
        else:
            j += 1
    return out


def shift_intervals(
    xs: Sequence[tuple[Fraction, Fraction]], t: Fraction
) -> list[tuple[Fraction, Fraction]]:
    return [(lo + t, hi + t) for lo, hi in xs]


# -- structured-text window description --------------------------------------

_KIND_TAGS = {"poly": Polynomial, "sqrtpoly": SqrtPolynomial}


def window_from_dict(spec: dict) -> PiecewiseWindow:
    """Build a window from the documented piece-list mapping.

    Expected shape::

        {"pieces": [{"interval": [lo, hi], "kind": "poly", "coeffs": [c0, ...]}]}

    Numbers may be given as ints, floats, or strings ("0.3", "10/3") for
    exact rationals.  Intervals are half-open.
    """
    if not isinstance(spec, dict) or "pieces" not in spec:
        raise WindowSpecError("window description must be a mapping with 'pieces'")
    entries = spec["pieces"]
    if not isinstance(entries, list):
        raise WindowSpecError("'pieces' must be a list")
    pieces = []
    for idx, entry in enumerate(entries):
        where = f"piece #{idx}"
        if not isinstance(entry, dict):
            raise WindowSpecError(f"{where}: not a mapping")
        try:
            interval = entry["interval"]
            kind_tag = entry["kind"]
            coeffs = entry["coeffs"]
        except KeyError as exc:
            raise WindowSpecError(f"{where}: missing field {exc}") from exc
        if kind_tag not in _KIND_TAGS:
            raise WindowSpecError(f"{where}: unknown kind {kind_tag!r}")
        if not isinstance(interval, (list, tuple)) or len(interval) != 2:
            raise WindowSpecError(f"{where}: interval must be [lo, hi]")
        try:
            lo, hi = as_fraction(interval[0]), as_fraction(interval[1])
            kind = _KIND_TAGS[kind_tag].make(coeffs)
        except WindowSpecError as exc:
            raise type(exc)(f"{where}: {exc}") from exc
        try:
            pieces.append(Piece.make(lo, hi, kind))
        except WindowSpecError as exc:
            raise type(exc)(f"{where}: {exc}") from exc
    try:
        return PiecewiseWindow(pieces)
    except PieceOverlapError as exc:
        raise PieceOverlapError(str(exc)) from exc


def _num_out(q: Fraction):
    f = float(q)
    return f if Fraction(f) == q else f"{q.numerator}/{q.denominator}"


def window_to_dict(w: PiecewiseWindow) -> dict:
    """Inverse of :func:`window_from_dict`; exact values round-trip."""
    pieces = []
    for p in w.pieces:
        tag = "poly" if isinstance(p.kind, Polynomial) else "sqrtpoly"
        pieces.append(
            {
                "interval": [_num_out(p.lo), _num_out(p.hi)],
                "kind": tag,
                "coeffs": [_num_out(c) for c in p.kind.coeffs],
            }
        )
    return {"pieces": pieces}


def poly_window(*segments: tuple[Rational, Rational, Iterable[Rational]]) -> PiecewiseWindow:
    """Convenience builder: poly_window((lo, hi, coeffs), ...)."""
    return PiecewiseWindow(
        Piece.make(lo, hi, Polynomial.make(cs)) for lo, hi, cs in segments
    )
