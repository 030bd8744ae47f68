"""Generalized f-divergence over finite probability vectors and its bounds.

`f_divergence` evaluates sum of q_i * f(p_i / q_i) with the usual limit
conventions at zero entries: a q_i = 0, p_i = 0 pair contributes nothing,
q_i = 0 with p_i > 0 contributes p_i times the generator's declared slope at
infinity, and p_i = 0 uses the generator's declared limit at 0+.

`divergence_bounds` turns a pair of distributions into the weighted-point
functional with points p_i / q_i and weights q_i (whose mean is exactly 1),
delegates toatom the requested bound family, and re-evaluates every bound
value through the probability-sum form of the moments

    sum_i (p_i - a q_i)^j (p_i - b q_i)^k / q_i^(j + k - 1)

as an independent transcription check; the two routes must agree to 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import bounds as _bounds
from .bounds import (
    CONCAVE,
    CONVEX,
    COR21_STRAIGHT,
    THEOREMS,
    TM21_DIRECTION,
    TM22_DIRECTION,
    TM23_STRAIGHT,
    BoundReport,
)
from .divided_diff import FunctionModel, NodeMultiset, divided_difference
from .functional import DiscreteFunctional

__all__ = [
    "ProbabilityVector",
    "RatioRange",
    "f_divergence",
    "ratio_range",
    "divergence_bounds",
    "direct_bound_values",
]

_PROB_SUM_TOL = 1e-12
_CROSSCHECK_TOL = 1e-12


@dataclass(frozen=True)
class ProbabilityVector:
    """Finite probability distribution: entries in [0, 1] summing to 1."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("probability vector must not be empty")
        for i, v in enumerate(vals):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"values[{i}] = {v} outside [0, 1]")
        total = math.fsum(vals)
        if abs(total - 1.0) > _PROB_SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, more than 1e-12 away from 1")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @classmethod
    def of(cls, values: Iterable[float]) -> "ProbabilityVector":
        return cls(tuple(values))


@dataclass(frozen=True)
class RatioRange:
    """Range of the ratios p_i / q_i; always straddles 1 for positive q.

    A degenerate range (a == b, identical distributions) is representable but
    rejected wherever a bound interval is built from it.
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        a, b = float(self.a), float(self.b)
        if not a <= b:
            raise ValueError(f"ratio range needs a <= b, got ({a}, {b})")
        if a > 1.0 + _PROB_SUM_TOL or b < 1.0 - _PROB_SUM_TOL:
            raise ValueError(f"ratio range ({a}, {b}) does not straddle 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def is_degenerate(self) -> bool:
        return not self.a < self.b


def _check_pair(p: ProbabilityVector, q: ProbabilityVector) -> None:
    if len(p) != len(q):
        raise ValueError(f"p has {len(p)} entries but q has {len(q)}")


def f_divergence(f: FunctionModel, p: ProbabilityVector, q: ProbabilityVector) -> float:
    """sum of q_i f(p_i / q_i) with limit conventions at zero entries."""
    _check_pair(p, q)
    terms = []
    for i, (pi, qi) in enumerate(zip(p, q)):
        if qi == 0.0:
            if pi == 0.0:
                continue
            if f.slope_at_infinity is None:
                raise ValueError(
                    f"entry {i}: q_i = 0 with p_i > 0 needs a declared "
                    f"slope-at-infinity limit on {f.name!r}"
                )
            terms.append(pi * f.slope_at_infinity)
        elif pi == 0.0:
            v = f.zero_limit if f.zero_limit is not None else float(f(0.0))
            if math.isnan(v):
                raise ValueError(f"entry {i}: p_i = 0 needs a declared 0+ limit on {f.name!r}")
            terms.append(qi * v)
        else:
            terms.append(qi * float(f(pi / qi)))
    return math.fsum(terms)


def ratio_range(p: ProbabilityVector, q: ProbabilityVector) -> RatioRange:
    """(min p_i/q_i, max p_i/q_i); every q_i must be positive."""
    _check_pair(p, q)
    ratios = []
    for i, (pi, qi) in enumerate(zip(p, q)):
        if qi <= 0.0:
            raise ValueError(f"entry {i}: q_i = {qi} must be positive for ratio bounds")
        ratios.append(pi / qi)
    return RatioRange(min(ratios), max(ratios))


def _pq_moment(
    p: ProbabilityVector, q: ProbabilityVector, a: float, b: float, j: int, k: int
) -> float:
    """sum_i (p_i - a q_i)^j (p_i - b q_i)^k / q_i^(j+k-1)."""
    return math.fsum(
        (pi - a * qi) ** j * (pi - b * qi) ** k / qi ** (j + k - 1)
        for pi, qi in zip(p, q)
    )


def direct_bound_values(
    f: FunctionModel,
    p: ProbabilityVector,
    q: ProbabilityVector,
    a: float,
    b: float,
    n: int,
    theorem: str,
    m: int | None = None,
    convexity: str = CONVEX,
) -> tuple[float | None, float | None]:
    """Bound sides evaluated through probability sums instead of functional moments.

    Shares the divided-difference factors with the delegated route but none of
    the moment arithmetic, so a transcription slip in either route shows up as
    disagreement.  Returns (lower, upper) arranged by the same dispatch tables.
    """
    theorem = theorem.upper()
    dd = lambda pairs: divided_difference(f, NodeMultiset(pairs))
    if theorem in ("TM21", "COR21"):
        if m is None or m < 3:
            raise ValueError(f"{theorem} requires m >= 3, got {m}")
        parts = [(1.0 - a) * (dd(((a, 2),)) - dd(((a, 1), (b, 1))))]
        for k in range(2, m):
            parts.append(float(f.deriv(k, a)) / math.factorial(k) * _pq_moment(p, q, a, b, k, 0))
        for k in range(1, n - m + 1):
            parts.append(dd(((a, m), (b, k))) * _pq_moment(p, q, a, b, m, k - 1))
        v21 = math.fsum(parts)
        if theorem == "TM21":
            direction = TM21_DIRECTION[(convexity, (n - m) % 2 == 0)]
            return (v21, None) if direction == "lower" else (None, v21)
    if theorem in ("TM22", "COR21"):
        if m is None or m < 3:
            raise ValueError(f"{theorem} requires m >= 3, got {m}")
        parts = [(b - 1.0) * (dd(((a, 1), (b, 1))) - dd(((b, 2),)))]
        for k in range(2, m):
            parts.append(float(f.deriv(k, b)) / math.factorial(k) * _pq_moment(p, q, a, b, 0, k))
        for k in range(1, n - m + 1):
            parts.append(dd(((b, m), (a, k))) * _pq_moment(p, q, a, b, k - 1, m))
        v22 = math.fsum(parts)
        if theorem == "TM22":
            direction = TM22_DIRECTION[(convexity, m % 2 == 1)]
            return (v22, None) if direction == "lower" else (None, v22)
        straight = COR21_STRAIGHT[(convexity, m % 2 == 1)]
        return (v21, v22) if straight else (v22, v21)
    if theorem == "TM23":
        v1 = math.fsum(
            dd(((a, 1), (b, k))) * _pq_moment(p, q, a, b, 1, k - 1) for k in range(2, n)
        )
        parts = [dd(((a, 2), (b, 1))) * _pq_moment(p, q, a, b, 1, 1)]
        parts += [
            dd(((a, 2), (b, k))) * _pq_moment(p, q, a, b, 2, k - 1) for k in range(2, n - 1)
        ]
        v2 = math.fsum(parts)
        straight = TM23_STRAIGHT[(convexity, n % 2 == 1)]
        return (v1, v2) if straight else (v2, v1)
    if theorem == "TM24":
        parts = [dd(((b, 2), (a, 1))) * _pq_moment(p, q, a, b, 1, 1)]
        parts += [
            dd(((b, 2), (a, k))) * _pq_moment(p, q, a, b, k - 1, 2) for k in range(2, n - 1)
        ]
        v2 = math.fsum(parts)
        v1 = math.fsum(
            dd(((b, 1), (a, k))) * _pq_moment(p, q, a, b, k - 1, 1) for k in range(2, n)
        )
        return (v2, v1) if convexity == CONVEX else (v1, v2)
    raise ValueError(f"unknown theorem tag {theorem!r}; choose from {THEOREMS}")


def divergence_bounds(
    f: FunctionModel,
    p: ProbabilityVector,
    q: ProbabilityVector,
    *,
    n: int,
    theorem: str,
    m: int | None = None,
    convexity: str,
    interval: tuple[float, float] | None = None,
) -> BoundReport:
    """Bound report for the chord gap of the ratio functional.

    The functional has points p_i / q_i, weights q_i and mean exactly 1, so
    the reported `lr` equals f_divergence(f, p, q) minus the chord of f
    through (a, f(a)), (b, f(b)) evaluated at 1.  `interval` may widen the
    enclosing [a, b] (it must contain every ratio); identical distributions
    produce a degenerate range and require it.
    """
    _check_pair(p, q)
    theorem = theorem.upper()
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem tag {theorem!r}; choose from {THEOREMS}")
    rr = ratio_range(p, q)
    if interval is None:
        a, b = rr.a, rr.b
    else:
        a, b = float(interval[0]), float(interval[1])
        if a > rr.a or b < rr.b:
            raise ValueError(
                f"interval [{a}, {b}] does not contain the ratio range [{rr.a}, {rr.b}]"
            )
    if not a < b:
        raise ValueError(
            f"degenerate ratio interval [{a}, {b}]; supply a wider enclosing interval"
        )
    A = DiscreteFunctional(
        points=tuple(pi / qi for pi, qi in zip(p, q)),
        weights=q.values,
        interval=(a, b),
    )
    if theorem == "TM21":
        report = _bounds.bound_tm21(f, A, n, m, convexity)
    elif theorem == "TM22":
        report = _bounds.bound_tm22(f, A, n, m, convexity)
    elif theorem == "COR21":
        report = _bounds.bracket_cor21(f, A, n, m, convexity)
    elif theorem == "TM23":
        report = _bounds.bracket_tm23(f, A, n, convexity)
    else:
        report = _bounds.bracket_tm24(f, A, n, convexity)
    direct = direct_bound_values(f, p, q, a, b, n=n, m=m, theorem=theorem, convexity=convexity)
    for side, delegated, direct_v in zip(("lower", "upper"), (report.lower, report.upper), direct):
        if (delegated is None) != (direct_v is None):
            raise RuntimeError(f"{theorem} {side}: delegated and direct sides disagree in shape")
        if delegated is not None and abs(delegated - direct_v) > _CROSSCHECK_TOL:
            raise RuntimeError(
                f"{theorem} {side}: delegated value {delegated!r} and direct value "
                f"{direct_v!r} differ by more than {_CROSSCHECK_TOL}"
            )
    return report
