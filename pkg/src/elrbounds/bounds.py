"""Chord-gap decompositions and directional bounds for n-convex functions.

Two exact decomposition families split the chord gap LR(f, g, a, b, A) into
endpoint divided-difference terms plus a remainder: `decompose_lemma21`
anchors the node block at the left endpoint a (remainder weight
(g-a)^m (g-b)^(n-m)), `decompose_lemma22` mirrors it at b (remainder weight
(g-b)^m (g-a)^(n-m)).  Dropping the remainder and reading off its sign from
the parity of the exponents and the n-convexity class of f turns each
identity into a certified one-sided bound; combining the m = 1 and m = 2
cases of either family yields a two-sided bracket.

Bound families carry the tags TM21, TM22 (one-sided, m >= 3), COR21 (bracket
from TM21 + TM22, odd n) and TM23, TM24 (brackets from the m = 1, 2 cases).
Every divided difference is computed by the confluent table; no closed forms
are hard-coded.  Convexity classification is an input - certification lives
in the oracle module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .divided_diff import FunctionModel, NodeMultiset, divided_difference, remainder_R, remainder_Rstar
from .functional import DiscreteFunctional, lr_difference

__all__ = [
    "CONVEX",
    "CONCAVE",
    "THEOREMS",
    "ParityCase",
    "BoundReport",
    "decompose_lemma21",
    "decompose_lemma22",
    "bound_tm21",
    "bound_tm22",
    "bracket_cor21",
    "bracket_tm23",
    "bracket_tm24",
    "n3_closed_form",
    "TM21_DIRECTION",
    "TM22_DIRECTION",
    "TM23_STRAIGHT",
    "COR21_STRAIGHT",
]

CONVEX = "n-convex"
CONCAVE = "n-concave"

THEOREMS = ("TM21", "TM22", "COR21", "TM23", "TM24")

# Direction dispatch, encoded once and unit-tested against the statements.
# TM21 keys on whether n and m share parity, TM22 on whether m is odd.
TM21_DIRECTION = {
    (CONVEX, False): "upper",
    (CONVEX, True): "lower",
    (CONCAVE, True): "upper",
    (CONCAVE, False): "lower",
}
TM22_DIRECTION = {
    (CONVEX, True): "upper",
    (CONVEX, False): "lower",
    (CONCAVE, False): "upper",
    (CONCAVE, True): "lower",
}
# TM23 keys on whether n is odd; True means the m=1 sum is the lower side and
# the m=2 sum the upper side.  COR21 keys on whether m is odd; True means the
# TM21 expression is the lower side and the TM22 expression the upper side.
TM23_STRAIGHT = {
    (CONVEX, True): True,
    (CONCAVE, False): True,
    (CONVEX, False): False,
    (CONCAVE, True): False,
}
COR21_STRAIGHT = {
    (CONVEX, True): True,
    (CONCAVE, False): True,
    (CONVEX, False): False,
    (CONCAVE, True): False,
}


@dataclass(frozen=True)
class ParityCase:
    """The (n, m, convexity class) triple a bound direction is dispatched on."""

    n: int
    m: int | None
    convexity: str

    def __post_init__(self) -> None:
        if int(self.n) < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if self.m is not None:
            if not 1 <= int(self.m) <= self.n - 1:
                raise ValueError(f"m must be in 1..{self.n - 1}, got {self.m}")
            object.__setattr__(self, "m", int(self.m))
        _check_convexity(self.convexity)


@dataclass(frozen=True)
class BoundReport:
    """Chord-gap value with its certified side(s).

    `direction_valid` is False when the requested case falls outside the
    parity hypotheses (the values are still reported).
    """

    lr: float
    lower: float | None
    upper: float | None
    theorem: str
    case: ParityCase
    direction_valid: bool

    def contains(self, rel_tol: float = 1e-9) -> bool:
        """lower <= lr <= upper up to rel_tol * (1 + |lr|), missing sides ignored."""
        tol = rel_tol * (1.0 + abs(self.lr))
        if self.lower is not None and self.lr < self.lower - tol:
            return False
        if self.upper is not None and self.lr > self.upper + tol:
            return False
        return True

    def violation(self) -> float:
        """Largest amount by which lr escapes the certified side(s); 0 if contained."""
        v = 0.0
        if self.lower is not None:
            v = max(v, self.lower - self.lr)
        if self.upper is not None:
            v = max(v, self.lr - self.upper)
        return v

    def to_dict(self) -> dict:
        return {
            "lr": self.lr,
            "lower": self.lower,
            "upper": self.upper,
            "theorem": self.theorem,
            "n": self.case.n,
            "m": self.case.m,
            "convexity": self.case.convexity,
            "direction_valid": self.direction_valid,
        }


def _check_convexity(convexity: str) -> None:
    if convexity not in (CONVEX, CONCAVE):
        raise ValueError(f"convexity must be {CONVEX!r} or {CONCAVE!r}, got {convexity!r}")


def _check_case(n: int, m: int) -> None:
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    if int(m) != m or not 1 <= m <= n - 1:
        raise ValueError(f"m must be an integer in 1..{n - 1}, got {m}")


def decompose_lemma21(
    f: FunctionModel, A: DiscreteFunctional, n: int, m: int
) -> tuple[list[float], float]:
    """Split LR(f, A) into left-anchored terms plus the exact remainder.

    m = 1:  terms f[a; b x k] * A[(g-a)(g-b)^(k-1)], k = 2..n-1.
    m = 2:  f[a,a; b] * A[(g-a)(g-b)] then f[a,a; b x k] * A[(g-a)^2 (g-b)^(k-1)].
    m >= 3: (A(g)-a)(f[a,a] - f[a,b]), then f^(k)(a)/k! * A[(g-a)^k] for
            k = 2..m-1, then f[a x m; b x k] * A[(g-a)^m (g-b)^(k-1)].

    The terms plus `A(R_m(g))` reproduce lr_difference exactly (up to rounding).
    """
    _check_case(n, m)
    a, b = A.interval
    terms: list[float] = []
    if m == 1:
        for k in range(2, n):
            c = divided_difference(f, NodeMultiset(((a, 1), (b, k))))
            terms.append(c * A.moment(1, k - 1))
    elif m == 2:
        terms.append(divided_difference(f, NodeMultiset(((a, 2), (b, 1)))) * A.moment(1, 1))
        for k in range(2, n - 1):
            c = divided_difference(f, NodeMultiset(((a, 2), (b, k))))
            terms.append(c * A.moment(2, k - 1))
    else:
        f_aa = divided_difference(f, NodeMultiset(((a, 2),)))
        f_ab = divided_difference(f, NodeMultiset(((a, 1), (b, 1))))
        terms.append((A.mean - a) * (f_aa - f_ab))
        for k in range(2, m):
            terms.append(float(f.deriv(k, a)) / math.factorial(k) * A.moment(k, 0))
        for k in range(1, n - m + 1):
            c = divided_difference(f, NodeMultiset(((a, m), (b, k))))
            terms.append(c * A.moment(m, k - 1))
    remainder = A.apply(lambda t: remainder_R(f, a, b, m, n, t))
    return terms, remainder


def decompose_lemma22(
    f: FunctionModel, A: DiscreteFunctional, n: int, m: int
) -> tuple[list[float], float]:
    """Mirror of decompose_lemma21 with the node block anchored at b.

    m = 1:  terms f[b; a x k] * A[(g-b)(g-a)^(k-1)], k = 2..n-1.
    m = 2:  f[b,b; a] * A[(g-b)(g-a)] then f[b,b; a x k] * A[(g-b)^2 (g-a)^(k-1)].
    m >= 3: (b-A(g))(f[a,b] - f[b,b]), then f^(k)(b)/k! * A[(g-b)^k], then
            f[b x m; a x k] * A[(g-b)^m (g-a)^(k-1)].
    """
    _check_case(n, m)
    a, b = A.interval
    terms: list[float] = []
    if m == 1:
        for k in range(2, n):
            c = divided_difference(f, NodeMultiset(((b, 1), (a, k))))
            terms.append(c * A.moment(k - 1, 1))
    elif m == 2:
        terms.append(divided_difference(f, NodeMultiset(((b, 2), (a, 1)))) * A.moment(1, 1))
        for k in range(2, n - 1):
            c = divided_difference(f, NodeMultiset(((b, 2), (a, k))))
            terms.append(c * A.moment(k - 1, 2))
    else:
        f_bb = divided_difference(f, NodeMultiset(((b, 2),)))
        f_ab = divided_difference(f, NodeMultiset(((a, 1), (b, 1))))
        terms.append((b - A.mean) * (f_ab - f_bb))
        for k in range(2, m):
            terms.append(float(f.deriv(k, b)) / math.factorial(k) * A.moment(0, k))
        for k in range(1, n - m + 1):
            c = divided_difference(f, NodeMultiset(((b, m), (a, k))))
            terms.append(c * A.moment(k - 1, m))
    remainder = A.apply(lambda t: remainder_Rstar(f, a, b, m, n, t))
    return terms, remainder


def bound_tm21(
    f: FunctionModel, A: DiscreteFunctional, n: int, m: int, convexity: str
) -> BoundReport:
    """One-sided bound from the left-anchored decomposition, m >= 3.

    Upper bound on LR when (n-convex and n, m of different parity) or
    (n-concave and equal parity); lower bound in the two remaining cases.
    """
    _check_convexity(convexity)
    if m < 3:
        raise ValueError(f"TM21 requires m >= 3, got m={m}")
    terms, _ = decompose_lemma21(f, A, n, m)
    value = math.fsum(terms)
    direction = TM21_DIRECTION[(convexity, (n - m) % 2 == 0)]
    lower, upper = (value, None) if direction == "lower" else (None, value)
    return BoundReport(
        lr=lr_difference(f, A),
        lower=lower,
        upper=upper,
        theorem="TM21",
        case=ParityCase(n, m, convexity),
        direction_valid=True,
    )


def bound_tm22(
    f: FunctionModel, A: DiscreteFunctional, n: int, m: int, convexity: str
) -> BoundReport:
    """One-sided bound from the right-anchored decomposition, m >= 3.

    Upper bound on LR when (n-convex and m odd) or (n-concave and m even);
    lower bound otherwise.  No condition on the parity of n.
    """
    _check_convexity(convexity)
    if m < 3:
        raise ValueError(f"TM22 requires m >= 3, got m={m}")
    terms, _ = decompose_lemma22(f, A, n, m)
    value = math.fsum(terms)
    direction = TM22_DIRECTION[(convexity, m % 2 == 1)]
    lower, upper = (value, None) if direction == "lower" else (None, value)
    return BoundReport(
        lr=lr_difference(f, A),
        lower=lower,
        upper=upper,
        theorem="TM22",
        case=ParityCase(n, m, convexity),
        direction_valid=True,
    )


def bracket_cor21(
    f: FunctionModel, A: DiscreteFunctional, n: int, m: int, convexity: str
) -> BoundReport:
    """Two-sided bracket pairing the TM21 and TM22 expressions; needs n odd.

    For n-convex f with m odd (or n-concave with m even) the TM21 value is the
    lower side and the TM22 value the upper side; the remaining cases swap the
    sides.  With n even no bracket is certified: direction_valid is False and
    the sides are reported in the n-convex/m-odd arrangement.
    """
    _check_convexity(convexity)
    if m < 3:
        raise ValueError(f"COR21 requires m >= 3, got m={m}")
    terms21, _ = decompose_lemma21(f, A, n, m)
    terms22, _ = decompose_lemma22(f, A, n, m)
    v21 = math.fsum(terms21)
    v22 = math.fsum(terms22)
    straight = COR21_STRAIGHT[(convexity, m % 2 == 1)]
    lower, upper = (v21, v22) if straight else (v22, v21)
    return BoundReport(
        lr=lr_difference(f, A),
        lower=lower,
        upper=upper,
        theorem="COR21",
        case=ParityCase(n, m, convexity),
        direction_valid=n % 2 == 1,
    )


def bracket_tm23(f: FunctionModel, A: DiscreteFunctional, n: int, convexity: str) -> BoundReport:
    """Two-sided bracket from the m = 1 and m = 2 left-anchored term sums.

    For n-convex f with n odd (or n-concave with n even) the m = 1 sum bounds
    LR from below and the m = 2 sum from above; otherwise the sides swap.
    """
    _check_convexity(convexity)
    if n < 3:
        raise ValueError(f"TM23 requires n >= 3, got n={n}")
    v1 = math.fsum(decompose_lemma21(f, A, n, 1)[0])
    v2 = math.fsum(decompose_lemma21(f, A, n, 2)[0])
    straight = TM23_STRAIGHT[(convexity, n % 2 == 1)]
    lower, upper = (v1, v2) if straight else (v2, v1)
    return BoundReport(
        lr=lr_difference(f, A),
        lower=lower,
        upper=upper,
        theorem="TM23",
        case=ParityCase(n, None, convexity),
        direction_valid=True,
    )


def bracket_tm24(f: FunctionModel, A: DiscreteFunctional, n: int, convexity: str) -> BoundReport:
    """Two-sided bracket from the m = 2 and m = 1 right-anchored term sums.

    Valid for every n: n-convex f satisfies m2-sum <= LR <= m1-sum, and
    n-concave f the reverse.  The m = 1 sum starts at k = 2; the k = 1 term
    would break the polynomial-equality property (see tests).
    """
    _check_convexity(convexity)
    if n < 3:
        raise ValueError(f"TM24 requires n >= 3, got n={n}")
    v1 = math.fsum(decompose_lemma22(f, A, n, 1)[0])
    v2 = math.fsum(decompose_lemma22(f, A, n, 2)[0])
    lower, upper = (v2, v1) if convexity == CONVEX else (v1, v2)
    return BoundReport(
        lr=lr_difference(f, A),
        lower=lower,
        upper=upper,
        theorem="TM24",
        case=ParityCase(n, None, convexity),
        direction_valid=True,
    )


def n3_closed_form(f: FunctionModel, A: DiscreteFunctional) -> tuple[float, float]:
    """Order-3 bracket with the lower side in closed form.

    Lower: A[(g-a)(g-b)] / (b-a) * (f'(b) - f[a, b]), which equals
    f[a; b, b] * A[(g-a)(g-b)].  Upper: the algorithmic f[a,a; b] term,
    identical to the TM23 upper side at n = 3.
    """
    a, b = A.interval
    f_ab = divided_difference(f, NodeMultiset(((a, 1), (b, 1))))
    lower = A.moment(1, 1) / (b - a) * (float(f.deriv(1, b)) - f_ab)
    upper = divided_difference(f, NodeMultiset(((a, 2), (b, 1)))) * A.moment(1, 1)
    return lower, upper
