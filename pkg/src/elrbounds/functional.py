"""Discrete positive normalized linear functionals and the chord-gap value.

A `DiscreteFunctional` is a weighted point set: nonnegative weights summing
to one and points inside a stored closed interval [a, b].  It realizes a
positive linear functional A with A(1) = 1 applied to point values.
`lr_difference` evaluates A(f(g)) minus the chord of f through (a, f(a)) and
(b, f(b)) taken at A(g) - the quantity every bound in this package brackets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .divided_diff import FunctionModel

__all__ = ["DiscreteFunctional", "lr_difference"]

_WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class DiscreteFunctional:
    """Points x_i in [a, b] with nonnegative weights w_i, sum w_i = 1.

    The interval is stored, not inferred: the bounds depend on the chosen
    enclosing [a, b], which may be strictly wider than the point range.
    Weight sums within 1e-12 of one are renormalized exactly; zero-weight
    points are kept.
    """

    points: tuple[float, ...]
    weights: tuple[float, ...]
    interval: tuple[float, float]

    def __post_init__(self) -> None:
        pts = tuple(float(x) for x in self.points)
        wts = tuple(float(w) for w in self.weights)
        if len(pts) != len(wts) or not pts:
            raise ValueError(
                f"points ({len(pts)}) and weights ({len(wts)}) must have equal length >= 1"
            )
        a, b = (float(self.interval[0]), float(self.interval[1]))
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"interval must be finite with a < b, got [{a}, {b}]")
        for i, w in enumerate(wts):
            if not w >= 0.0:
                raise ValueError(f"weights[{i}] = {w} is negative")
        total = math.fsum(wts)
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError(f"weights sum to {total!r}, more than 1e-12 away from 1")
        if total != 1.0:
            wts = tuple(w / total for w in wts)
        for i, x in enumerate(pts):
            if x < a or x > b:
                raise ValueError(f"points[{i}] = {x} outside interval [{a}, {b}]")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)
        object.__setattr__(self, "interval", (a, b))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def mean(self) -> float:
        """A(g) = sum of w_i x_i."""
        return math.fsum(w * x for w, x in zip(self.weights, self.points))

    def apply(self, h: Callable[[float], float]) -> float:
        """A(h(g)) = sum of w_i h(x_i)."""
        return math.fsum(w * float(h(x)) for w, x in zip(self.weights, self.points))

    def moment(self, j: int, k: int) -> float:
        """A[(g - a)^j (g - b)^k] for the stored interval endpoints."""
        if j < 0 or k < 0:
            raise ValueError(f"moment orders must be nonnegative, got ({j}, {k})")
        a, b = self.interval
        return math.fsum(
            w * (x - a) ** j * (x - b) ** k for w, x in zip(self.weights, self.points)
        )

    def to_dict(self) -> dict:
        return {
            "points": list(self.points),
            "weights": list(self.weights),
            "interval": list(self.interval),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DiscreteFunctional":
        try:
            return cls(
                points=tuple(data["points"]),
                weights=tuple(data["weights"]),
                interval=(data["interval"][0], data["interval"][1]),
            )
        except (KeyError, IndexError, TypeError) as exc:
            raise ValueError(f"functional JSON needs points/weights/interval: {exc}") from exc


def lr_difference(f: FunctionModel, A: DiscreteFunctional) -> float:
    """A(f(g)) - ((b - A(g)) f(a) + (A(g) - a) f(b)) / (b - a).

    Nonpositive whenever f is convex (the chord lies above the function).
    """
    a, b = A.interval
    lo, hi = f.domain
    if a < lo or b > hi:
        raise ValueError(
            f"functional interval [{a}, {b}] not contained in domain [{lo}, {hi}] of {f.name!r}"
        )
    mean = A.mean
    return (
        A.apply(f)
        - (b - mean) / (b - a) * float(f(a))
        - (mean - a) / (b - a) * float(f(b))
    )
