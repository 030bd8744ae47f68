"""Built-in divergence generators with analytic derivative stacks.

Four named generators cover the classical divergences:

  kl         t*log(t)            even orders convex, odd orders concave
  hellinger  (1 - sqrt(t))^2 / 2 even orders convex, odd orders concave
  harmonic   2t / (1 + t)        odd orders convex, even orders concave (t > -1)
  jeffreys   (t - 1)*log(t)      even orders convex, odd orders concave

`exp`, `poly` and `power` are included as test fodder for arbitrary orders.
Derivatives are closed forms; the stack is capped at order 12, past which
double precision gives the formulas little meaning.  `classify` reads the
n-convexity class off the sign of the n-th derivative sampled on an even
grid over the declared domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .bounds import CONCAVE, CONVEX
from .divided_diff import FunctionModel

__all__ = [
    "INDEFINITE",
    "BUILTIN_NAMES",
    "GeneratorSpec",
    "make_generator",
    "classify",
    "parse_function_spec",
]

INDEFINITE = "indefinite"

BUILTIN_NAMES = ("kl", "hellinger", "harmonic", "jeffreys", "exp", "poly", "power")

_DERIV_CAP = 12
_CLASSIFY_GRID = 101


@dataclass(frozen=True)
class GeneratorSpec:
    """Name plus parameters plus the closed interval the generator lives on.

    `coeffs` is used by `poly` (ascending powers), `exponent` by `power`.
    """

    name: str
    domain: tuple[float, float] = (0.5, 2.0)
    coeffs: tuple[float, ...] = ()
    exponent: float = 2.0

    def __post_init__(self) -> None:
        if self.name not in BUILTIN_NAMES:
            raise ValueError(f"unknown generator {self.name!r}; choose from {BUILTIN_NAMES}")
        a, b = float(self.domain[0]), float(self.domain[1])
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"domain must be finite with a < b, got [{a}, {b}]")
        if self.name in ("kl", "hellinger", "jeffreys", "power") and not a > 0:
            raise ValueError(f"{self.name} requires a domain inside (0, inf), got [{a}, {b}]")
        if self.name == "harmonic" and not a > -1:
            raise ValueError(f"harmonic requires a domain inside (-1, inf), got [{a}, {b}]")
        if self.name == "poly" and not self.coeffs:
            raise ValueError("poly generator needs at least one coefficient")
        object.__setattr__(self, "domain", (a, b))
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "exponent", float(self.exponent))


def _double_factorial(k: int) -> float:
    # (2n-3)!! with the empty product equal to 1.
    out = 1.0
    while k > 1:
        out *= k
        k -= 2
    return out


def _kl() -> tuple:
    def fn(t):
        return t * np.log(t)

    def dfn(k, t):
        if k == 1:
            return np.log(t) + 1.0
        sign = -1.0 if k % 2 else 1.0
        return sign * math.factorial(k - 2) * t ** (1.0 - k)

    return fn, dfn, 0.0, math.inf


def _hellinger() -> tuple:
    def fn(t):
        return 0.5 * (1.0 - np.sqrt(t)) ** 2

    def dfn(k, t):
        if k == 1:
            return 0.5 * (1.0 - t ** -0.5)
        sign = -1.0 if k % 2 else 1.0
        return sign * _double_factorial(2 * k - 3) / 2.0**k * t ** (-(2.0 * k - 1.0) / 2.0)

    return fn, dfn, 0.5, 0.5


def _harmonic() -> tuple:
    def fn(t):
        return 2.0 * t / (1.0 + t)

    def dfn(k, t):
        sign = 1.0 if k % 2 else -1.0
        return 2.0 * sign * math.factorial(k) * (1.0 + t) ** (-(k + 1.0))

    return fn, dfn, 0.0, 0.0


def _jeffreys() -> tuple:
    def fn(t):
        return (t - 1.0) * np.log(t)

    def dfn(k, t):
        if k == 1:
            return np.log(t) + 1.0 - 1.0 / t
        sign = -1.0 if k % 2 else 1.0
        return sign * math.factorial(k - 2) * t ** (-1.0 * k) * (t + k - 1.0)

    return fn, dfn, math.inf, math.inf


def _exp() -> tuple:
    return np.exp, (lambda k, t: np.exp(t)), 1.0, math.inf


def _power(p: float) -> tuple:
    def fn(t):
        return t**p

    def dfn(k, t):
        coef = 1.0
        for i in range(k):
            coef *= p - i
        return coef * t ** (p - k)

    if p > 0:
        zero = 0.0
    elif p == 0:
        zero = 1.0
    else:
        zero = math.inf
    if p < 1:
        slope = 0.0
    elif p == 1:
        slope = 1.0
    else:
        slope = math.inf
    return fn, dfn, zero, slope


def _poly_limits(coeffs: tuple[float, ...]) -> tuple[float, float]:
    degree = 0
    for j in range(len(coeffs) - 1, -1, -1):
        if coeffs[j] != 0.0:
            degree = j
            break
    zero = coeffs[0]
    if degree == 0:
        slope = 0.0
    elif degree == 1:
        slope = coeffs[1]
    else:
        slope = math.copysign(math.inf, coeffs[degree])
    return zero, slope


def make_generator(spec: GeneratorSpec) -> FunctionModel:
    """Function model with the generator's closed-form derivative stack."""
    if spec.name == "poly":
        zero, slope = _poly_limits(spec.coeffs)
        base = FunctionModel.from_polynomial(
            spec.coeffs, spec.domain, name="poly", max_order=_DERIV_CAP
        )
        return replace(base, zero_limit=zero, slope_at_infinity=slope)
    if spec.name == "power":
        fn, dfn, zero, slope = _power(spec.exponent)
        name = f"power({spec.exponent:g})"
    else:
        fn, dfn, zero, slope = {
            "kl": _kl,
            "hellinger": _hellinger,
            "harmonic": _harmonic,
            "jeffreys": _jeffreys,
            "exp": _exp,
        }[spec.name]()
        name = spec.name
    return FunctionModel(
        fn=fn,
        deriv_fn=dfn,
        domain=spec.domain,
        max_order=_DERIV_CAP,
        name=name,
        zero_limit=zero,
        slope_at_infinity=slope,
    )


def classify(spec: GeneratorSpec, n: int) -> str:
    """n-convexity class from the sign of the n-th derivative on the domain.

    Returns CONVEX when the sampled derivative is nonnegative everywhere,
    CONCAVE when nonpositive, INDEFINITE when it changes sign.
    """
    f = make_generator(spec)
    if not 1 <= n <= f.max_order:
        raise ValueError(f"n must be in 1..{f.max_order}, got {n}")
    a, b = spec.domain
    values = [
        float(f.deriv(n, a + (b - a) * i / (_CLASSIFY_GRID - 1)))
        for i in range(_CLASSIFY_GRID)
    ]
    tol = 1e-12 * (1.0 + max(abs(v) for v in values))
    if min(values) >= -tol:
        return CONVEX
    if max(values) <= tol:
        return CONCAVE
    return INDEFINITE


def parse_function_spec(text: str, domain: tuple[float, float] | None = None) -> GeneratorSpec:
    """Parse CLI name strings: kl|hellinger|harmonic|jeffreys|exp|poly:<c0,c1,...>|power:<p>."""
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    kwargs: dict = {}
    if domain is not None:
        kwargs["domain"] = domain
    if name == "poly":
        try:
            kwargs["coeffs"] = tuple(float(c) for c in arg.split(","))
        except ValueError as exc:
            raise ValueError(f"bad poly coefficients {arg!r}: {exc}") from exc
    elif name == "power":
        try:
            kwargs["exponent"] = float(arg)
        except ValueError as exc:
            raise ValueError(f"bad power exponent {arg!r}: {exc}") from exc
    elif arg:
        raise ValueError(f"generator {name!r} takes no parameter, got {arg!r}")
    return GeneratorSpec(name=name, **kwargs)
