"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check: divided
differences are recomputed with the partial-fraction (Lagrange) sum, chord
gaps with plain loops, and derivative stacks with high-precision central
differences in the generator tests.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from elrbounds import DiscreteFunctional, FunctionModel, GeneratorSpec, make_generator


def lagrange_dd(fvals, nodes):
    """Divided difference over distinct nodes via sum f(t_i) / prod (t_i - t_j)."""
    total = 0.0
    for i, ti in enumerate(nodes):
        denom = 1.0
        for j, tj in enumerate(nodes):
            if j != i:
                denom *= ti - tj
        total += fvals[i] / denom
    return total


def brute_lr(f, points, weights, a, b):
    """Chord-gap value by direct loops, no fsum, no shared helpers."""
    mean = sum(w * x for w, x in zip(weights, points))
    afg = sum(w * float(f(x)) for w, x in zip(weights, points))
    chord = ((b - mean) * float(f(a)) + (mean - a) * float(f(b))) / (b - a)
    return afg - chord


def poly_model(coeffs, domain=(0.0, 2.0)):
    return FunctionModel.from_polynomial(coeffs, domain)


def exp_model(domain=(-1.0, 2.0)):
    return make_generator(GeneratorSpec("exp", domain=domain))


@pytest.fixture
def cube():
    """f(t) = t^3 on [0, 2]."""
    return poly_model([0.0, 0.0, 0.0, 1.0])


@pytest.fixture
def worked_functional():
    """Points {0.5, 1.5}, equal weights, interval [0, 2]."""
    return DiscreteFunctional((0.5, 1.5), (0.5, 0.5), (0.0, 2.0))


def random_functional(rng: np.random.Generator, interval, size=None) -> DiscreteFunctional:
    r = int(rng.integers(1, 12)) if size is None else size
    points = tuple(float(x) for x in rng.uniform(interval[0], interval[1], size=r))
    weights = tuple(float(w) for w in rng.dirichlet(np.ones(r)))
    return DiscreteFunctional(points, weights, interval)


def assert_close(actual, expected, rel=1e-12, abs_tol=1e-12):
    assert actual == pytest.approx(expected, rel=rel, abs=abs_tol), (
        f"{actual!r} != {expected!r} (rel={rel}, abs={abs_tol})"
    )
