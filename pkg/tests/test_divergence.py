"""f-divergence values, conventions at zero entries, and delegated bounds."""

from __future__ import annotations

import math

import numpy as np
import pytest

from elrbounds import (
    CONCAVE,
    CONVEX,
    FunctionModel,
    GeneratorSpec,
    ProbabilityVector,
    RatioRange,
    direct_bound_values,
    divergence_bounds,
    f_divergence,
    make_generator,
    ratio_range,
)

from conftest import assert_close


def _gen(name, domain=(0.25, 3.0), **kw):
    return make_generator(GeneratorSpec(name, domain=domain, **kw))


P = ProbabilityVector((0.5, 0.5))
Q = ProbabilityVector((0.25, 0.75))


# --- values ---------------------------------------------------------------------


@pytest.mark.parametrize("name", ["kl", "hellinger", "jeffreys"])
def test_identical_distributions_give_zero(name):
    p = ProbabilityVector((0.2, 0.3, 0.5))
    assert abs(f_divergence(_gen(name), p, p)) <= 1e-12


def test_hellinger_worked_value():
    # Oracle: one half of the squared difference of square roots.
    expected = 0.5 * sum(
        (math.sqrt(q) - math.sqrt(p)) ** 2 for p, q in zip(P.values, Q.values)
    )
    assert expected == pytest.approx(0.03407417, abs=1e-8)
    assert f_divergence(_gen("hellinger"), P, Q) == pytest.approx(expected, abs=1e-14)


def test_kl_generator_worked_value():
    # With f(t) = t log t the weighted sum telescopes to sum p_i log(p_i/q_i).
    expected = sum(p * math.log(p / q) for p, q in zip(P.values, Q.values))
    assert expected == pytest.approx(0.1438410, abs=1e-6)
    assert f_divergence(_gen("kl"), P, Q) == pytest.approx(expected, abs=1e-14)


def test_nonnegativity_for_vanishing_at_one_generators():
    rng = np.random.default_rng(17)
    for name in ("kl", "hellinger", "jeffreys"):
        f = _gen(name, domain=(0.05, 25.0))
        for _ in range(25):
            r = int(rng.integers(2, 9))
            p = ProbabilityVector(tuple(float(x) for x in rng.dirichlet(np.ones(r))))
            q = ProbabilityVector(tuple(float(x) for x in rng.dirichlet(np.ones(r))))
            assert f_divergence(f, p, q) >= -1e-12


# --- zero-entry conventions ----------------------------------------------------


def test_both_zero_contributes_nothing():
    p = ProbabilityVector((0.0, 1.0))
    q = ProbabilityVector((0.0, 1.0))
    assert f_divergence(_gen("hellinger"), p, q) == pytest.approx(0.0, abs=1e-15)


def test_q_zero_uses_slope_at_infinity():
    p = ProbabilityVector((0.3, 0.7))
    q = ProbabilityVector((0.0, 1.0))
    f = _gen("hellinger")
    expected = 0.3 * 0.5 + 1.0 * float(f(0.7))
    assert f_divergence(f, p, q) == pytest.approx(expected, abs=1e-14)
    assert f_divergence(_gen("kl"), p, q) == math.inf


def test_q_zero_without_declared_slope_is_an_error():
    bare = FunctionModel(fn=lambda t: t * t, deriv_fn=lambda k, t: 0.0, domain=(0.0, 2.0))
    p = ProbabilityVector((0.3, 0.7))
    q = ProbabilityVector((0.0, 1.0))
    with pytest.raises(ValueError, match="slope-at-infinity"):
        f_divergence(bare, p, q)


def test_p_zero_uses_zero_limit():
    p = ProbabilityVector((0.0, 1.0))
    q = ProbabilityVector((0.4, 0.6))
    # kl: t log t -> 0 as t -> 0+, so only the second entry contributes.
    f = _gen("kl")
    expected = 0.6 * float(f(1.0 / 0.6))
    assert f_divergence(f, p, q) == pytest.approx(expected, abs=1e-14)
    assert f_divergence(_gen("jeffreys"), p, q) == math.inf


def test_length_mismatch_rejected():
    with pytest.raises(ValueError, match="entries"):
        f_divergence(_gen("kl"), P, ProbabilityVector((1.0,)))


def test_probability_vector_validation():
    with pytest.raises(ValueError, match="outside"):
        ProbabilityVector((1.2, -0.2))
    with pytest.raises(ValueError, match="sum"):
        ProbabilityVector((0.5, 0.4))
    with pytest.raises(ValueError, match="empty"):
        ProbabilityVector(())


# --- ratio ranges -----------------------------------------------------------------


def test_ratio_range_worked_value():
    rr = ratio_range(P, Q)
    assert rr.a == pytest.approx(2.0 / 3.0)
    assert rr.b == pytest.approx(2.0)
    assert not rr.is_degenerate


def test_ratio_range_degenerate_for_identical_distributions():
    rr = ratio_range(P, P)
    assert rr.a == rr.b == 1.0
    assert rr.is_degenerate


def test_ratio_range_requires_positive_q():
    with pytest.raises(ValueError, match="positive"):
        ratio_range(P, ProbabilityVector((0.0, 1.0)))


def test_ratio_range_must_straddle_one():
    with pytest.raises(ValueError, match="straddle"):
        RatioRange(1.5, 2.0)


# --- divergence bounds ---------------------------------------------------------------


def test_constructed_functional_mean_is_one():
    from elrbounds import DiscreteFunctional

    rng = np.random.default_rng(3)
    for _ in range(20):
        r = int(rng.integers(2, 10))
        p = tuple(float(x) for x in rng.dirichlet(np.ones(r)))
        q = tuple(float(x) for x in rng.dirichlet(np.ones(r)))
        ratios = tuple(pi / qi for pi, qi in zip(p, q))
        A = DiscreteFunctional(ratios, q, (min(ratios) - 1e-9, max(ratios) + 1e-9))
        assert A.mean == pytest.approx(1.0, abs=1e-12)


def test_worked_bracket_for_cube_generator():
    # Two-point distributions sit exactly on the interval endpoints, so the
    # chord gap is zero and the bracket must straddle zero.
    f = _gen("poly", domain=(2.0 / 3.0, 2.0), coeffs=(0, 0, 0, 1))
    rep = divergence_bounds(f, P, Q, n=3, theorem="tm23", convexity=CONVEX)
    assert rep.lr == pytest.approx(0.0, abs=1e-12)
    assert rep.lower - 1e-12 <= rep.lr <= rep.upper + 1e-12
    # lr is the divergence minus the chord of f at 1.
    a, b = 2.0 / 3.0, 2.0
    chord_at_one = ((b - 1.0) * float(f(a)) + (1.0 - a) * float(f(b))) / (b - a)
    assert rep.lr == pytest.approx(f_divergence(f, P, Q) - chord_at_one, abs=1e-12)


def test_three_point_bracket_contains_lr():
    p = ProbabilityVector((0.2, 0.5, 0.3))
    q = ProbabilityVector((0.4, 0.3, 0.3))
    rr = ratio_range(p, q)
    f = _gen("poly", domain=(rr.a, rr.b), coeffs=(0, 0, 0, 1))
    rep = divergence_bounds(f, p, q, n=3, theorem="tm23", convexity=CONVEX)
    assert rep.lower - 1e-12 <= rep.lr <= rep.upper + 1e-12
    assert rep.lr < -1e-3  # strictly inside, not the degenerate two-point case
    expected_lr = f_divergence(f, p, q) - (
        (rr.b - 1.0) * float(f(rr.a)) + (1.0 - rr.a) * float(f(rr.b))
    ) / (rr.b - rr.a)
    assert rep.lr == pytest.approx(expected_lr, abs=1e-12)


def test_jeffreys_bracket_via_certified_concavity():
    rr = ratio_range(P, Q)
    f = _gen("jeffreys", domain=(rr.a, rr.b))
    rep = divergence_bounds(f, P, Q, n=3, theorem="tm24", convexity=CONCAVE)
    assert rep.direction_valid
    assert rep.lower - 1e-12 <= rep.lr <= rep.upper + 1e-12


def test_widened_interval_with_identical_distributions():
    f = _gen("poly", domain=(0.5, 1.5), coeffs=(1.0, 2.0))  # linear: every bound is exact
    rep = divergence_bounds(
        f, P, P, n=3, theorem="tm23", convexity=CONVEX, interval=(0.5, 1.5)
    )
    assert rep.lr == pytest.approx(0.0, abs=1e-12)
    assert rep.lower == pytest.approx(rep.lr, abs=1e-12)
    assert rep.upper == pytest.approx(rep.lr, abs=1e-12)


def test_degenerate_interval_rejected():
    f = _gen("kl")
    with pytest.raises(ValueError, match="degenerate"):
        divergence_bounds(f, P, P, n=3, theorem="tm23", convexity=CONCAVE)


def test_interval_must_cover_ratio_range():
    f = _gen("kl")
    with pytest.raises(ValueError, match="does not contain"):
        divergence_bounds(
            f, P, Q, n=3, theorem="tm23", convexity=CONCAVE, interval=(0.9, 2.5)
        )


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError, match="theorem"):
        divergence_bounds(_gen("kl"), P, Q, n=3, theorem="tm99", convexity=CONVEX)


# --- delegation vs direct formulas -----------------------------------------------


@pytest.mark.parametrize(
    "theorem,n,m",
    [("tm21", 5, 3), ("tm21", 6, 4), ("tm22", 5, 3), ("cor21", 5, 3),
     ("cor21", 7, 4), ("tm23", 4, None), ("tm23", 7, None), ("tm24", 6, None)],
)
def test_direct_formulas_match_delegation(theorem, n, m):
    rng = np.random.default_rng(hash((theorem, n, m)) % 2**32)
    for name in ("kl", "hellinger", "harmonic", "jeffreys"):
        r = int(rng.integers(2, 12))
        q = tuple(float(x) for x in rng.dirichlet(np.ones(r) * 3.0))
        x = rng.uniform(0.5, 2.0, size=r)
        p_raw = np.array(q) * x
        p = ProbabilityVector(tuple(float(v) for v in p_raw / p_raw.sum()))
        qv = ProbabilityVector(q)
        rr = ratio_range(p, qv)
        f = _gen(name, domain=(rr.a, rr.b))
        for convexity in (CONVEX, CONCAVE):
            rep = divergence_bounds(
                f, p, qv, n=n, m=m, theorem=theorem, convexity=convexity
            )
            direct = direct_bound_values(
                f, p, qv, rr.a, rr.b, n=n, m=m, theorem=theorem.upper(), convexity=convexity
            )
            for got, want in zip((rep.lower, rep.upper), direct):
                assert (got is None) == (want is None)
                if got is not None:
                    assert abs(got - want) <= 1e-12
