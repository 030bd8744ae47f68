#!/usr/bin/env python3
"""Confluent divided differences, two-point Hermite forms, and remainders.

A divided difference over distinct nodes is the usual quotient recursion;
repeating a node j+1 times replaces the undefined quotient with f^(j)/j!.
This script walks the table for a cubic, builds the (m, n-m) two-point
interpolant, and checks the identity f(t) = P(t) + R(t) pointwise.
"""

import numpy as np

from elrbounds import (
    FunctionModel,
    GeneratorSpec,
    NodeMultiset,
    divided_difference,
    hermite_mn,
    make_generator,
    newton_interpolant,
    remainder_R,
)

cube = FunctionModel.from_polynomial([0, 0, 0, 1], (0.0, 2.0), name="t^3")

print("== divided differences of f(t) = t^3 on [0, 2] ==")
print("distinct nodes {0, 1, 2}:   ", divided_difference(cube, NodeMultiset.from_points([0, 1, 2])))
print("confluent {0 x2, 1}:        ", divided_difference(cube, NodeMultiset(((0.0, 2), (1.0, 1)))))
print("fully confluent {0 x4}:     ", divided_difference(cube, NodeMultiset(((0.0, 4),))),
      " (= f'''(0)/3! = 1)")

print()
print("== two-point Hermite form for exp on [0, 1], m=2 conditions at 0 ==")
f = make_generator(GeneratorSpec("exp", domain=(0.0, 1.0)))
form = hermite_mn(f, 0.0, 1.0, 2, 3)
print("nodes:  ", form.nodes)
print("coeffs: ", form.coeffs, " (last one is e - 2)")
print("P(0) = f(0):", form(0.0), "   P'(0) = f'(0):", form.deriv(1, 0.0))
print("P(1) = f(1):", form(1.0), "=", float(f(1.0)))

print()
print("== reconstruction: f(t) = P(t) + R(t) with R the weighted difference ==")
worst = 0.0
for t in np.linspace(0.0, 1.0, 9):
    t = float(t)
    p = form(t)
    r = remainder_R(f, 0.0, 1.0, 2, 3, t)
    worst = max(worst, abs(float(f(t)) - (p + r)))
    print(f"  t={t:.3f}   P={p:+.6f}   R={r:+.2e}   P+R-f={float(f(t)) - p - r:+.1e}")
print("worst residual:", worst)

print()
print("== the Newton form serializes for debugging ==")
chord = newton_interpolant(cube, NodeMultiset.from_points([0.0, 2.0]))
print(chord.to_dict())
