"""Tour of the exact split-quaternion layer.

Run with:  python demos/algebra_tour.py
"""

from fractions import Fraction

from spliths import (BMatrix, BVector, I, ONE, S, SplitQuaternion, T,
                     abelian_element, classify_square, flat_structure,
                     module_action, to_complex_pair)
from spliths import linalg as la

# ---------------------------------------------------------------------------
# The algebra: basis 1, i, s, t with i^2 = -1, s^2 = t^2 = 1, is = t = -si.
print("i * s =", (I * S == T) and "t", "   s * i =", (S * I == -T) and "-t")

p = SplitQuaternion(1, 2, Fraction(1, 2), -1)
q = SplitQuaternion(0, 1, 1, Fraction(2, 3))
print("norm multiplicativity:",
      (p * q).norm_sq() == p.norm_sq() * q.norm_sq())

# Zero divisors exist: i + s squares to zero.
print("(i+s)^2 =", ((I + S) * (I + S)).coefficients())
print("classification of i+s:", classify_square(I + S).value)

# Elements with square -1 fill a hyperboloid: y^2 - u^2 - v^2 = 1.
w = SplitQuaternion(0, Fraction(5, 4), Fraction(3, 4), 0)
print("square of (5/4 i + 3/4 s):", classify_square(w).value)

# ---------------------------------------------------------------------------
# The module B^2 and its isometric two-sided action.
xi = BVector([p, q])
eta = BVector([q, ONE])
circle = abelian_element([(Fraction(3, 5), Fraction(4, 5))] * 2, "torus")
unit = SplitQuaternion(Fraction(5, 4), 0, Fraction(3, 4), 0)  # |.|^2 = 1
moved = module_action(circle, unit, xi)
print("action preserves <.,.>:",
      moved.inner(module_action(circle, unit, eta)) == xi.inner(eta))

# Complex splitting xi = z + w s.
z, w = to_complex_pair(xi)
print("z =", [str(c) for c in z], " w =", [str(c) for c in w])

# ---------------------------------------------------------------------------
# The flat structure on B^n: three endomorphisms, one neutral metric.
fs = flat_structure(2)
print("I^2 = -1, S^2 = T^2 = 1, IS = T = -SI and metric relations:",
      fs.identities_hold())
print("metric signature:", la.signature(fs.G))
x = [Fraction(k) for k in (1, 0, 2, 0, 0, 1, 0, 0)]
print("g(x, x) =", fs.metric(x, x), "  omega_I(x, x) =", fs.omega("I", x, x))
