"""Killing triples on the pseudo-sphere and the cone reconstruction.

Run with:  python demos/pseudosphere_cone.py
"""

from fractions import Fraction

from spliths import (cone_compare, find_assignment, positive_norm_points,
                     sasaki_check, unit_sphere_points)
from spliths.sasaki import cone_endomorphisms

# ---------------------------------------------------------------------------
# The three linear fields xi -> xi q for q = i, s, t have squared lengths
# 1, -1, -1 on the unit pseudo-sphere.  The bracket sign pattern
# [xi1, xi2] = -xi3, [xi2, xi3] = xi1, [xi3, xi1] = -xi2 is achievable, but
# only with structure constants of size 2: the norm is multiplicative, so
# unit generators cannot produce unit brackets.  The search reports the
# scale instead of hiding it.
print("strict unit-scale assignment:",
      find_assignment(0, scales=(1,)))
assignment, _ = find_assignment(0)
print("found:", assignment.describe())

# Exact verification at rational sphere points (lengths, orthogonality,
# tangency, the Killing property for the ambient metric).
for n in (0, 1):
    pts = unit_sphere_points(n, 50, seed=1)
    rep = sasaki_check(n, pts)
    print("n=%d: consistent=%s at %d exact sphere points"
          % (n, rep.consistent, rep.points_checked))

# ---------------------------------------------------------------------------
# On the positive-norm cone the reconstructed endomorphisms agree with the
# flat ones exactly: every term of the reconstruction depends on the point
# only through |xi|^2, so no square roots ever appear.
for n in (0, 1):
    results = cone_compare(n, positive_norm_points(n, 10, seed=2))
    print("n=%d cone agreement:" % n, all(r.agrees for r in results))

# The unscaled variant of the metric-dual term only agrees at radius 1;
# its numeric discrepancy grows with the radius.
for point in ([Fraction(1), 0, 0, 0], [Fraction(2), 0, 0, 0],
              [Fraction(3), 0, 0, 0]):
    r = cone_compare(0, [point])[0]
    print("|xi|^2 = %s: exact agreement %s, unscaled-variant discrepancy %.3f"
          % (r.norm_sq, r.agrees, r.printed_term_discrepancy))

# The radial direction is carried to the first Killing direction.
from spliths import linalg as la

endos = cone_endomorphisms(0, [Fraction(2), 0, 0, 0])
print("I applied to the radial vector (2,0,0,0):",
      la.mat_vec(endos["I"], [Fraction(2), 0, 0, 0]))
