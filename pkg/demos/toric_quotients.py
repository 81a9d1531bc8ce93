"""Toric quotient analysis: moment images, fibers and the decision suite.

Run with:  python demos/toric_quotients.py
"""

from fractions import Fraction

from spliths import (ComplexRational, Options, ToricConfig, analyze,
                     example_family, fiber_enumerate, incidence,
                     induced_structure, level_witness)
from spliths.cli import emit_report, report_to_dict

# ---------------------------------------------------------------------------
# The smallest case: the full torus acting on C^{1,1}; the moment image is
# a solid cone a >= |b| and fibers carry two orbits inside, one on the wall.
model = ToricConfig([[1]])
for a, b in ((Fraction(1), ComplexRational(0)),
             (Fraction(1), ComplexRational(1)),
             (Fraction(0), ComplexRational(0))):
    orbits = fiber_enumerate(model, [a], [b])
    inc = incidence(model, [a], [b])
    print("(a, b) = (%s, %s): walls %s, %d orbit(s)"
          % (a, b, list(inc.L), len(orbits)))

# A point of the zero level determines (a, b) and vice versa.
print("witness of (z, w) = (1, 1):",
      level_witness(model, [1], [1])[0][0])

# ---------------------------------------------------------------------------
# The d = n+1 family: every wall but the last is met; the last cone holds
# the whole image strictly inside, so the quotient is disconnected.
fam = example_family(1, 1)
report = analyze(fam, Options(seed=0))
print()
print("analysis of the n = 1 family:")
print(emit_report(report_to_dict(report), "text"))

# Fibers over an interior point split into 2^(n+1) orbits; the chosen point
# has perfect-square moduli so representatives are exact.
orbits = fiber_enumerate(fam, [Fraction(1, 8)], [0])
print("orbits over (1/8, 0):", len(orbits))
rep = orbits[0].rational_representative()
print("one representative: z =", [str(c) for c in rep[0]],
      " w =", [str(c) for c in rep[1]])

# The induced structure at that point is a genuine 4-dimensional
# hypersymplectic model: endomorphism relations hold exactly.
st = induced_structure(fam, rep[0], rep[1])
print("induced dimension:", st.dim, " all identities:",
      all(st.checks.values()))

# ---------------------------------------------------------------------------
# A compact quotient: the diagonal-type circle in T^2.  Compactness is
# decided by recession cones, and the degeneracy locus is provably hit.
lens = ToricConfig([[1], [-1]], lambda1=[0, -4], lambda2=[0, 1])
report = analyze(lens)
print("compact lens:")
print(emit_report(report_to_dict(report), "text"))
print("degeneracy witness point:", report.degeneracy.witness["point"])
