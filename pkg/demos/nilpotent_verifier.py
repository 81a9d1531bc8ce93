"""Verifying the 5-dimensional nilpotent example and its reconstruction.

Run with:  python demos/nilpotent_verifier.py
"""

from spliths import (QuarticData, build_symmetric_hs, ce_differential,
                     closedness_report, jacobi_check, nilpotency_step,
                     nilpotent5_example)
from spliths.liealg import Form

# ---------------------------------------------------------------------------
# The algebra with brackets [E1,E2] = E3, [E3,E1] = E4, [E3,E2] = E5.
alg, forms, metric = nilpotent5_example()
print("Jacobi violations:", jacobi_check(alg))
print("nilpotency step:", nilpotency_step(alg))
print("dE3 =", ce_differential(alg, Form(5, 1, {(2,): 1})))

# Closedness of the printed invariant 2-forms, with the sign-flipped
# variant of each: omega_S as printed picks up a residue, its variant does
# not.  The report states both rather than silently repairing the data.
rep = closedness_report(alg, forms)
for name, entry in rep.items():
    print("%-8s printed: %s   variant: %s" % (
        name,
        "closed" if entry["printed_closed"]
        else "residue %s" % entry["printed_residue"],
        "closed" if entry["variant_closed"]
        else "residue %s" % entry["variant_residue"]))

# ---------------------------------------------------------------------------
# The same algebra out of a quartic: R = e^4 on the Lagrangian half gives a
# one-dimensional holonomy span and the bracket table above, up to the
# documented basis normalization.
c = build_symmetric_hs(QuarticData.unit(1))
print("reconstructed dimension:", c.dim,
      " holonomy dim:", len(c.kappa_basis))
print("holonomy generator (symmetric matrix):", c.kappa_basis[0])
print("nilpotency of the reconstruction:", nilpotency_step(c.algebra))
print("printed generator formula differs by a factor i:",
      c.printed_span_is_i_multiple)

# The flat case: a vanishing quartic leaves an abelian algebra.
flat = build_symmetric_hs(QuarticData.zero(1))
print("zero quartic:", flat.dim, "dimensional,",
      "abelian" if nilpotency_step(flat.algebra) == 1 else "nonabelian")
