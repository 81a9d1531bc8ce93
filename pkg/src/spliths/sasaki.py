"""Killing triples on the pseudo-sphere and the cone endomorphism formulas.

The unit pseudo-sphere in B^{n+1} carries the linear fields xi -> xi q for
imaginary q; right multiplications by i, s, t give fields of squared
lengths 1, -1, -1 that are pairwise orthogonal, tangent to every sphere,
and Killing for the ambient flat metric.  The bracket relation pattern
[xi1, xi2] = -xi3, [xi2, xi3] = xi1, [xi3, xi1] = -xi2 is achieved up to an
overall scale on the structure constants: because the norm is
multiplicative, unit generators force |[p, q]| = 2, so the search reports
the scale it had to use rather than inventing unit-bracket fields.

The cone over the pseudo-sphere is the positive-norm open set.  With the
radial unit field as the reference vector and the tangential derivative as
the shape operator, the reconstruction

    a(X) = Phi_a(X) - g(xi_a, X) psi / r + dr(X) xi_a / r

recovers the flat endomorphisms exactly: every ingredient depends on the
point only through r^2 = |xi|^2, so the comparison is exact rational
arithmetic at every rational positive-norm point.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import SplitQuaternion
from .flat import flat_structure, metric_matrix, right_mult_matrix

_Q = {"i": SplitQuaternion(0, 1), "s": SplitQuaternion(0, 0, 1),
      "t": SplitQuaternion(0, 0, 0, 1)}
_LENGTH = {"i": Fraction(1), "s": Fraction(-1), "t": Fraction(-1)}


def killing_matrices(n: int):
    """Right-multiplication matrices for i, s, t on B^{n+1}."""
    return {name: right_mult_matrix(q, n + 1) for name, q in _Q.items()}


def _commutator(a, b):
    """Vector-field bracket of the linear fields x -> a x and x -> b x."""
    return linalg.mat_mul(b, a), linalg.mat_mul(a, b)


def field_bracket(a, b):
    ba, ab = _commutator(a, b)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ba, ab)]


def _scaled(mat, c):
    return [[c * e for e in row] for row in mat]


@dataclass
class Assignment:
    names: tuple      # generator names for (xi1, xi2, xi3)
    signs: tuple
    scale: int        # bracket scale kappa: [xi1, xi2] = -kappa xi3 etc.

    def describe(self):
        parts = ["%s%s" % ("-" if s < 0 else "+", n)
                 for n, s in zip(self.names, self.signs)]
        return "(xi1, xi2, xi3) = (%s, %s, %s), bracket scale %d" % (
            parts[0], parts[1], parts[2], self.scale)


def find_assignment(n: int, scales=(1, 2)):
    """Search generator choices and signs for the bracket sign pattern.

    Returns (assignment, fields) or None.  With scales=(1,) the search
    insists on unit structure constants, which is unsatisfiable for unit
    generators; including 2 finds the canonical solution (-i, s, t).
    """
    mats = killing_matrices(n)
    # order biased so the assignment matching the cone reconstruction
    # generators (-i, s, t) is reported when it qualifies
    for signs in itertools.product((-1, 1), (1, -1), (1, -1)):
        for order in (("i", "s", "t"), ("i", "t", "s")):
            fields = [_scaled(mats[order[k]], Fraction(signs[k]))
                      for k in range(3)]
            for kappa in scales:
                targets = [
                    _scaled(fields[2], Fraction(-kappa)),  # [xi1, xi2]
                    _scaled(fields[0], Fraction(kappa)),   # [xi2, xi3]
                    _scaled(fields[1], Fraction(-kappa)),  # [xi3, xi1]
                ]
                pairs = [(0, 1), (1, 2), (2, 0)]
                if all(field_bracket(fields[a], fields[b]) == tgt
                       for (a, b), tgt in zip(pairs, targets)):
                    return (Assignment(order, signs, kappa), fields)
    return None


@dataclass
class SasakiReport:
    assignment: Assignment | None
    strict_scale_possible: bool       # unit structure constants achievable?
    points_checked: int
    lengths_ok: bool
    orthogonal_ok: bool
    tangent_ok: bool
    killing_ok: bool

    @property
    def consistent(self):
        return (self.assignment is not None and self.lengths_ok
                and self.orthogonal_ok and self.tangent_ok and self.killing_ok)


class NoConsistentAssignment(ValueError):
    pass


def sasaki_check(n: int, points) -> SasakiReport:
    """Verify the Killing-triple structure at exact unit-sphere points.

    points: rational coordinate vectors with |xi|^2 = 1 in R^{4(n+1)}.
    Raises NoConsistentAssignment when no generator assignment satisfies
    the bracket pattern even with a scale; the strict unit-scale outcome is
    recorded separately in the report.
    """
    strict = find_assignment(n, scales=(1,)) is not None
    found = find_assignment(n, scales=(1, 2))
    if found is None:
        raise NoConsistentAssignment(
            "no sign/permutation assignment matches the bracket pattern")
    assignment, fields = found
    g = metric_matrix(n + 1)
    lengths = [_LENGTH[name] for name in assignment.names]
    lengths_ok = orthogonal_ok = tangent_ok = True
    checked = 0
    for xi in points:
        xi = [Fraction(e) if not isinstance(e, Fraction) else e for e in xi]
        norm = linalg.vec_dot(xi, linalg.mat_vec(g, xi))
        if norm != 1:
            raise ValueError("sample point does not lie on the unit "
                             "pseudo-sphere (|xi|^2 = %s)" % norm)
        vals = [linalg.mat_vec(f, xi) for f in fields]
        for a in range(3):
            va = vals[a]
            if linalg.vec_dot(va, linalg.mat_vec(g, va)) != lengths[a]:
                lengths_ok = False
            if linalg.vec_dot(xi, linalg.mat_vec(g, va)) != 0:
                tangent_ok = False
            for b in range(a + 1, 3):
                if linalg.vec_dot(va, linalg.mat_vec(g, vals[b])) != 0:
                    orthogonal_ok = False
        checked += 1
    killing_ok = True
    for f in fields:
        ftg = linalg.mat_mul(linalg.transpose(f), g)
        gf = linalg.mat_mul(g, f)
        if any(x + y != 0 for r1, r2 in zip(ftg, gf)
               for x, y in zip(r1, r2)):
            killing_ok = False
    return SasakiReport(assignment, strict, checked,
                        lengths_ok, orthogonal_ok, tangent_ok, killing_ok)


def _tangential(vec, xi, norm_sq, g):
    """Component of vec orthogonal to xi (radial projection removed)."""
    coeff = linalg.vec_dot(vec, linalg.mat_vec(g, xi)) / norm_sq
    return [v - coeff * x for v, x in zip(vec, xi)]


def cone_endomorphisms(n: int, xi):
    """The reconstructed I, S, T at a positive-norm point, exact.

    Uses the generators (-i, s, t) matching the flat right multiplications,
    the unit radial reference field and tangential derivatives; only
    r^2 = |xi|^2 enters, so the matrices are rational.
    """
    g = metric_matrix(n + 1)
    norm_sq = linalg.vec_dot(xi, linalg.mat_vec(g, xi))
    if norm_sq <= 0:
        raise ValueError("point must have positive norm")
    dim = 4 * (n + 1)
    gens = {"I": right_mult_matrix(SplitQuaternion(0, -1), n + 1),
            "S": right_mult_matrix(SplitQuaternion(0, 0, 1), n + 1),
            "T": right_mult_matrix(SplitQuaternion(0, 0, 0, 1), n + 1)}
    out = {}
    for name, mat in gens.items():
        xi_field = linalg.mat_vec(mat, xi)  # xi q at the point
        cols = []
        for m in range(dim):
            x = [Fraction(0)] * dim
            x[m] = Fraction(1)
            tangential_x = _tangential(x, xi, norm_sq, g)
            phi = _tangential(linalg.mat_vec(mat, tangential_x), xi,
                              norm_sq, g)
            radial = linalg.vec_dot(xi_field, linalg.mat_vec(g, x)) / norm_sq
            drx = linalg.vec_dot(x, linalg.mat_vec(g, xi)) / norm_sq
            col = [p - radial * q + drx * f
                   for p, q, f in zip(phi, xi, xi_field)]
            cols.append(col)
        out[name] = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    return out


@dataclass
class ConeComparison:
    point: list
    norm_sq: Fraction
    agrees: bool                  # reconstructed == flat, exact
    printed_term_discrepancy: float  # numeric size of the unscaled variant


def cone_compare(n: int, points) -> list:
    """Compare the reconstruction against the flat endomorphisms.

    Exact agreement is asserted with rational arithmetic at every point.
    The unscaled variant of the metric-dual term (without the extra 1/r)
    is also evaluated; its discrepancy vanishes only at r = 1, and is
    reported numerically since it involves r itself.
    """
    import math

    flat = flat_structure(n + 1)
    g = metric_matrix(n + 1)
    results = []
    for xi in points:
        xi = [e if isinstance(e, Fraction) else Fraction(e) for e in xi]
        norm_sq = linalg.vec_dot(xi, linalg.mat_vec(g, xi))
        recon = cone_endomorphisms(n, xi)
        agrees = all(recon[name] == flat.endomorphism(name)
                     for name in ("I", "S", "T"))
        # printed variant: metric-dual term scaled by 1/r instead of 1/r^2
        r = math.sqrt(float(norm_sq))
        worst = 0.0
        mat = right_mult_matrix(SplitQuaternion(0, -1), n + 1)
        xi_field = linalg.mat_vec(mat, xi)
        dim = 4 * (n + 1)
        for m in range(dim):
            x = [Fraction(0)] * dim
            x[m] = Fraction(1)
            coeff = linalg.vec_dot(xi_field, linalg.mat_vec(g, x))
            delta = abs(float(coeff) * (1.0 / r - 1.0 / float(norm_sq)))
            scale = max(abs(float(e)) for e in xi)
            worst = max(worst, delta * scale)
        results.append(ConeComparison(xi, norm_sq, agrees, worst))
    return results


def unit_sphere_points(n: int, count: int, seed: int = 0):
    """Exact rational points with |xi|^2 = 1 in B^{n+1}.

    Starts at the first basis vector and applies random exact rotations
    (between same-sign coordinates) and boosts (between opposite signs),
    both parameterized by rational points of the circle or hyperbola.
    """
    rng = random.Random(seed)
    dim = 4 * (n + 1)
    signs = [metric_matrix(n + 1)[i][i] for i in range(dim)]
    points = []
    for _ in range(count):
        v = [Fraction(0)] * dim
        v[0] = Fraction(1)
        for _ in range(rng.randint(3, 8)):
            i, j = rng.sample(range(dim), 2)
            p, q = rng.randint(1, 6), rng.randint(1, 6)
            if signs[i] == signs[j]:
                den = p * p + q * q
                c, s = Fraction(q * q - p * p, den), Fraction(2 * p * q, den)
            else:
                den = q * q - p * p
                if den == 0:
                    continue
                c, s = Fraction(q * q + p * p, den), Fraction(2 * p * q, den)
                if c < 0:
                    c, s = -c, -s
            vi, vj = v[i], v[j]
            v[i] = c * vi - signs[i] * signs[j] * s * vj
            v[j] = s * vi + c * vj
            norm = sum(sg * e * e for sg, e in zip(signs, v))
            if norm != 1:
                # undo anything that drifted (boost orientation issues)
                v[i], v[j] = vi, vj
        points.append(v)
    return points


def positive_norm_points(n: int, count: int, seed: int = 0):
    """Random rational points with |xi|^2 > 0, mixed square and non-square."""
    rng = random.Random(seed)
    dim = 4 * (n + 1)
    signs = [metric_matrix(n + 1)[i][i] for i in range(dim)]
    points = []
    while len(points) < count:
        v = [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
             for _ in range(dim)]
        norm = sum(sg * e * e for sg, e in zip(signs, v))
        if norm > 0:
            points.append(v)
    # include a few exact scalings of unit points (perfect-square norms)
    for idx, u in enumerate(unit_sphere_points(n, min(4, count), seed + 1)):
        scale = Fraction(idx + 2)
        points[idx % len(points)] = [scale * e for e in u]
    return points
