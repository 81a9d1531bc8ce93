"""Symmetric hypersymplectic spaces from a quartic on a Lagrangian half.

E = C^{n,n} carries the complex symplectic form omega_E with Lagrangian
halves L+ = span(e_i), L- = span(f_i), omega_E(e_i, f_j) = delta_ij, and
the antilinear real structure fixing the e_i and negating the f_i.  A real
symmetric quartic R on L+ produces a two-step construction: the holonomy
space is spanned by the contractions R_{A,B}, acting on E through the
symplectic identification of S^2 L+ with endomorphisms, and the Lie algebra
is that span plus the real points of E tensor H for a second symplectic
plane H.  For the unit quartic in complex dimension one this reproduces the
5-dimensional three-step nilpotent algebra.

Conventions pinned here (scale choices wash into basis normalization):
contraction pairs vectors against e-monomials through omega_E(A, e_i);
S^2 L+ acts by (uv).w = u omega_E(v, w) + v omega_E(u, w).  The holonomy
space is taken to be the span of the bracket values themselves; it consists
of purely imaginary symmetric matrices, which is exactly what commuting
with the real structure requires.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exact import ComplexRational, as_fraction
from .liealg import LieAlgebra, jacobi_check


class ConstructionError(ValueError):
    pass


class QuarticData:
    """Symmetric 4-tensor with rational coefficients on L+ (dimension n)."""

    def __init__(self, n, coeffs):
        """coeffs: {(i,j,k,l): value}; symmetrized automatically."""
        self.n = n
        table = {}
        for idx, val in coeffs.items():
            val = as_fraction(val)
            for perm in set(itertools.permutations(idx)):
                table.setdefault(perm, val)
                if table[perm] != val:
                    raise ValueError("inconsistent symmetric coefficients")
        self.table = table

    @classmethod
    def unit(cls, n=1):
        """R = e_1^4, the smallest nonflat example."""
        return cls(n, {(0, 0, 0, 0): 1})

    @classmethod
    def zero(cls, n=1):
        return cls(n, {})

    def coeff(self, i, j, k, l):
        return self.table.get((i, j, k, l), Fraction(0))


def _czero():
    return ComplexRational(0)


class EVector:
    """Element of E: e-components then f-components, complex rationals."""

    __slots__ = ("e", "f")

    def __init__(self, e, f):
        self.e = [ComplexRational.coerce(x) for x in e]
        self.f = [ComplexRational.coerce(x) for x in f]

    @classmethod
    def zero(cls, n):
        return cls([_czero()] * n, [_czero()] * n)

    def __add__(self, other):
        return EVector([a + b for a, b in zip(self.e, other.e)],
                       [a + b for a, b in zip(self.f, other.f)])

    def scale(self, c):
        c = ComplexRational.coerce(c)
        return EVector([c * x for x in self.e], [c * x for x in self.f])


def omega_e(x: EVector, y: EVector) -> ComplexRational:
    total = _czero()
    for a, b in zip(x.e, y.f):
        total = total + a * b
    for a, b in zip(x.f, y.e):
        total = total - a * b
    return total


def s_e(x: EVector) -> EVector:
    return EVector([c.conj() for c in x.e], [-c.conj() for c in x.f])


def quartic_contract(q: QuarticData, a: EVector, b: EVector):
    """R_{A,B} in S^2 L+ as a symmetric complex matrix."""
    n = q.n
    pa = [-c for c in a.f]  # omega_E(A, e_i) = -A_f[i]
    pb = [-c for c in b.f]
    m = [[_czero() for _ in range(n)] for _ in range(n)]
    for (i, j, k, l), val in q.table.items():
        m[k][l] = m[k][l] + pa[i] * pb[j] * val
    # symmetrize defensively; the tensor already is
    for k in range(n):
        for l in range(k + 1, n):
            avg = m[k][l] + m[l][k]
            half = ComplexRational(Fraction(1, 2))
            m[k][l] = m[l][k] = half * avg
    return m


def kappa_action(kmat, w: EVector) -> EVector:
    """(sum k_ij e_i e_j) . w = 2 sum_j k_ij omega_E(e_j, w) e_i."""
    n = len(kmat)
    out = EVector.zero(n)
    for i in range(n):
        acc = _czero()
        for j in range(n):
            acc = acc + kmat[i][j] * w.f[j]
        out.e[i] = acc + acc
    return out


def _real_momentum_basis(n):
    """sigma-fixed basis of E (x) H as (A, B) pairs (components on h, h~)."""
    basis = []
    labels = []
    i_c = ComplexRational(0, 1)
    for i in range(n):
        f_i = EVector.zero(n)
        f_i.f[i] = ComplexRational(1)
        e_i = EVector.zero(n)
        e_i.e[i] = ComplexRational(1)
        basis.extend([
            (f_i.scale(i_c), EVector.zero(n)),   # i f_i (x) h
            (EVector.zero(n), f_i),              # f_i (x) h~
            (e_i, EVector.zero(n)),              # e_i (x) h
            (EVector.zero(n), e_i.scale(i_c)),   # i e_i (x) h~
        ])
        labels.extend(["if%d*h" % (i + 1), "f%d*ht" % (i + 1),
                       "e%d*h" % (i + 1), "ie%d*ht" % (i + 1)])
    return basis, labels


def _momentum_coords(n, pair):
    """Coordinates of a sigma-real (A, B) in the basis above, or None."""
    a, b = pair
    coords = []
    mi = ComplexRational(0, -1)
    for i in range(n):
        x1 = mi * a.f[i]   # A_f[i] = i x1
        x2 = b.f[i]
        x3 = a.e[i]
        x4 = mi * b.e[i]
        for val in (x1, x2, x3, x4):
            if val.im != 0:
                return None
        coords.extend([x1.re, x2.re, x3.re, x4.re])
    return coords


def _sym_mat_coords(m):
    """Real coordinates (Re, Im over the upper triangle) of a symmetric matrix."""
    n = len(m)
    out = []
    for i in range(n):
        for j in range(i, n):
            out.extend([m[i][j].re, m[i][j].im])
    return out


def momentum_bracket(q: QuarticData, x_pair, y_pair):
    """[A1 (x) h + B1 (x) h~, A2 (x) h + B2 (x) h~] in S^2 L+."""
    a1, b1 = x_pair
    a2, b2 = y_pair
    m1 = quartic_contract(q, a1, b2)
    m2 = quartic_contract(q, b1, a2)
    return [[m1[i][j] - m2[i][j] for j in range(q.n)] for i in range(q.n)]


@dataclass
class SymmetricConstruction:
    algebra: LieAlgebra
    kappa_basis: list        # symmetric complex matrices spanning the holonomy part
    momentum_labels: list
    metric: list             # Gram matrix on the full basis (zero on kappa)
    omega: dict              # name -> coefficient matrix on the full basis
    printed_span_is_i_multiple: bool
    n: int

    @property
    def dim(self):
        return self.algebra.dim


def build_symmetric_hs(q: QuarticData) -> SymmetricConstruction:
    """Assemble the Lie algebra of the symmetric space of the quartic.

    Raises ConstructionError whenever the bracket data refuses to close or
    the Jacobi identity fails; the failure carries the offending data.
    """
    n = q.n
    momentum, labels = _real_momentum_basis(n)
    nm = len(momentum)

    # holonomy span = span of momentum brackets
    gens = []
    for x in range(nm):
        for y in range(x + 1, nm):
            m = momentum_bracket(q, momentum[x], momentum[y])
            gens.append(_sym_mat_coords(m))
    span = [list(v) for v in _row_space(gens)]
    kappa_basis = [_coords_to_sym(v, n) for v in span]
    for m in kappa_basis:
        if any(m[i][j].re != 0 for i in range(n) for j in range(n)):
            raise ConstructionError(
                "holonomy element is not purely imaginary; the action would "
                "not commute with the real structure")

    # compare with the i(R_{sA,B} - R_{A,sB}) span
    printed = []
    i_c = ComplexRational(0, 1)
    for x in range(nm):
        for y in range(nm):
            a = momentum[x][0] + momentum[x][1]
            b = momentum[y][0] + momentum[y][1]
            m1 = quartic_contract(q, s_e(a), b)
            m2 = quartic_contract(q, a, s_e(b))
            mat = [[i_c * (m1[i][j] - m2[i][j]) for j in range(n)]
                   for i in range(n)]
            printed.append(_sym_mat_coords(mat))
    printed_span = _row_space(printed)
    rotated = [_sym_mat_coords([[i_c * e for e in row]
                                for row in _coords_to_sym(v, n)])
               for v in printed_span]
    same_after_i = _row_space(rotated) == _row_space(span)

    dim = len(kappa_basis) + nm
    brackets = {}

    def kappa_coords(mat):
        target = _sym_mat_coords(mat)
        if not span:
            return None if any(e != 0 for e in target) else []
        sol = linalg.solve(linalg.transpose(span), target)
        return sol

    # momentum-momentum brackets land in kappa
    for x in range(nm):
        for y in range(x + 1, nm):
            m = momentum_bracket(q, momentum[x], momentum[y])
            sol = kappa_coords(m)
            if sol is None:
                raise ConstructionError("bracket of momentum elements leaves "
                                        "the holonomy span (%d, %d)" % (x, y))
            comps = {a: c for a, c in enumerate(sol) if c != 0}
            if comps:
                brackets[(len(kappa_basis) + x, len(kappa_basis) + y)] = comps

    # kappa acts on the momentum part
    for a, kmat in enumerate(kappa_basis):
        for x in range(nm):
            pair = momentum[x]
            image = (kappa_action(kmat, pair[0]), kappa_action(kmat, pair[1]))
            coords = _momentum_coords(n, image)
            if coords is None:
                raise ConstructionError(
                    "holonomy action does not preserve the real points")
            comps = {len(kappa_basis) + m: c
                     for m, c in enumerate(coords) if c != 0}
            if comps:
                brackets[(a, len(kappa_basis) + x)] = comps

    algebra = LieAlgebra(dim, brackets)
    violations = jacobi_check(algebra)
    if violations:
        raise ConstructionError("Jacobi identity fails at triples %r"
                                % (violations[:3],))

    metric, omega = _transported_forms(n, momentum, len(kappa_basis))
    return SymmetricConstruction(algebra, kappa_basis, labels, metric, omega,
                                 same_after_i, n)


def _row_space(vectors):
    vecs = [v for v in vectors if any(e != 0 for e in v)]
    if not vecs:
        return []
    red, pivots = linalg.rref(vecs)
    return [red[i] for i in range(len(pivots))]


def _coords_to_sym(coords, n):
    m = [[_czero() for _ in range(n)] for _ in range(n)]
    at = 0
    for i in range(n):
        for j in range(i, n):
            val = ComplexRational(coords[at], coords[at + 1])
            m[i][j] = val
            m[j][i] = val
            at += 2
    return m


def _tensor_metric(x_pair, y_pair) -> Fraction:
    """omega_E (x) omega_H on sigma-real elements; always rational there."""
    val = omega_e(x_pair[0], y_pair[1]) - omega_e(x_pair[1], y_pair[0])
    if val.im != 0:
        raise ConstructionError("tensor metric is not real on real points")
    return val.re


def _transported_forms(n, momentum, kdim):
    """Metric and 2-forms on the full basis via a flat-model isometry.

    The momentum Gram matrix pairs (if_i h, ie_i h~) and (f_i h~, e_i h)
    hyperbolically; the explicit rational isometry with the flat model
    transports I, S, T, giving forms that satisfy the quaternionic
    relations by construction.  The holonomy directions are null.
    """
    from .flat import flat_structure

    nm = len(momentum)
    gram_m = [[_tensor_metric(momentum[i], momentum[j]) for j in range(nm)]
              for i in range(nm)]
    flat = flat_structure(n)
    # phi maps flat slot basis (1, i, s, t) to momentum combinations
    # (m1 + m4/2, m2 + m3/2, m1 - m4/2, m2 - m3/2)
    phi = linalg.zeros(nm, nm)
    for i in range(n):
        base = 4 * i
        half = Fraction(1, 2)
        phi[base + 0][base + 0] = Fraction(1)   # 1 -> m1 + m4/2
        phi[base + 3][base + 0] = half
        phi[base + 1][base + 1] = Fraction(1)   # i -> m2 + m3/2
        phi[base + 2][base + 1] = half
        phi[base + 0][base + 2] = Fraction(1)   # s -> m1 - m4/2
        phi[base + 3][base + 2] = -half
        phi[base + 1][base + 3] = Fraction(1)   # t -> m2 - m3/2
        phi[base + 2][base + 3] = -half
    # verify the isometry exactly
    lhs = linalg.mat_mul(linalg.transpose(phi), linalg.mat_mul(gram_m, phi))
    if lhs != flat.G:
        raise ConstructionError("flat-model transport failed the metric check")
    phi_inv = linalg.inverse(phi)

    def embed(mat_m):
        out = linalg.zeros(kdim + nm, kdim + nm)
        for i in range(nm):
            for j in range(nm):
                out[kdim + i][kdim + j] = mat_m[i][j]
        return out

    metric = embed(gram_m)
    omega = {}
    for name in ("I", "S", "T"):
        endo_m = linalg.mat_mul(phi, linalg.mat_mul(flat.endomorphism(name),
                                                    phi_inv))
        om = linalg.mat_mul(linalg.transpose(endo_m), gram_m)
        omega[name] = embed(om)
    return metric, omega
