"""Finite-dimensional real Lie algebras given by structure constants.

Includes the Jacobi and nilpotency checks, the Chevalley-Eilenberg
differential on invariant forms, closedness reports for 2-forms given as
wedge combinations, and recovery of an endomorphism from a metric and a
2-form.  The workhorse example is the 5-dimensional three-step nilpotent
algebra with brackets [E1,E2] = E3, [E3,E1] = E4, [E3,E2] = E5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exact import as_fraction


class LieAlgebra:
    """Structure constants c[i][j] = bracket of basis i, j as a vector."""

    def __init__(self, dim, brackets):
        """brackets: {(i, j): {k: coeff}} for i < j, zero omitted."""
        self.dim = dim
        table = [[[Fraction(0)] * dim for _ in range(dim)]
                 for _ in range(dim)]
        for (i, j), comps in brackets.items():
            if i == j:
                raise ValueError("diagonal bracket must vanish")
            for k, coeff in comps.items():
                coeff = as_fraction(coeff)
                table[i][j][k] = coeff
                table[j][i][k] = -coeff
        self.table = table

    def bracket_basis(self, i, j):
        return list(self.table[i][j])

    def bracket(self, x, y):
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                row = self.table[i][j]
                for k in range(self.dim):
                    if row[k] != 0:
                        out[k] += xi * yj * row[k]
        return out


def jacobi_check(alg: LieAlgebra):
    """Empty list when the Jacobi identity holds; else the failing triples."""
    violations = []
    dim = alg.dim
    basis = linalg.identity(dim)
    for i, j, k in itertools.combinations(range(dim), 3):
        total = [Fraction(0)] * dim
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = alg.bracket_basis(a, b)
            outer = alg.bracket(inner, basis[c])
            total = [t + o for t, o in zip(total, outer)]
        if any(t != 0 for t in total):
            violations.append(((i, j, k), total))
    return violations


def _span_basis(vectors):
    if not vectors:
        return []
    red, pivots = linalg.rref(vectors)
    return [red[r] for r in range(len(pivots))]


def nilpotency_step(alg: LieAlgebra):
    """Length of the lower central series, or None if not nilpotent."""
    current = linalg.identity(alg.dim)
    step = 0
    for _ in range(alg.dim + 1):
        step += 1
        nxt = []
        for i in range(alg.dim):
            ei = [Fraction(1) if j == i else Fraction(0)
                  for j in range(alg.dim)]
            for v in current:
                nxt.append(alg.bracket(ei, v))
        nxt = _span_basis(nxt)
        if not nxt:
            return step
        if len(nxt) == len(current) and _span_basis(current + nxt) == _span_basis(current):
            return None
        current = nxt
    return None


class Form:
    """Alternating multilinear form of degree 1, 2 or 3 on the basis."""

    def __init__(self, dim, degree, coeffs=None):
        self.dim = dim
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for idx, val in coeffs.items():
                self[idx] = val

    def _canon(self, idx):
        idx = tuple(idx)
        order = sorted(range(len(idx)), key=lambda p: idx[p])
        sign = 1
        perm = list(range(len(idx)))
        sorted_idx = tuple(sorted(idx))
        if len(set(idx)) != len(idx):
            return sorted_idx, 0
        # parity of the sorting permutation
        seen = [idx[p] for p in order]
        arr = list(idx)
        sign = 1
        for a in range(len(arr)):
            while arr[a] != seen[a]:
                b = arr.index(seen[a], a + 1)
                arr[a], arr[b] = arr[b], arr[a]
                sign = -sign
        return sorted_idx, sign

    def __setitem__(self, idx, val):
        key, sign = self._canon(idx)
        if sign == 0:
            if as_fraction(val) != 0:
                raise ValueError("repeated index with nonzero value")
            return
        val = sign * as_fraction(val)
        if val == 0:
            self.coeffs.pop(key, None)
        else:
            self.coeffs[key] = val

    def __getitem__(self, idx):
        key, sign = self._canon(idx)
        if sign == 0:
            return Fraction(0)
        return sign * self.coeffs.get(key, Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, Form) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def evaluate(self, *vectors):
        if len(vectors) != self.degree:
            raise ValueError("expected %d vectors" % self.degree)
        total = Fraction(0)
        for key, val in self.coeffs.items():
            for perm in itertools.permutations(range(self.degree)):
                sign = _perm_sign(perm)
                prod = val * sign
                for pos, axis in enumerate(key):
                    prod *= vectors[perm[pos]][axis]
                total += prod
        return total

    def __repr__(self):
        terms = ["%s*E%s" % (v, "^".join(str(i + 1) for i in k))
                 for k, v in sorted(self.coeffs.items())]
        return "Form(%s)" % (" + ".join(terms) or "0")


def _perm_sign(perm):
    sign = 1
    arr = list(perm)
    for a in range(len(arr)):
        while arr[a] != a:
            b = arr[a]
            arr[a], arr[b] = arr[b], arr[a]
            sign = -sign
    return sign


def wedge_form(dim, terms):
    """2-form from [(i, j, coeff), ...] with 0-based indices."""
    f = Form(dim, 2)
    for i, j, coeff in terms:
        f[(i, j)] = f[(i, j)] + as_fraction(coeff)
    return f


def ce_differential(alg: LieAlgebra, form: Form) -> Form:
    """Chevalley-Eilenberg differential of a left-invariant 1- or 2-form."""
    dim = alg.dim
    if form.degree == 1:
        out = Form(dim, 2)
        for i, j in itertools.combinations(range(dim), 2):
            br = alg.bracket_basis(i, j)
            val = -sum(form[(k,)] * br[k] for k in range(dim) if br[k] != 0)
            if val != 0:
                out[(i, j)] = out[(i, j)] + val
        return out
    if form.degree == 2:
        out = Form(dim, 3)
        for i, j, k in itertools.combinations(range(dim), 3):
            val = Fraction(0)
            for (a, b, c, sign) in ((i, j, k, -1), (i, k, j, 1), (j, k, i, -1)):
                br = alg.bracket_basis(a, b)
                val += sign * sum(form[(m, c)] * br[m]
                                  for m in range(dim) if br[m] != 0)
            if val != 0:
                out[(i, j, k)] = out[(i, j, k)] + val
        return out
    raise ValueError("degree must be 1 or 2")


def closedness_report(alg: LieAlgebra, named_terms):
    """Residues d(omega) for each named 2-form and its sign-flipped variant.

    named_terms: {name: [(i, j, coeff), ...]}.  The variant flips the sign
    of every term after the first, which is the natural typo candidate for
    a two-term wedge expression.
    """
    report = {}
    for name, terms in named_terms.items():
        printed = wedge_form(alg.dim, terms)
        flipped_terms = [terms[0]] + [(i, j, -c) for i, j, c in terms[1:]]
        flipped = wedge_form(alg.dim, flipped_terms)
        d_printed = ce_differential(alg, printed)
        d_flipped = ce_differential(alg, flipped)
        report[name] = {
            "printed_residue": d_printed,
            "printed_closed": d_printed.is_zero(),
            "variant_residue": d_flipped,
            "variant_closed": d_flipped.is_zero(),
        }
    return report


class DegenerateMetric(ValueError):
    pass


@dataclass
class EndoReport:
    matrix: list
    square: list
    square_is_minus_id: bool
    square_is_plus_id: bool
    metric_invariant: bool       # g(AX, AY) = g(X, Y)
    metric_anti_invariant: bool  # g(AX, AY) = -g(X, Y)


def endo_from_pair(metric, omega: Form, subspace):
    """Solve omega(X, Y) = g(A X, Y) for A on the span of `subspace`.

    metric: symmetric coefficient matrix on the full basis; subspace: list
    of basis indices or coordinate vectors.  Raises DegenerateMetric when g
    is singular on the subspace.
    """
    dim = len(metric)
    vecs = []
    for s in subspace:
        if isinstance(s, int):
            v = [Fraction(0)] * dim
            v[s] = Fraction(1)
            vecs.append(v)
        else:
            vecs.append([as_fraction(e) for e in s])
    gram = [[_bilinear(metric, x, y) for y in vecs] for x in vecs]
    if linalg.det(gram) == 0:
        raise DegenerateMetric("metric is singular on the subspace")
    om = [[omega.evaluate(x, y) for y in vecs] for x in vecs]
    a = linalg.endomorphism_from_forms(gram, om)
    sq = linalg.mat_mul(a, a)
    k = len(vecs)
    ident = linalg.identity(k)
    neg = [[-e for e in row] for row in ident]
    conj = linalg.mat_mul(linalg.transpose(a), linalg.mat_mul(gram, a))
    return EndoReport(
        matrix=a, square=sq,
        square_is_minus_id=(sq == neg),
        square_is_plus_id=(sq == ident),
        metric_invariant=(conj == gram),
        metric_anti_invariant=(conj == [[-e for e in row] for row in gram]),
    )


def _bilinear(metric, x, y):
    return sum(x[i] * metric[i][j] * y[j]
               for i in range(len(metric)) for j in range(len(metric))
               if metric[i][j] != 0)


def nilpotent5_example():
    """The 5-dim three-step nilpotent algebra with its printed forms.

    Returns (algebra, forms) where forms maps each 2-form name to its wedge
    terms (0-based indices): g is the symmetric pairing E1.E5 - E2.E4,
    omega_I = E1^E4 - E2^E5, omega_S = E1^E5 - E2^E4 (as printed; its
    closedness is what the report is for), omega_T = E1^E4 + E2^E5.
    """
    alg = LieAlgebra(5, {
        (0, 1): {2: 1},   # [E1, E2] = E3
        (2, 0): {3: 1},   # [E3, E1] = E4
        (2, 1): {4: 1},   # [E3, E2] = E5
    })
    forms = {
        "omega_I": [(0, 3, 1), (1, 4, -1)],
        "omega_S": [(0, 4, 1), (1, 3, -1)],
        "omega_T": [(0, 3, 1), (1, 4, 1)],
    }
    metric = linalg.zeros(5, 5)
    metric[0][4] = metric[4][0] = Fraction(1)
    metric[1][3] = metric[3][1] = Fraction(-1)
    return alg, forms, metric
