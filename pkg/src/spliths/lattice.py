"""Integer lattice computations: Smith normal form and integral kernels.

The Smith form drives two decisions: whether a set of integer vectors
extends to a Z-basis of the lattice (all invariant factors 1), and finding
a lattice basis of ker(U) over Z.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg


def _int_matrix(m):
    return [[int(e) for e in row] for row in m]


def _eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class SmithForm:
    """P * M * Q = D diagonal with P, Q unimodular and d_i | d_{i+1}."""

    def __init__(self, p, d, q, factors):
        self.P = p
        self.D = d
        self.Q = q
        self.factors = factors


def smith_normal_form(m) -> SmithForm:
    """Smith normal form of an integer matrix (any shape).

    Returns SmithForm with nonnegative invariant factors in divisibility
    order.  The decomposition is verified exactly before returning.
    """
    a = _int_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    p = _eye(rows)
    q = _eye(cols)

    def row_op(i, j, f):  # row_i -= f * row_j
        a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        p[i] = [x - f * y for x, y in zip(p[i], p[j])]

    def col_op(i, j, f):  # col_i -= f * col_j
        for r in range(rows):
            a[r][i] -= f * a[r][j]
        for r in range(cols):
            q[r][i] -= f * q[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            q[r][i], q[r][j] = q[r][j], q[r][i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        p[i] = [-x for x in p[i]]

    t = 0
    while t < min(rows, cols):
        # move a nonzero entry of minimal absolute value to (t, t)
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                row_op(i, t, a[i][t] // a[t][t])
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                col_op(j, t, a[t][j] // a[t][t])
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility: fold any non-multiple into the pivot position
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # add row `bad` to row t
            continue
        t += 1

    factors = [a[i][i] for i in range(min(rows, cols))]
    form = SmithForm(p, a, q, factors)
    _verify_smith(m, form)
    return form


def _verify_smith(original, form):
    m = _int_matrix(original)
    pm = [[sum(x * y for x, y in zip(prow, col)) for col in zip(*m)]
          for prow in form.P]
    pmq = [[sum(x * y for x, y in zip(row, col)) for col in zip(*form.Q)]
           for row in pm]
    if pmq != form.D:
        raise AssertionError("smith decomposition failed to verify")
    for i in range(len(form.factors) - 1):
        di, dj = form.factors[i], form.factors[i + 1]
        if dj != 0 and di == 0:
            raise AssertionError("zero factor precedes nonzero factor")
        if di != 0 and dj % di != 0:
            raise AssertionError("invariant factors not in divisibility order")
    for u in (form.P, form.Q):
        d = linalg.det(linalg.mat(u))
        if d not in (1, -1):
            raise AssertionError("transform is not unimodular (det %s)" % d)


def extends_to_lattice_basis(columns) -> bool:
    """True iff the given integer vectors are part of a Z-basis of Z^n.

    columns: list of integer vectors (each of length n).  Equivalent to the
    matrix with these columns having all invariant factors equal to 1 and
    full column rank.
    """
    if not columns:
        return True
    n = len(columns[0])
    m = [[columns[j][i] for j in range(len(columns))] for i in range(n)]
    form = smith_normal_form(m)
    nonzero = [f for f in form.factors if f != 0]
    if len(nonzero) < len(columns):
        return False  # linearly dependent
    return all(f == 1 for f in nonzero)


def integral_kernel_basis(u):
    """Rational and integral bases of ker(U) for an integer matrix U (n x d).

    Returns (rational_basis, lattice_basis): the first is any basis of the
    kernel over Q, the second a Z-basis of ker(U) intersected with Z^d,
    read off the unimodular column transform of the Smith form.
    """
    rows = len(u)
    cols = len(u[0]) if rows else 0
    rational = linalg.kernel_basis(linalg.mat(u)) if rows else []
    if rows == 0:
        ident = _eye(cols)
        ints = [[Fraction(x) for x in row] for row in ident]
        return ints, ints
    form = smith_normal_form(u)
    r = len([f for f in form.factors if f != 0])
    lattice = []
    for j in range(r, cols):
        lattice.append([Fraction(form.Q[i][j]) for i in range(cols)])
    return rational, lattice
