"""Exact rational linear programming via two-phase simplex with Bland's rule.

Variables are free (internally split into nonnegative pairs).  Feasibility
answers are exact: a feasible witness is returned as Fractions, and an
infeasible system comes with a Farkas combination that is re-verified before
being handed out.  Problem sizes in this package are tiny, so the plain
dense tableau is perfectly adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import as_fraction

LE, GE, EQ = "<=", ">=", "=="

_MAX_PIVOTS = 200_000


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list | None = None
    value: Fraction | None = None
    farkas: list | None = None  # per-constraint multipliers when infeasible


def _norm_constraints(nvars, constraints):
    out = []
    for coeffs, rel, rhs in constraints:
        coeffs = [as_fraction(c) for c in coeffs]
        if len(coeffs) != nvars:
            raise ValueError("constraint arity %d != %d" % (len(coeffs), nvars))
        if rel not in (LE, GE, EQ):
            raise ValueError("bad relation %r" % rel)
        out.append((coeffs, rel, as_fraction(rhs)))
    return out


def verify_farkas(nvars, constraints, mult, nonneg=()) -> bool:
    """Check that `mult` is a valid infeasibility certificate.

    Requires mult_i >= 0 on ">=" rows, <= 0 on "<=" rows, free on "==".
    The combined functional must vanish on free variables (be <= 0 on
    variables declared nonnegative) while the combined rhs is positive.
    """
    constraints = _norm_constraints(nvars, constraints)
    nonneg = set(nonneg)
    if len(mult) != len(constraints):
        return False
    combo = [Fraction(0)] * nvars
    total = Fraction(0)
    for m, (coeffs, rel, rhs) in zip(mult, constraints):
        m = as_fraction(m)
        if rel == GE and m < 0:
            return False
        if rel == LE and m > 0:
            return False
        for j in range(nvars):
            combo[j] += m * coeffs[j]
        total += m * rhs
    for j, c in enumerate(combo):
        if j in nonneg:
            if c > 0:
                return False
        elif c != 0:
            return False
    return total > 0


def _pivot(tab, rhs, basis, row, col):
    inv = Fraction(1) / tab[row][col]
    tab[row] = [e * inv for e in tab[row]]
    rhs[row] *= inv
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [a - f * b for a, b in zip(tab[i], tab[row])]
            rhs[i] -= f * rhs[row]
    basis[row] = col


def _simplex(tab, rhs, basis, cost, banned):
    """Minimize cost over the tableau; Bland's rule.  Returns status."""
    ncols = len(tab[0]) if tab else 0
    # reduced-cost row r_j = c_j - c_B . column_j, maintained across pivots
    zrow = list(cost)
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb != 0:
            zrow = [z - cb * a for z, a in zip(zrow, tab[i])]
    basic = set(basis)
    for _ in range(_MAX_PIVOTS):
        entering = None
        for j in range(ncols):
            if zrow[j] < 0 and j not in banned and j not in basic:
                entering = j
                break
        if entering is None:
            return "optimal"
        leaving = None
        best = None
        for i in range(len(tab)):
            if tab[i][entering] > 0:
                ratio = rhs[i] / tab[i][entering]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            return "unbounded:%d" % entering
        basic.discard(basis[leaving])
        basic.add(entering)
        _pivot(tab, rhs, basis, leaving, entering)
        f = zrow[entering]
        if f != 0:
            zrow = [z - f * a for z, a in zip(zrow, tab[leaving])]
    raise RuntimeError("simplex failed to terminate")


def solve_lp(nvars, constraints, objective=None, maximize=False,
             nonneg=()) -> LPResult:
    """Solve min/max objective . x subject to the constraint list.

    constraints: iterable of (coeffs, rel, rhs) with rel in {"<=", ">=", "=="}.
    objective None means pure feasibility.  Variables listed in `nonneg` are
    constrained to x_j >= 0 natively (no sign splitting).
    """
    constraints = _norm_constraints(nvars, constraints)
    nonneg = set(nonneg)
    m = len(constraints)
    flips = []
    rows = []
    for coeffs, rel, rhs in constraints:
        # flip rows so rhs >= 0, and turn ">= 0" into "<= 0" so the slack
        # can start basic (no artificial variable needed)
        if rhs < 0 or (rel == GE and rhs == 0):
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
            flips.append(Fraction(-1))
        else:
            flips.append(Fraction(1))
        rows.append((coeffs, rel, rhs))

    # column layout: one column per variable, plus a negative-part column
    # for every free (sign-unrestricted) variable
    neg_col = {}
    at = nvars
    for j in range(nvars):
        if j not in nonneg:
            neg_col[j] = at
            at += 1
    nslack = sum(1 for _, rel, _ in rows if rel != EQ)
    nart = sum(1 for _, rel, _ in rows if rel != LE)
    ncols = at + nslack + nart
    nx = at
    tab = []
    rhs_col = []
    basis = []
    init_basis = []
    art_cols = set()
    s_at = nx
    a_at = nx + nslack
    for coeffs, rel, rhs in rows:
        row = [Fraction(0)] * ncols
        for j, c in enumerate(coeffs):
            row[j] = c
            if j in neg_col:
                row[neg_col[j]] = -c
        if rel == LE:
            row[s_at] = Fraction(1)
            basis.append(s_at)
            init_basis.append(s_at)
            s_at += 1
        elif rel == GE:
            row[s_at] = Fraction(-1)
            s_at += 1
            row[a_at] = Fraction(1)
            basis.append(a_at)
            init_basis.append(a_at)
            art_cols.add(a_at)
            a_at += 1
        else:
            row[a_at] = Fraction(1)
            basis.append(a_at)
            init_basis.append(a_at)
            art_cols.add(a_at)
            a_at += 1
        tab.append(row)
        rhs_col.append(rhs)

    # phase 1
    if art_cols:
        cost1 = [Fraction(0)] * ncols
        for j in art_cols:
            cost1[j] = Fraction(1)
        status = _simplex(tab, rhs_col, basis, cost1, banned=set())
        assert status == "optimal"
        p1val = sum(rhs_col[i] for i in range(len(tab)) if basis[i] in art_cols)
        if p1val > 0:
            y = []
            for i in range(m):
                col = init_basis[i]
                yi = sum(cost1[basis[r]] * tab[r][col] for r in range(len(tab))
                         if cost1[basis[r]] != 0)
                y.append(yi)
            mult = [f * yi for f, yi in zip(flips, y)]
            if not verify_farkas(nvars, constraints, mult, nonneg):
                raise AssertionError("extracted Farkas certificate failed to verify")
            return LPResult(status="infeasible", farkas=mult)
        # drive artificials out of the basis (or drop redundant rows)
        drop = []
        for i in range(len(tab)):
            if basis[i] in art_cols:
                col = next((j for j in range(nx + nslack)
                            if tab[i][j] != 0), None)
                if col is None:
                    drop.append(i)
                else:
                    _pivot(tab, rhs_col, basis, i, col)
        for i in reversed(drop):
            del tab[i], rhs_col[i], basis[i]

    def witness():
        vals = [Fraction(0)] * ncols
        for i, b in enumerate(basis):
            vals[b] = rhs_col[i]
        return [vals[j] - (vals[neg_col[j]] if j in neg_col else 0)
                for j in range(nvars)]

    if objective is None:
        return LPResult(status="optimal", x=witness())

    cost2 = [Fraction(0)] * ncols
    for j, c in enumerate(objective):
        c = as_fraction(c)
        if maximize:
            c = -c
        cost2[j] = c
        if j in neg_col:
            cost2[neg_col[j]] = -c
    status = _simplex(tab, rhs_col, basis, cost2, banned=art_cols)
    if status.startswith("unbounded"):
        return LPResult(status="unbounded")
    x = witness()
    val = sum(as_fraction(c) * xi for c, xi in zip(objective, x))
    return LPResult(status="optimal", x=x, value=val)


def lp_feasible(nvars, constraints) -> LPResult:
    """Exact feasibility: witness or verified Farkas certificate."""
    return solve_lp(nvars, constraints, objective=None)
