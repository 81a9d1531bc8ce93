import random
from fractions import Fraction

from spliths.lp import EQ, GE, LE, lp_feasible, solve_lp, verify_farkas


def _check_witness(n, cons, x):
    for coeffs, rel, rhs in cons:
        lhs = sum(c * v for c, v in zip(coeffs, x))
        if rel == LE:
            assert lhs <= rhs
        elif rel == GE:
            assert lhs >= rhs
        else:
            assert lhs == rhs


def test_origin_feasible():
    r = lp_feasible(1, [([1], GE, 0), ([-1], GE, 0)])
    assert r.status == "optimal" and r.x == [0]


def test_infeasible_with_certificate():
    cons = [([1], GE, 1), ([-1], GE, 0)]
    r = lp_feasible(1, cons)
    assert r.status == "infeasible"
    assert verify_farkas(1, cons, r.farkas)


def test_bounded_polytope_vertex():
    cons = [([1, 1], LE, 4), ([1, 0], GE, 1), ([0, 1], GE, 1)]
    r = solve_lp(2, cons, objective=[1, 1], maximize=True)
    assert r.status == "optimal" and r.value == 4
    _check_witness(2, cons, r.x)
    r = solve_lp(2, cons, objective=[1, 1])
    assert r.value == 2 and r.x == [1, 1]


def test_unbounded():
    assert solve_lp(1, [([1], GE, 0)], objective=[1],
                    maximize=True).status == "unbounded"


def test_free_variables_reach_negative_values():
    r = solve_lp(1, [([1], LE, -5)], objective=[1], maximize=True)
    assert r.status == "optimal" and r.value == -5


def test_nonneg_variables():
    r = solve_lp(2, [([1, 1], EQ, 1)], objective=[1, 0], nonneg={0, 1})
    assert r.status == "optimal" and r.value == 0 and r.x == [0, 1]
    cons = [([1, 0], LE, -1)]
    r = solve_lp(2, cons, nonneg={0, 1})
    assert r.status == "infeasible"
    assert verify_farkas(2, cons, r.farkas, nonneg={0, 1})


def test_verify_farkas_rejects_bad_signs():
    cons = [([1], GE, 1), ([-1], GE, 0)]
    assert not verify_farkas(1, cons, [-1, -1])
    assert not verify_farkas(1, cons, [1, 2])  # functional does not vanish
    assert not verify_farkas(1, cons, [0, 0])  # rhs combination not positive


def test_random_systems_always_verified():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 4)
        cons = []
        for _ in range(rng.randint(1, 6)):
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
            rel = rng.choice([LE, GE, EQ])
            cons.append((coeffs, rel, Fraction(rng.randint(-5, 5))))
        res = lp_feasible(n, cons)
        if res.status == "optimal":
            _check_witness(n, cons, res.x)
        else:
            assert res.status == "infeasible"
            assert verify_farkas(n, cons, res.farkas)


def test_random_optima_are_optimal_among_grid(rng):
    # oracle: compare against brute-force over integer grid points that are
    # feasible; the LP optimum must dominate all of them
    for _ in range(40):
        n = rng.randint(1, 2)
        cons = [([Fraction(rng.randint(-3, 3)) for _ in range(n)],
                 rng.choice([LE, GE]), Fraction(rng.randint(-4, 4)))
                for _ in range(rng.randint(1, 4))]
        # bound the box so the LP is bounded
        for i in range(n):
            e = [Fraction(0)] * n
            e[i] = Fraction(1)
            cons.append((list(e), LE, Fraction(5)))
            cons.append((list(e), GE, Fraction(-5)))
        obj = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        res = solve_lp(n, cons, objective=obj, maximize=True)
        if res.status != "optimal":
            continue
        grid = range(-5, 6)
        pts = [[Fraction(a)] for a in grid] if n == 1 else [
            [Fraction(a), Fraction(b)] for a in grid for b in grid]
        for p in pts:
            ok = True
            for coeffs, rel, rhs in cons:
                lhs = sum(c * v for c, v in zip(coeffs, p))
                ok = ok and (lhs <= rhs if rel == LE else lhs >= rhs)
            if ok:
                assert sum(c * v for c, v in zip(obj, p)) <= res.value
