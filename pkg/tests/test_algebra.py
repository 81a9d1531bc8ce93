import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spliths.algebra import (BASIS, BMatrix, BVector, I, ONE, S, T,
                             SplitQuaternion, Square, abelian_element,
                             classify_square, classify_square_criterion,
                             from_complex_pair, group_membership,
                             module_action, to_complex_pair)
from spliths.exact import ComplexRational

from conftest import rand_bvector, rand_group_matrix, rand_quat, rand_unit_quat

fractions_st = st.fractions(min_value=-6, max_value=6, max_denominator=6)
quat_st = st.builds(SplitQuaternion, fractions_st, fractions_st,
                    fractions_st, fractions_st)


def test_multiplication_table():
    assert I * I == SplitQuaternion(-1)
    assert S * S == ONE
    assert T * T == ONE
    assert I * S == T
    assert S * I == -T
    assert I * T == -S
    assert T * I == S
    assert S * T == -I
    assert T * S == I


def test_expanded_products():
    assert ONE * (I + S) == I + S
    assert (I + S) * (I - S) == SplitQuaternion(-2, 0, 0, -2)


def test_conjugation_and_inner():
    p = SplitQuaternion(1, 1, 1, 0)
    assert p.conj() == SplitQuaternion(1, -1, -1, 0)
    assert ONE.inner(ONE) == 1
    assert (I * S).norm_sq() == -1 == I.norm_sq() * S.norm_sq()


@settings(max_examples=200, deadline=None)
@given(quat_st, quat_st, quat_st)
def test_algebra_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p * q).conj() == q.conj() * p.conj()
    assert (p * q).norm_sq() == p.norm_sq() * q.norm_sq()
    assert p.inner(q) == (p.conj() * q).real()


def test_classification_examples():
    assert classify_square(I) is Square.MINUS_ONE
    assert classify_square(ONE) is Square.PLUS_ONE
    assert classify_square(-ONE) is Square.PLUS_ONE
    assert classify_square(I + S) is Square.NEITHER
    assert (I + S) * (I + S) == SplitQuaternion(0)
    # interior point of the criterion: y^2 - u^2 - v^2 = -1
    p = SplitQuaternion(0, 2, 2, 1)
    assert classify_square(p) is Square.PLUS_ONE


@settings(max_examples=300, deadline=None)
@given(quat_st)
def test_classification_criterion_agrees_with_squaring(p):
    assert classify_square(p) is classify_square_criterion(p)


def test_bvector_inner_signature():
    basis = []
    for slot in range(2):
        for q in BASIS:
            entries = [SplitQuaternion(0)] * 2
            entries[slot] = q
            basis.append(BVector(entries))
    gram = [[x.inner(y) for y in basis] for x in basis]
    diag = [gram[i][i] for i in range(8)]
    assert sorted(diag) == [-1] * 4 + [1] * 4
    assert all(gram[i][j] == 0 for i in range(8) for j in range(8) if i != j)


def test_group_membership():
    assert group_membership(BMatrix.identity(2), "group")
    circle = abelian_element([(Fraction(3, 5), Fraction(4, 5))], "torus")
    assert group_membership(circle, "group")
    assert not group_membership(BMatrix.diagonal([SplitQuaternion(2)]), "group")
    # algebra: imaginary diagonal entries
    elem = BMatrix.diagonal([I + S])
    assert group_membership(elem, "algebra")
    assert not group_membership(BMatrix.identity(1), "algebra")
    with pytest.raises(ValueError):
        group_membership(BMatrix.identity(1), "unitary")


def test_module_action_identity_and_kernel(rng):
    xi = rand_bvector(rng, 2)
    assert module_action(BMatrix.identity(2), ONE, xi) == xi
    minus = BMatrix.diagonal([SplitQuaternion(-1)] * 2)
    assert module_action(minus, SplitQuaternion(-1), xi) == xi


def test_module_action_rejects_nonunit(rng):
    xi = rand_bvector(rng, 1)
    with pytest.raises(ValueError):
        module_action(BMatrix.identity(1), SplitQuaternion(2), xi)
    with pytest.raises(ValueError):
        module_action(BMatrix.diagonal([SplitQuaternion(2)]), ONE, xi)


def test_module_action_is_isometric(rng):
    for _ in range(1000):
        n = rng.randint(1, 3)
        a = rand_group_matrix(rng, n)
        p = rand_unit_quat(rng, factors=2)
        xi, eta = rand_bvector(rng, n), rand_bvector(rng, n)
        assert (module_action(a, p, xi).inner(module_action(a, p, eta))
                == xi.inner(eta))


def test_complex_pair_round_trip(rng):
    xi = rand_bvector(rng, 3)
    z, w = to_complex_pair(xi)
    assert from_complex_pair(z, w) == xi
    assert to_complex_pair(BVector([ONE]))[0][0] == ComplexRational(1)
    z, w = to_complex_pair(BVector([S]))
    assert (z[0], w[0]) == (ComplexRational(0), ComplexRational(1))
    z, w = to_complex_pair(BVector([T]))
    assert (z[0], w[0]) == (ComplexRational(0), ComplexRational(0, 1))


def test_complex_structure_is_right_multiplication(rng):
    # xi -> -xi i acts as (z, w) -> (-z i, w i)
    xi = rand_bvector(rng, 2)
    z, w = to_complex_pair(xi)
    z2, w2 = to_complex_pair(xi.right_mul(SplitQuaternion(0, -1)))
    i = ComplexRational(0, 1)
    assert all(a == -(b * i) for a, b in zip(z2, z))
    assert all(a == b * i for a, b in zip(w2, w))


def test_abelian_elements():
    assert abelian_element([(1, 0), (1, 0)], "torus") == BMatrix.identity(2)
    split = abelian_element([(Fraction(5, 4), Fraction(3, 4))], "split")
    assert group_membership(split, "group")
    assert split.rows[0][0].norm_sq() == 1
    torus = abelian_element([(Fraction(3, 5), Fraction(4, 5))], "torus")
    assert torus.conj_transpose() * torus == BMatrix.identity(1)
    with pytest.raises(ValueError):
        abelian_element([(1, 1)], "torus")
    with pytest.raises(ValueError):
        abelian_element([(2, 1)], "split")
