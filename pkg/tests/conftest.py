import random
from fractions import Fraction

import pytest

from spliths.algebra import BMatrix, BVector, SplitQuaternion, abelian_element


def rand_fraction(rng, lo=-9, hi=9, maxden=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, maxden))


def rand_quat(rng, lo=-9, hi=9, maxden=4):
    return SplitQuaternion(*[rand_fraction(rng, lo, hi, maxden)
                             for _ in range(4)])


_CIRCLE = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)),
           (Fraction(8, 17), Fraction(15, 17)), (Fraction(1), Fraction(0))]
_HYPERBOLA = [(Fraction(5, 4), Fraction(3, 4)), (Fraction(13, 12), Fraction(5, 12)),
              (Fraction(17, 8), Fraction(15, 8)), (Fraction(1), Fraction(0))]


def rand_unit_quat(rng, factors=3):
    """Random product of circle and hyperbola units; |q|^2 = 1 exactly."""
    q = SplitQuaternion(1)
    for _ in range(factors):
        c, s = rng.choice(_CIRCLE)
        if rng.random() < 0.5:
            c, s = c, -s
        q = q * SplitQuaternion(c, s)
        ch, sh = rng.choice(_HYPERBOLA)
        if rng.random() < 0.5:
            ch, sh = ch, -sh
        q = q * SplitQuaternion(ch, 0, sh)
    return q


def rand_group_matrix(rng, n):
    """Random element of the symplectic group: products of generators."""
    mats = []
    for _ in range(3):
        kind = rng.randrange(3)
        if kind == 0:  # diagonal torus element
            mats.append(abelian_element(
                [rng.choice(_CIRCLE) for _ in range(n)], "torus"))
        elif kind == 1:  # diagonal split element
            mats.append(abelian_element(
                [rng.choice(_HYPERBOLA) for _ in range(n)], "split"))
        else:  # unit-quaternion scalar diagonal
            mats.append(BMatrix.diagonal([rand_unit_quat(rng, 2)
                                          for _ in range(n)]))
    out = mats[0]
    for m in mats[1:]:
        out = out * m
    return out


def rand_bvector(rng, n, lo=-4, hi=4):
    return BVector([rand_quat(rng, lo, hi, 3) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240803)
