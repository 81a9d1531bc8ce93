"""The flat hypersymplectic structure on B^n viewed as R^{4n}.

Coordinates are blocked per quaternionic slot in the order (x, y, u, v),
i.e. (Re z, Im z, Re w, Im w) under the complex splitting xi = z + w s.
I, S, T are the right multiplications by -i, s, t; all coefficients are
constant, so the three 2-forms and the associated 4-form are closed for free.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .algebra import BASIS, SplitQuaternion

_SLOT_METRIC = (Fraction(1), Fraction(1), Fraction(-1), Fraction(-1))


def right_mult_matrix(q: SplitQuaternion, n: int):
    """Real 4n x 4n matrix of xi -> xi q on B^n."""
    cols = [(b * q).coefficients() for b in BASIS]
    block = [[cols[j][i] for j in range(4)] for i in range(4)]
    out = linalg.zeros(4 * n, 4 * n)
    for s in range(n):
        for i in range(4):
            for j in range(4):
                out[4 * s + i][4 * s + j] = block[i][j]
    return out


def left_mult_matrix(q: SplitQuaternion, n: int):
    """Real 4n x 4n matrix of xi -> q xi on B^n."""
    cols = [(q * b).coefficients() for b in BASIS]
    block = [[cols[j][i] for j in range(4)] for i in range(4)]
    out = linalg.zeros(4 * n, 4 * n)
    for s in range(n):
        for i in range(4):
            for j in range(4):
                out[4 * s + i][4 * s + j] = block[i][j]
    return out


def metric_matrix(n: int):
    out = linalg.zeros(4 * n, 4 * n)
    for s in range(n):
        for i in range(4):
            out[4 * s + i][4 * s + i] = _SLOT_METRIC[i]
    return out


def _wedge_pair(alpha, beta, x1, x2, x3, x4):
    def a(u, v):
        return alpha(u, v)

    def b(u, v):
        return beta(u, v)

    return (a(x1, x2) * b(x3, x4) - a(x1, x3) * b(x2, x4)
            + a(x1, x4) * b(x2, x3) + a(x2, x3) * b(x1, x4)
            - a(x2, x4) * b(x1, x3) + a(x3, x4) * b(x1, x2))


class FlatStructure:
    """Endomorphisms I, S, T, the neutral metric g and the three 2-forms.

    The defining identities are I^2 = -1, S^2 = T^2 = +1, IS = T = -SI,
    g(I., I.) = g, g(S., S.) = -g = g(T., T.), and omega_a = g(a., .).
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.dim = 4 * n
        self.I = right_mult_matrix(SplitQuaternion(0, -1), n)
        self.S = right_mult_matrix(SplitQuaternion(0, 0, 1), n)
        self.T = right_mult_matrix(SplitQuaternion(0, 0, 0, 1), n)
        self.G = metric_matrix(n)
        self.omega_I = linalg.mat_mul(linalg.transpose(self.I), self.G)
        self.omega_S = linalg.mat_mul(linalg.transpose(self.S), self.G)
        self.omega_T = linalg.mat_mul(linalg.transpose(self.T), self.G)

    def _check_dim(self, *vectors):
        for v in vectors:
            if len(v) != self.dim:
                raise ValueError("expected vectors of dimension %d, got %d"
                                 % (self.dim, len(v)))

    def endomorphism(self, name: str):
        return {"I": self.I, "S": self.S, "T": self.T}[name]

    def form_matrix(self, name: str):
        return {"I": self.omega_I, "S": self.omega_S, "T": self.omega_T}[name]

    def metric(self, x, y) -> Fraction:
        self._check_dim(x, y)
        return linalg.vec_dot(x, linalg.mat_vec(self.G, y))

    def omega(self, name: str, x, y) -> Fraction:
        self._check_dim(x, y)
        return linalg.vec_dot(x, linalg.mat_vec(self.form_matrix(name), y))

    def evaluate(self, x, y):
        """(g, omega_I, omega_S, omega_T) on a pair of tangent vectors."""
        return (self.metric(x, y), self.omega("I", x, y),
                self.omega("S", x, y), self.omega("T", x, y))

    def four_form(self, x1, x2, x3, x4) -> Fraction:
        """omega_I ^ omega_I - omega_S ^ omega_S - omega_T ^ omega_T."""
        self._check_dim(x1, x2, x3, x4)

        def wi(u, v):
            return self.omega("I", u, v)

        def ws(u, v):
            return self.omega("S", u, v)

        def wt(u, v):
            return self.omega("T", u, v)

        return (_wedge_pair(wi, wi, x1, x2, x3, x4)
                - _wedge_pair(ws, ws, x1, x2, x3, x4)
                - _wedge_pair(wt, wt, x1, x2, x3, x4))

    def identities_hold(self) -> bool:
        """Exact check of the endomorphism and compatibility identities."""
        dim = self.dim
        ident = linalg.identity(dim)
        minus = [[-e for e in row] for row in ident]
        I, S, T, G = self.I, self.S, self.T, self.G
        checks = [
            linalg.mat_mul(I, I) == minus,
            linalg.mat_mul(S, S) == ident,
            linalg.mat_mul(T, T) == ident,
            linalg.mat_mul(I, S) == T,
            linalg.mat_mul(S, I) == [[-e for e in row] for row in T],
            # g(aX, aY) = +-g(X, Y) as A^T G A = +-G
            linalg.mat_mul(linalg.transpose(I), linalg.mat_mul(G, I)) == G,
            linalg.mat_mul(linalg.transpose(S), linalg.mat_mul(G, S)) == minusify(G),
            linalg.mat_mul(linalg.transpose(T), linalg.mat_mul(G, T)) == minusify(G),
        ]
        return all(checks)


def minusify(m):
    return [[-e for e in row] for row in m]


def flat_structure(n: int) -> FlatStructure:
    return FlatStructure(n)


def coordinate_vector(dim, k):
    v = [Fraction(0)] * dim
    v[k] = Fraction(1)
    return v
