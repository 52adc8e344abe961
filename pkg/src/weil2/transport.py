"""Scaled transports: formal p-th-root scalars attached to chains of
intertwiners, with exact equality testing.

A ScaledTransport (s, [P1, .., Pk], p) stands for s^{1/p} * P1 ... Pk
without ever extracting the root: two transports are equal when their
chain products are proportional, P = r * P', and s == s' * r^p.

The trivializing scalar for the intertwiner groupoid is the rational
    A = (-1)^{dn} / 4^{dn}
(with p = 4); the composite of two canonical intertwiners is C * F with
C^4 = (-1)^{dn} 4^{dn}, so A-scaled transports compose on the nose.

At the oriented level the finer scalar (p = 2) is
    A_split(Mt, Lt) / |M|^2,   A_split = G([R^n, tr B])^2,
where B = diag(1, .., 1, w) and w is the wedge pairing of the two
orientations.  Its square recovers A by the fourth-power Gauss identity
G([X])^4 = (-1)^{rk} 4^{rk}.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc8
from .models import Model, intertwiner_matrix, matrix_mul_cyc
from .witt import gauss_sum, trace_form


class ScaledTransport:
    __slots__ = ("scalar", "chain", "power")

    def __init__(self, scalar, chain, power):
        self.scalar = scalar
        self.chain = tuple(chain)
        self.power = power

    def product(self):
        P = self.chain[0]
        for Q in self.chain[1:]:
            P = matrix_mul_cyc(P, Q)
        return P

    def compose(self, other):
        """Operator product self . other (apply other first)."""
        if self.power != other.power:
            raise ValueError("cannot compose transports of different powers")
        return ScaledTransport(
            self.scalar * other.scalar, self.chain + other.chain, self.power
        )

    def __eq__(self, other):
        """s1^{1/p} P1 == s2^{1/p} P2: with P1 = r P2 this is s1 r^p == s2."""
        if not isinstance(other, ScaledTransport) or self.power != other.power:
            return NotImplemented
        r = matrix_ratio(self.product(), other.product())
        if r is None:
            return False
        return self.scalar * r ** self.power == other.scalar

    def __repr__(self):
        return (f"ScaledTransport(scalar={self.scalar}, "
                f"chain_len={len(self.chain)}, power={self.power})")


def matrix_ratio(P, Q):
    """r with P == r * Q, or None if not proportional (Q must be nonzero
    somewhere P is)."""
    r = None
    for i in range(len(P)):
        for j in range(len(P[0])):
            if not Q[i][j].is_zero():
                r = P[i][j] / Q[i][j]
                break
        if r is not None:
            break
    if r is None:
        return None
    for i in range(len(P)):
        for j in range(len(P[0])):
            if P[i][j] != r * Q[i][j]:
                return None
    return r


def trivializing_scalar(space):
    dn = space.dn
    return Cyc8.from_rational(Fraction((-1) ** dn, 4 ** dn))


def first_transversal_rows(space, rows1, rows2):
    for rows in space.enumerate_lagrangians():
        if space.transversal_k(rows, rows1) and space.transversal_k(rows, rows2):
            return rows
    raise ValueError("no common transversal subspace found")


def trivialization_transport(space, eM, eL):
    """T_{M,L}: power-4 transport from the model of (L, alpha_L) to the
    model of (M, alpha_M); routed through the first common transversal
    when the pair itself is not transversal."""
    A = trivializing_scalar(space)
    if eM.rows != eL.rows and space.transversal_k(eM.rows, eL.rows):
        F = intertwiner_matrix(Model(space, eM), Model(space, eL))
        return ScaledTransport(A, [F], 4)
    rows = first_transversal_rows(space, eM.rows, eL.rows)
    eK = space.enhance_from_lift(space.initial_lift(rows))
    mK = Model(space, eK)
    F1 = intertwiner_matrix(Model(space, eM), mK)
    F2 = intertwiner_matrix(mK, Model(space, eL))
    return ScaledTransport(A * A, [F1, F2], 4)


def splitting_scalar(space, oM, oL):
    """A_split(Mt, Lt) / |M|^2 for a transversal oriented pair."""
    R = space.R
    w = space.wedge_pairing(oL, oM)
    B = tuple(
        tuple((R.one if i < space.n - 1 else w) if i == j else 0
              for j in range(space.n))
        for i in range(space.n)
    )
    G = gauss_sum(trace_form(R, B))
    return (G * G) * Cyc8.from_rational(Fraction(1, 4 ** space.dn))


def enhanced_of_oriented(space, oX):
    return space.enhance_from_lift(oX.basis)


def splitting_transport(space, oM, oL):
    """S_{Mt,Lt}: power-2 transport refining T over oriented Lagrangians."""
    from .symplectic import OrientedLagrangian
    eM = enhanced_of_oriented(space, oM)
    eL = enhanced_of_oriented(space, oL)
    if eM.rows != eL.rows and space.transversal_k(eM.rows, eL.rows):
        F = intertwiner_matrix(Model(space, eM), Model(space, eL))
        return ScaledTransport(splitting_scalar(space, oM, oL), [F], 2)
    rows = first_transversal_rows(space, eM.rows, eL.rows)
    oK = OrientedLagrangian(space.initial_lift(rows), space.R.one)
    eK = enhanced_of_oriented(space, oK)
    mK = Model(space, eK)
    F1 = intertwiner_matrix(Model(space, eM), mK)
    F2 = intertwiner_matrix(mK, Model(space, eL))
    s = splitting_scalar(space, oM, oK) * splitting_scalar(space, oK, oL)
    return ScaledTransport(s, [F1, F2], 2)


def transport_square(S):
    """The power-4 transport with the same chain and squared scalar."""
    return ScaledTransport(S.scalar * S.scalar, S.chain, 4)
