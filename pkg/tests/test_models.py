"""Model spaces of the Heisenberg group and the canonical intertwiners
between them.

At d = n = 1 the three Lagrangian subspaces give 2-dimensional models; the
composite of the three canonical intertwiners around a transversal triangle
is a scalar, frozen below for every ordering of {std, dual, third}.
"""

import itertools

import pytest

from weil2.cyclotomic import Cyc8, I, ONE
from weil2.galois import ring
from weil2.heisenberg import all_h_elements, h_mul
from weil2.models import (
    Model, composition_scalar, formula_scalar, gauss_scalar,
    intertwiner_matrix, matrix_inverse_cyc, matrix_mul_cyc, standard_model,
)
from weil2.symplectic import SympSpace, enumerate_enhanced

MINUS_FOUR = Cyc8.from_rational(-4)


def _space():
    return SympSpace(ring(1), 1)


def _named_enhanced(sp):
    std = sp.standard_lagrangian()
    dual = sp.dual_standard_lagrangian()
    third = next(s for s in sp.enumerate_lagrangians() if s not in (std, dual))
    return {
        name: sp.enhance_from_lift(sp.initial_lift(rows))
        for name, rows in (("std", std), ("dual", dual), ("third", third))
    }


def test_model_dimensions():
    for d, n in ((1, 1), (2, 1), (1, 2)):
        sp = SympSpace(ring(d), n)
        for e in enumerate_enhanced(sp):
            assert Model(sp, e).dim == 2 ** (d * n)


def test_pi_is_a_representation():
    sp = _space()
    m = standard_model(sp)
    elems = list(all_h_elements(sp))
    for h1 in elems:
        for h2 in elems:
            lhs = matrix_mul_cyc(m.pi_matrix(h1), m.pi_matrix(h2))
            assert lhs == m.pi_matrix(h_mul(sp, h1, h2))


def test_pi_central_character():
    """The center acts by i^z; the representation has central character psi."""
    sp = _space()
    for e in enumerate_enhanced(sp):
        m = Model(sp, e)
        for z in range(4):
            mat = m.pi_matrix((sp.zero_vec_k(), z))
            for r in range(m.dim):
                for c in range(m.dim):
                    want = Cyc8.i_pow(z) if r == c else Cyc8.from_rational(0)
                    assert mat[r][c] == want


def test_intertwiner_dual_to_std_is_fourier():
    sp = _space()
    e = _named_enhanced(sp)
    F = intertwiner_matrix(Model(sp, e["std"]), Model(sp, e["dual"]))
    assert F == ((ONE, ONE), (ONE, -ONE))


def test_intertwiner_property():
    """F_{M,L} pi_L(h) = pi_M(h) F_{M,L} for every h and every pair."""
    sp = _space()
    enh = enumerate_enhanced(sp)
    elems = list(all_h_elements(sp))
    for eM in enh:
        for eL in enh:
            if not sp.transversal_k(eM.rows, eL.rows):
                continue
            mM, mL = Model(sp, eM), Model(sp, eL)
            F = intertwiner_matrix(mM, mL)
            for h in elems:
                assert matrix_mul_cyc(F, mL.pi_matrix(h)) == \
                    matrix_mul_cyc(mM.pi_matrix(h), F)


def test_intertwiner_entries_are_fourth_roots():
    """Every entry of a canonical intertwiner is a fourth root of unity;
    in particular the matrices are dense."""
    sp = _space()
    enh = enumerate_enhanced(sp)
    mu4 = {Cyc8.i_pow(k) for k in range(4)}
    for eM in enh:
        for eL in enh:
            if not sp.transversal_k(eM.rows, eL.rows):
                continue
            F = intertwiner_matrix(Model(sp, eM), Model(sp, eL))
            for row in F:
                for x in row:
                    assert x in mu4


FROZEN_TRIANGLE = {
    ("std", "dual", "third"): ONE - I,
    ("std", "third", "dual"): ONE + I,
    ("dual", "std", "third"): ONE + I,
    ("dual", "third", "std"): ONE - I,
    ("third", "std", "dual"): ONE - I,
    ("third", "dual", "std"): ONE + I,
}


def test_composition_scalar_frozen_triangle():
    sp = _space()
    e = _named_enhanced(sp)
    for order, want in FROZEN_TRIANGLE.items():
        got = composition_scalar(sp, *(e[name] for name in order))
        assert got == want
        assert got ** 4 == MINUS_FOUR


def test_three_routes_agree():
    """Composite, closed formula, and Gauss-sum route give one scalar."""
    sp = _space()
    enh = enumerate_enhanced(sp)
    by_rows = {}
    for e in enh:
        by_rows.setdefault(e.rows, []).append(e)
    rows = sorted(by_rows)
    count = 0
    for rN, rM, rL in itertools.permutations(rows, 3):
        for eN in by_rows[rN]:
            for eM in by_rows[rM]:
                for eL in by_rows[rL]:
                    c = composition_scalar(sp, eN, eM, eL)
                    assert formula_scalar(sp, eN, eM, eL) == c
                    assert gauss_scalar(sp, eN, eM, eL) == c
                    assert c ** 4 == MINUS_FOUR
                    count += 1
    assert count == 48


def test_matrix_inverse_cyc():
    F = ((ONE, ONE), (ONE, -ONE))
    Finv = matrix_inverse_cyc(F)
    prod = matrix_mul_cyc(F, Finv)
    for r in range(2):
        for c in range(2):
            assert prod[r][c] == (ONE if r == c else Cyc8.from_rational(0))
