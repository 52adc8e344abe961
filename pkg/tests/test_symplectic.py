"""Lagrangian geometry of V = k^2n under the residue form, together with its
enhanced and oriented refinements over R = GR(4, d).

The census numbers are frozen from exhaustive enumeration:

  (d, n)   Lagrangians   lifts/subspace   enhancements/subspace   oriented
  (1, 1)        3              2                   2                 12
  (2, 1)        5              4                  16                240
  (1, 2)       15              8                   4                240
"""

import itertools

import pytest

from weil2.galois import ring
from weil2.symplectic import (
    CapExceeded, SympSpace, enumerate_enhanced,
)
from weil2 import linalg

CENSUS = [
    # d, n, subspaces, lifts, enhancements, oriented
    (1, 1, 3, 2, 2, 12),
    (2, 1, 5, 4, 16, 240),
    (1, 2, 15, 8, 4, 240),
]

TRANSVERSAL_PAIRS = {(1, 1): 6, (2, 1): 20, (1, 2): 120}


@pytest.mark.parametrize("d,n,subs,lifts,enh,oriented", CENSUS)
def test_census(d, n, subs, lifts, enh, oriented):
    sp = SympSpace(ring(d), n)
    lags = list(sp.enumerate_lagrangians())
    assert len(lags) == subs
    for rows in lags:
        assert len(list(sp.enumerate_submodule_lifts(rows))) == lifts
        assert len(list(sp.enumerate_enhancements(rows))) == enh
    assert len(list(sp.enumerate_oriented())) == oriented
    assert len(enumerate_enhanced(sp)) == subs * enh


@pytest.mark.parametrize("d,n", [(1, 1), (2, 1), (1, 2)])
def test_transversal_pair_count(d, n):
    sp = SympSpace(ring(d), n)
    lags = list(sp.enumerate_lagrangians())
    pairs = sum(1 for a in lags for b in lags if sp.transversal_k(a, b))
    assert pairs == TRANSVERSAL_PAIRS[(d, n)]


def test_residue_form_properties():
    sp = SympSpace(ring(1), 2)
    vecs = list(sp.all_vectors_k())
    assert len(vecs) == 2 ** 4
    for v in vecs[:8]:
        assert sp.omega(v, v) == 0
        for w in vecs[:8]:
            # omega is the polarization of the quadratic refinement beta
            assert sp.omega(v, w) == (sp.beta(v, w) - sp.beta(w, v)) % 4
            assert sp.omega(v, w) == (-sp.omega(w, v)) % 4


def test_omega_nondegenerate():
    for d, n in ((1, 1), (2, 1), (1, 2)):
        sp = SympSpace(ring(d), n)
        zero = sp.zero_vec_k()
        for v in sp.all_vectors_k():
            if v == zero:
                continue
            assert any(sp.omega(v, w) != 0 for w in sp.all_vectors_k())


def test_lagrangians_are_omega_isotropic():
    """Each listed subspace has dimension n and omega vanishes on it."""
    for d, n in ((1, 1), (2, 1), (1, 2)):
        sp = SympSpace(ring(d), n)
        for rows in sp.enumerate_lagrangians():
            assert len(rows) == n
            span = set(sp.span_k(rows))
            assert len(span) == sp.R.field_size ** n
            for v in span:
                for w in span:
                    assert sp.omega(v, w) == 0


def test_standard_and_dual_lagrangians():
    sp = SympSpace(ring(1), 2)
    std = sp.standard_lagrangian()
    dual = sp.dual_standard_lagrangian()
    assert sp.transversal_k(std, dual)
    assert std != dual
    lags = set(sp.enumerate_lagrangians())
    assert std in lags and dual in lags


def test_initial_lift_reduces_to_subspace():
    """initial_lift produces a free omt-isotropic submodule over the rows."""
    for d, n in ((1, 1), (2, 1), (1, 2)):
        sp = SympSpace(ring(d), n)
        for rows in sp.enumerate_lagrangians():
            lift = sp.initial_lift(rows)
            assert tuple(sp.reduce_vec(b) for b in lift) == rows
            for b in lift:
                for c in lift:
                    assert sp.omt(b, c) == sp.R.zero


def test_enhancement_alpha_polarizes_beta():
    """alpha(v + w) = alpha(v) + alpha(w) + beta(v, w) on each subspace."""
    for d, n in ((1, 2), (2, 1)):
        sp = SympSpace(ring(d), n)
        for e in enumerate_enhanced(sp):
            for v in e.elements:
                for w in e.elements:
                    s = tuple(a ^ b for a, b in zip(v, w))
                    want = sp.R.add(sp.R.add(e.alpha_of(v), e.alpha_of(w)),
                                    sp.beta(v, w))
                    assert e.alpha_of(s) == want


def test_enhance_from_lift_canonical():
    sp = SympSpace(ring(2), 1)
    for rows in sp.enumerate_lagrangians():
        e = sp.enhance_from_lift(sp.initial_lift(rows))
        assert e.rows == rows
        assert e.alpha_of(sp.zero_vec_k()) == 0
        # the enhancement lies among the full torsor for that subspace
        assert e in sp.enumerate_enhancements(rows)


def test_enhancement_keys_distinct():
    sp = SympSpace(ring(2), 1)
    enh = enumerate_enhanced(sp)
    assert len({e.key() for e in enh}) == len(enh)


def test_wedge_pairing_values():
    sp = SympSpace(ring(1), 1)
    oriented = list(sp.enumerate_oriented())
    base = sp.standard_oriented()
    transversal = 0
    for o in oriented:
        if sp.transversal_R(o.basis, base.basis):
            transversal += 1
            w = sp.wedge_pairing(o, base)
            assert sp.R.is_unit(w)
            # scaling the orientation unit scales the pairing
            for u in sp.R.units:
                o2 = type(o)(o.basis, sp.R.mul(o.unit, u))
                assert sp.wedge_pairing(o2, base) == sp.R.mul(u, w)
        else:
            with pytest.raises(ValueError):
                sp.wedge_pairing(o, base)
    # 2 transversal subspaces x 2 lifts x 2 units
    assert transversal == 8


def test_oriented_transform_is_group_action():
    from weil2.heisenberg import apply_sp_R, enumerate_sp_R

    sp = SympSpace(ring(1), 1)
    gs = list(enumerate_sp_R(sp))
    assert len(gs) == 48
    oriented = list(sp.enumerate_oriented())
    ident = linalg.identity(sp.R, 2)
    for o in oriented:
        assert sp.oriented_transform(ident, o).key() == o.key()
    # right action compatibility: acting by g then h equals acting by the
    # row-composite matrix whose rows are g[i] * h
    for g in gs[::7]:
        for h in gs[::5]:
            gh = tuple(apply_sp_R(sp, h, g[i]) for i in range(sp.dim))
            for o in oriented[::3]:
                assert (sp.oriented_transform(h, sp.oriented_transform(g, o)).key()
                        == sp.oriented_transform(gh, o).key())


def test_oriented_transform_permutes_oriented_set():
    from weil2.heisenberg import enumerate_sp_R

    sp = SympSpace(ring(1), 1)
    keys = {o.key() for o in sp.enumerate_oriented()}
    for g in list(enumerate_sp_R(sp))[::11]:
        image = {sp.oriented_transform(g, o).key() for o in sp.enumerate_oriented()}
        assert image == keys


def test_r_map_projects_along_complement():
    sp = SympSpace(ring(1), 2)
    lags = list(sp.enumerate_lagrangians())
    std = sp.standard_lagrangian()
    for N in lags:
        if not sp.transversal_k(std, N):
            continue
        for M in lags:
            if not (sp.transversal_k(M, std) and sp.transversal_k(M, N)):
                continue
            r = sp.r_map(M, N, std)
            for m in set(sp.span_k(M)):
                img = r[m]
                # img lies in N and m - img lies in L
                assert img in set(sp.span_k(N))
                diff = tuple(a ^ b for a, b in zip(m, img))
                assert diff in set(sp.span_k(std))


def test_exhaustive_cap_guard():
    sp = SympSpace(ring(1), 5)
    with pytest.raises(CapExceeded):
        list(sp.enumerate_lagrangians())
