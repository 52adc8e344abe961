"""Unimodular symmetric forms over Z/4 and their block decompositions.

Counts tuples are (n1, n3, nh, nm): multiplicities of <1>, <3>, the
hyperbolic plane and the even plane M4.  The histograms below were frozen
from an exhaustive sweep of every unimodular gram of the given rank.
"""

from fractions import Fraction

import pytest

from weil2 import witt
from weil2.cyclotomic import Cyc8, I, ONE
from weil2.galois import ring

RANK1_HIST = {(0, 1, 0, 0): 1, (1, 0, 0, 0): 1}
RANK2_HIST = {
    (0, 0, 0, 1): 2,
    (0, 0, 1, 0): 6,
    (0, 2, 0, 0): 6,
    (1, 1, 0, 0): 12,
    (2, 0, 0, 0): 6,
}
RANK3_HIST = {
    (0, 1, 0, 1): 56,
    (0, 1, 1, 0): 168,
    (0, 3, 0, 0): 168,
    (1, 0, 0, 1): 56,
    (1, 0, 1, 0): 168,
    (1, 2, 0, 0): 504,
    (2, 1, 0, 0): 504,
    (3, 0, 0, 0): 168,
}


def test_validate_gram():
    assert witt.validate_gram(((1, 2), (2, 3))) == ((1, 2), (2, 3))
    with pytest.raises(ValueError):
        witt.validate_gram(((1, 2), (3, 3)))  # not symmetric
    with pytest.raises(ValueError):
        witt.validate_gram(((2,),))  # not unimodular


def test_block_forms():
    assert witt.HYP == ((0, 1), (1, 0))
    assert witt.M4 == ((2, 1), (1, 2))
    assert witt.det4(witt.HYP) == 3
    assert witt.det4(witt.M4) == 3


@pytest.mark.parametrize("r,hist", [(1, RANK1_HIST), (2, RANK2_HIST), (3, RANK3_HIST)])
def test_decomposition_histograms(r, hist):
    got = {}
    for B in witt.all_unimodular_grams(r):
        counts, _ = witt.decompose(B)
        got[counts] = got.get(counts, 0) + 1
    assert got == hist
    assert sum(hist.values()) == len(list(witt.all_unimodular_grams(r)))


def test_decompose_witness_conjugates_to_canonical():
    for r in (1, 2):
        for B in witt.all_unimodular_grams(r):
            counts, U = witt.decompose(B)
            assert witt.apply_congruence(U, B) == witt.canonical_gram(counts)


def test_relation_witnesses():
    m4m4 = witt.direct_sum(witt.M4, witt.M4)
    hh = witt.direct_sum(witt.HYP, witt.HYP)
    assert witt.apply_congruence(witt.REL1_WITNESS, m4m4) == hh

    d111 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert witt.apply_congruence(witt.REL2_WITNESS, d111) == \
        witt.direct_sum(((3,),), witt.M4)

    d333 = ((3, 0, 0), (0, 3, 0), (0, 0, 3))
    assert witt.apply_congruence(witt.REL3_WITNESS, d333) == \
        witt.direct_sum(((1,),), witt.M4)


def test_is_isometric():
    d111 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert witt.is_isometric(d111, witt.direct_sum(((3,),), witt.M4))
    assert witt.is_isometric(witt.direct_sum(witt.M4, witt.M4),
                             witt.direct_sum(witt.HYP, witt.HYP))
    assert not witt.is_isometric(((1,),), ((3,),))
    assert not witt.is_isometric(witt.HYP, witt.M4)
    with pytest.raises(ValueError):
        witt.is_isometric(witt.canonical_gram((5, 0, 0, 0)),
                          witt.canonical_gram((5, 0, 0, 0)))


def test_gauss_sums():
    assert witt.gauss_sum(((1,),)) == ONE + I
    assert witt.gauss_sum(((1,),)) ** 8 == Cyc8.from_rational(16)
    assert witt.gauss_sum(((3,),)) == ONE - I
    assert witt.gauss_sum(witt.HYP) == Cyc8.from_rational(2)
    assert witt.gauss_sum(witt.M4) == Cyc8.from_rational(-2)
    assert witt.gauss_sum(()) == ONE


def test_gauss_purity_rank2():
    for B in witt.all_unimodular_grams(2):
        assert witt.gauss_sum(B).abs_squared() == Fraction(4)


def test_gauss_matches_class_invariant():
    for r in (1, 2):
        for B in witt.all_unimodular_grams(r):
            assert witt.WittClass.of(B).gauss() == witt.gauss_sum(B)


def test_gw_exponent_table():
    """class(<1>) generates a cyclic group of order 8; M4 sits at 4."""
    got = []
    for k in range(1, 9):
        diag = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        got.append(witt.WittClass.of(diag).gw)
    assert got == [1, 2, 3, 4, 5, 6, 7, 0]
    assert witt.WittClass.of(witt.M4).gw == 4
    assert witt.WittClass.of(witt.HYP).gw == 0


def test_witt_class_addition_and_stability():
    a = witt.WittClass.of(((1,),))
    b = witt.WittClass.of(((3,),))
    s = a + b
    assert s.rank == 2 and s.gw == 0
    assert s.stably_equal(witt.WittClass.of(witt.HYP))
    assert not s.stably_equal(witt.WittClass.of(witt.M4))
    # <1> + <3> and HYP have the same invariants but different counts
    assert s != witt.WittClass.of(witt.HYP)


def test_scale_and_neg():
    B = ((1, 2), (2, 3))
    assert witt.neg_gram(B) == ((3, 2), (2, 1))
    assert witt.scale_gram(3, B) == ((3, 2), (2, 1))
    assert witt.scale_gram(2, ((1,),)) == ((2,),)


def test_disc4():
    assert witt.disc4(((1,),)) == 1
    assert witt.disc4(((3,),)) == 3
    assert witt.disc4(witt.HYP) == witt.disc4(witt.M4)


def test_trace_form_discriminant_is_one():
    """d([R, tr]) = 1 for the rank-one trace form, d = 1 and 2."""
    for d in (1, 2):
        R = ring(d)
        B = witt.trace_form(R, ((R.one,),))
        counts, _ = witt.decompose(B)
        assert len(B) == d
        assert witt.counts_disc(counts) == 1


def test_ring_gauss_and_disc_consistency():
    R = ring(2)
    B = ((R.one,),)
    assert witt.ring_disc(R, B) in R.units
    g = witt.ring_gauss(R, B)
    tr = witt.gauss_sum(witt.trace_form(R, B))
    assert g == tr
