import random

import pytest

from weil2 import linalg
from weil2.galois import ring


def _random_matrix(R, rng, n):
    return tuple(tuple(rng.randrange(R.size) for _ in range(n)) for _ in range(n))


def _random_invertible(R, rng, n):
    while True:
        A = _random_matrix(R, rng, n)
        if R.is_unit(linalg.det_ring(R, A)):
            return A


@pytest.mark.parametrize("d", [1, 2])
def test_inverse_ring_roundtrip(d):
    R = ring(d)
    rng = random.Random(d)
    for n in (1, 2, 3):
        for _ in range(20):
            A = _random_invertible(R, rng, n)
            Ainv = linalg.inverse_ring(R, A)
            assert linalg.mat_mul(R, A, Ainv) == linalg.identity(R, n)
            assert linalg.mat_mul(R, Ainv, A) == linalg.identity(R, n)


def test_det_multiplicative():
    R = ring(2)
    rng = random.Random(5)
    for _ in range(40):
        A = _random_matrix(R, rng, 3)
        B = _random_matrix(R, rng, 3)
        dAB = linalg.det_ring(R, linalg.mat_mul(R, A, B))
        assert dAB == R.mul(linalg.det_ring(R, A), linalg.det_ring(R, B))


def test_det_transpose_invariant():
    R = ring(1)
    rng = random.Random(7)
    for _ in range(40):
        A = _random_matrix(R, rng, 4)
        assert linalg.det_ring(R, A) == linalg.det_ring(R, linalg.transpose(A))


def test_solve_ring():
    R = ring(2)
    rng = random.Random(9)
    for _ in range(30):
        A = _random_invertible(R, rng, 3)
        x = tuple(rng.randrange(R.size) for _ in range(3))
        b = linalg.mat_vec(R, A, x)
        assert linalg.solve_ring(R, A, b) == x


def test_rref_ring_recovers_pivot_columns():
    R = ring(1)
    rows = ((1, 2, 0), (0, 0, 1))
    can, pivots = linalg.rref_ring(R, rows)
    assert pivots == (0, 2)
    for r, p in zip(can, pivots):
        assert r[p] == 1
        for other in range(len(can)):
            if other != pivots.index(p):
                assert can[other][p] == 0


def test_field_rank_and_span():
    R = ring(2)  # residue field F4
    rows = ((1, 2), (2, 3))
    assert linalg.rank_field(R, ((1, 0), (0, 1))) == 2
    assert linalg.rank_field(R, ((1, 1), (1, 1))) == 1
    sp = linalg.span_field(R, rows)
    # one combination per coefficient tuple; distinct values count the span
    assert len(sp) == R.field_size ** len(rows)
    assert len(set(sp)) == R.field_size ** linalg.rank_field(R, rows)


def test_solve_field():
    R = ring(1)
    A = ((1, 1), (0, 1))
    b = (0, 1)
    x = linalg.solve_field(R, A, b)
    assert x is not None
    got = tuple(sum(A[i][j] * x[j] for j in range(2)) % 2 for i in range(2))
    assert got == b


def test_vector_helpers():
    R = ring(1)
    assert linalg.vec_add(R, (1, 2), (3, 3)) == (0, 1)
    assert linalg.vec_sub(R, (0, 0), (1, 3)) == (3, 1)
    assert linalg.vec_scale(R, 2, (1, 2)) == (2, 0)
