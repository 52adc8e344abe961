"""Linear algebra over GR(4,d) and its residue field.

Matrices are tuples of row tuples.  Ring entries are element indices of a
GaloisRing; field entries are bitmasks.  Over the local ring every
invertible matrix admits unit pivots (invertibility mod 2 lifts), so plain
Gaussian elimination works; nothing here handles non-unit pivots except det,
which falls back to a Leibniz sum for small sizes.
"""
from __future__ import annotations

import itertools


# ---------------------------------------------------------------------------
# ring matrices
# ---------------------------------------------------------------------------

def mat_mul(R, A, B):
    n, k, m = len(A), len(B), len(B[0])
    add, mul = R.add, R.mul
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                s = add(s, mul(Ai[t], B[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(R, A, v):
    add, mul = R.add, R.mul
    out = []
    for row in A:
        s = 0
        for a, x in zip(row, v):
            s = add(s, mul(a, x))
        out.append(s)
    return tuple(out)


def vec_add(R, u, v):
    return tuple(R.add(a, b) for a, b in zip(u, v))


def vec_sub(R, u, v):
    return tuple(R.sub(a, b) for a, b in zip(u, v))


def vec_scale(R, c, v):
    return tuple(R.mul(c, x) for x in v)


def identity(R, n):
    return tuple(
        tuple(R.one if i == j else 0 for j in range(n)) for i in range(n)
    )


def transpose(A):
    return tuple(zip(*A))


def rref_ring(R, rows):
    """Row-reduce over the ring using unit pivots only.

    Returns (reduced rows without zero rows, pivot columns).  Rows that
    cannot be unit-pivoted (all entries non-unit) are reduced as far as
    possible and kept at the bottom; for the free submodules this library
    manipulates they never occur.
    """
    rows = [list(r) for r in rows]
    m = len(rows[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(rows)) if R.is_unit(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = R.inv(rows[r][c])
        rows[r] = [R.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == len(rows):
            break
    out = [tuple(row) for row in rows[:r] if any(row)]
    return tuple(out), tuple(piv_cols)


def solve_ring(R, A, b):
    """One solution x of A x = b over the ring; A's columns must admit unit
    pivots covering all nonzero rows (true for the full-rank systems used
    here).  Raises ValueError when inconsistent."""
    n, m = len(A), len(A[0])
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    piv = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if R.is_unit(aug[i][c])), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = R.inv(aug[r][c])
        aug[r] = [R.mul(inv, x) for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    for i in range(r, n):
        if any(aug[i][:m]) or aug[i][m] != 0:
            raise ValueError("inconsistent or non-unit-pivot system")
    x = [0] * m
    for i, c in enumerate(piv):
        x[c] = aug[i][m]
    return tuple(x)


def inverse_ring(R, A):
    n = len(A)
    aug = [list(A[i]) + [R.one if j == i else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if R.is_unit(aug[i][c])), None)
        if p is None:
            raise ZeroDivisionError("matrix is not invertible over the ring")
        aug[c], aug[p] = aug[p], aug[c]
        inv = R.inv(aug[c][c])
        aug[c] = [R.mul(inv, x) for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def det_ring(R, A):
    """Determinant over the ring; Leibniz for size <= 5, else unit-pivot
    elimination (sufficient for the invertible matrices used at size > 5)."""
    n = len(A)
    if n == 0:
        return R.one
    if n <= 5:
        det = 0
        for perm in itertools.permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            term = R.one
            for i in range(n):
                term = R.mul(term, A[i][perm[i]])
            det = R.add(det, R.neg(term) if inv % 2 else term)
        return det
    rows = [list(r) for r in A]
    det = R.one
    for c in range(n):
        p = next((i for i in range(c, n) if R.is_unit(rows[i][c])), None)
        if p is None:
            raise ValueError("no unit pivot; use a smaller matrix for Leibniz")
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = R.neg(det)
        det = R.mul(det, rows[c][c])
        inv = R.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = R.mul(inv, rows[i][c])
                rows[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return det


# ---------------------------------------------------------------------------
# residue-field matrices (entries are bitmasks of k = F_{2^d})
# ---------------------------------------------------------------------------

def rref_field(R, rows):
    """Reduced row echelon form over k; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows if any(r)]
    m = len(rows[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = R.field_inv(rows[r][c])
        rows[r] = [R.field_mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x ^ R.field_mul(f, y) for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(r_) for r_ in rows[:r]), tuple(piv_cols)


def solve_field(R, A, b):
    """One solution of A x = b over k, or None when inconsistent."""
    n, m = len(A), len(A[0])
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    piv = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = R.field_inv(aug[r][c])
        aug[r] = [R.field_mul(inv, x) for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x ^ R.field_mul(f, y) for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][m]:
            return None
    x = [0] * m
    for i, c in enumerate(piv):
        x[c] = aug[i][m]
    return tuple(x)


def rank_field(R, rows):
    return len(rref_field(R, rows)[0])


def span_field(R, rows, width=None):
    """All k-linear combinations of the given rows, in lexicographic order of
    the coefficient tuples (deterministic enumeration of a subspace)."""
    if not rows:
        return ((0,) * (width or 0),)
    out = []
    for coeffs in itertools.product(range(R.field_size), repeat=len(rows)):
        v = [0] * len(rows[0])
        for c, row in zip(coeffs, rows):
            if c:
                for j, x in enumerate(row):
                    v[j] ^= R.field_mul(c, x)
        out.append(tuple(v))
    return tuple(out)
