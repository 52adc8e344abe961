"""The Heisenberg group H(V) = V x R attached to (V, beta), its enhanced
automorphism group ASp(V), and lifts from the symplectic groups Sp(Vt) and
Sp(V).

Multiplication uses the splitting cocycle beta:
    (v1, z1) * (v2, z2) = (v1 + v2, z1 + z2 + beta(v1, v2)),
so the commutator of (v, 0) and (w, 0) is (0, om(v, w)) and the center is
0 x R.  An element of ASp(V) is a pair (g, alpha) with g in Sp(V) and
    alpha(v1 + v2) - alpha(v1) - alpha(v2) = beta(g v1, g v2) - beta(v1, v2);
it acts on H(V) by (v, z) -> (g v, z + alpha(v)).
"""
from __future__ import annotations

import itertools

from . import linalg
from .symplectic import _check_cap


# -- the group H(V) ---------------------------------------------------------

def h_identity(space):
    return (space.zero_vec_k(), 0)


def h_mul(space, h1, h2):
    v1, z1 = h1
    v2, z2 = h2
    R = space.R
    v = tuple(a ^ b for a, b in zip(v1, v2))
    return (v, R.add(R.add(z1, z2), space.beta(v1, v2)))


def h_inv(space, h):
    v, z = h
    R = space.R
    return (v, R.add(R.neg(z), space.beta(v, v)))


def h_commutator(space, h1, h2):
    return h_mul(space, h_mul(space, h1, h2),
                 h_inv(space, h_mul(space, h2, h1)))


def center_element(space, z):
    return (space.zero_vec_k(), z)


def all_h_elements(space):
    _check_cap(space.R.d, space.n, "Heisenberg group enumeration")
    for v in space.all_vectors_k():
        for z in range(space.R.size):
            yield (v, z)


# -- ASp(V) ------------------------------------------------------------------

class AspElement:
    """(g, alpha): a symplectic k-matrix together with a compatible shift
    of the center coordinate, stored as a dense table on V."""

    __slots__ = ("space", "g", "_amap", "alpha_table")

    def __init__(self, space, g, alpha_map, validate=True):
        self.space = space
        self.g = tuple(tuple(r) for r in g)
        self._amap = dict(alpha_map)
        self.alpha_table = tuple(
            self._amap[v] for v in sorted(self._amap)
        )
        if validate:
            self._validate()

    def _validate(self):
        sp, R = self.space, self.space.R
        vecs = tuple(sp.all_vectors_k())
        assert len(self._amap) == len(vecs), "alpha must be total on V"
        for v in vecs:
            gv = self.apply_g(v)
            for w in vecs:
                gw = self.apply_g(w)
                lhs = R.sub(
                    R.sub(self._amap[tuple(a ^ b for a, b in zip(v, w))],
                          self._amap[v]),
                    self._amap[w],
                )
                rhs = R.sub(sp.beta(gv, gw), sp.beta(v, w))
                if lhs != rhs:
                    raise ValueError("alpha is not compatible with g")

    def apply_g(self, v):
        R = self.space.R
        out = [0] * self.space.dim
        for j, c in enumerate(v):
            if c:
                for t, e in enumerate(self.g[j]):
                    out[t] ^= R.field_mul(c, e)
        return tuple(out)

    def alpha_of(self, v):
        return self._amap[v]

    def apply_h(self, h):
        """The action on H(V)."""
        v, z = h
        return (self.apply_g(v), self.space.R.add(z, self._amap[v]))

    def key(self):
        return (self.g, self.alpha_table)

    def __eq__(self, other):
        return isinstance(other, AspElement) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"AspElement(g={self.g}, alpha={self.alpha_table})"


def asp_identity(space):
    g = tuple(
        tuple(1 if i == j else 0 for j in range(space.dim))
        for i in range(space.dim)
    )
    return AspElement(space, g, {v: 0 for v in space.all_vectors_k()},
                      validate=False)


def asp_mul(space, a, b):
    """(g, alpha_g) (h, alpha_h) = (g h, alpha_g o h + alpha_h): apply b
    first, then a."""
    R = space.R
    comp = tuple(a.apply_g(b.apply_g(_std_rows(space)[i])) for i in range(space.dim))
    alpha = {
        v: R.add(a.alpha_of(b.apply_g(v)), b.alpha_of(v))
        for v in space.all_vectors_k()
    }
    return AspElement(space, comp, alpha, validate=False)


def asp_inv(space, a):
    R = space.R
    ginv = _field_matrix_inverse(space, a.g)
    tmp = AspElement(space, ginv, {v: 0 for v in space.all_vectors_k()},
                     validate=False)
    alpha = {v: R.neg(a.alpha_of(tmp.apply_g(v))) for v in space.all_vectors_k()}
    return AspElement(space, ginv, alpha, validate=False)


def _std_rows(space):
    return tuple(space.std_basis_k(i) for i in range(space.dim))


def _field_matrix_inverse(space, g):
    R = space.R
    m = space.dim
    aug = [list(g[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    for c in range(m):
        p = next(i for i in range(c, m) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = R.field_inv(aug[c][c])
        aug[c] = [R.field_mul(inv, x) for x in aug[c]]
        for i in range(m):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x ^ R.field_mul(f, y) for x, y in zip(aug[i], aug[c])]
    # rows of the inverse as a row-action matrix: we keep the convention
    # v -> sum_j v[j] * rows[j], so invert the row matrix directly
    return tuple(tuple(row[m:]) for row in aug)


# -- symplectic groups and lifts ----------------------------------------------

def enumerate_sp_k(space):
    """All of Sp(V) over the residue field (row-action convention);
    exhaustive, so capped."""
    _check_cap(space.R.d, space.n, "Sp(V) enumeration")
    R, m = space.R, space.dim
    q = R.field_size
    out = []
    for entries in itertools.product(range(q), repeat=m * m):
        g = tuple(tuple(entries[i * m:(i + 1) * m]) for i in range(m))
        if linalg.rank_field(R, g) != m:
            continue
        rows = _std_rows(space)
        imgs = [
            tuple(_row_apply(space, g, rows[i])) for i in range(m)
        ]
        if all(
            space.omega(imgs[i], imgs[j]) == space.omega(rows[i], rows[j])
            for i in range(m)
            for j in range(i + 1, m)
        ):
            out.append(g)
    return tuple(out)


def _row_apply(space, g, v):
    R = space.R
    out = [0] * space.dim
    for j, c in enumerate(v):
        if c:
            for t, e in enumerate(g[j]):
                out[t] ^= R.field_mul(c, e)
    return tuple(out)


def enumerate_sp_R(space):
    """All of Sp(Vt) over R (row-action); exhaustive over matrix entries,
    so only sensible at n = d = 1 (|Sp_2(Z4)| = 48)."""
    import os
    from .symplectic import CapExceeded
    if space.R.d * space.n > 1 and not os.environ.get("WEIL2_UNSAFE_NO_CAPS"):
        raise CapExceeded("Sp(Vt) enumeration over all entries; n = d = 1 only")
    R, m = space.R, space.dim
    rows_std = tuple(
        tuple(R.one if j == i else 0 for j in range(m)) for i in range(m)
    )
    out = []
    for entries in itertools.product(range(R.size), repeat=m * m):
        g = tuple(tuple(entries[i * m:(i + 1) * m]) for i in range(m))
        if not R.is_unit(linalg.det_ring(R, g)):
            continue
        if all(
            space.omt(g[i], g[j]) == space.omt(rows_std[i], rows_std[j])
            for i in range(m)
            for j in range(i + 1, m)
        ):
            out.append(g)
    return tuple(out)


def apply_sp_R(space, gt, vt):
    """Row-action of an R-matrix: v -> sum_j v[j] * gt[j]."""
    R = space.R
    out = (0,) * space.dim
    for j, c in enumerate(vt):
        if c:
            out = linalg.vec_add(R, out, linalg.vec_scale(R, c, gt[j]))
    return out


def is_symplectic_R(space, gt):
    rows_std = tuple(
        tuple(space.R.one if j == i else 0 for j in range(space.dim))
        for i in range(space.dim)
    )
    imgs = [apply_sp_R(space, gt, r) for r in rows_std]
    return all(
        space.omt(imgs[i], imgs[j]) == space.omt(rows_std[i], rows_std[j])
        for i in range(space.dim)
        for j in range(space.dim)
    )


def lift_sp(space, gt, validate=True):
    """The canonical section Sp(Vt) -> ASp(V):
    alpha(v) = bt(g vt, g vt) - bt(vt, vt), with the {0,1} lift vt of v.
    Well-defined because g preserves omt."""
    R = space.R
    g_red = tuple(
        space.reduce_vec(gt[j]) for j in range(space.dim)
    )
    alpha = {}
    for v in space.all_vectors_k():
        vt = space.lift_vec(v)
        gvt = apply_sp_R(space, gt, vt)
        alpha[v] = R.sub(space.bt(gvt, gvt), space.bt(vt, vt))
    return AspElement(space, g_red, alpha, validate=validate)


def symplectic_lift_matrix(space, g):
    """Some gt in Sp(Vt) reducing to g in Sp(V): lift rows {0,1}, then run
    symplectic Gram-Schmidt over R.  All correction coefficients live in 2R,
    so the residue never moves."""
    R, n, m = space.R, space.n, space.dim
    b = [space.lift_vec(_row_apply(space, g, space.std_basis_k(i))) for i in range(n)]
    c = [space.lift_vec(_row_apply(space, g, space.std_basis_k(n + i))) for i in range(n)]
    # make the b-block isotropic against an exact dual family
    duals = space._dual_family(b)
    for i in range(n):
        corr = b[i]
        for j in range(i + 1, n):
            w = space.omt(b[i], b[j])
            if w:
                corr = linalg.vec_add(R, corr, linalg.vec_scale(R, w, duals[j]))
        b[i] = corr
    # restore the exact b-c pairing: subtract the 2-torsion defects along
    # fresh duals of the corrected b's
    duals = space._dual_family(b)
    for j in range(n):
        corr = c[j]
        for i in range(n):
            eps = R.sub(space.omt(b[i], c[j]), R.one if i == j else 0)
            if eps:
                corr = linalg.vec_sub(R, corr, linalg.vec_scale(R, eps, duals[i]))
        c[j] = corr
    # clear the c-c pairings by adding b's (leaves the b-c pairing alone)
    for j in range(n):
        corr = c[j]
        for i in range(j):
            w = space.omt(c[i], c[j])
            if w:
                corr = linalg.vec_add(R, corr, linalg.vec_scale(R, w, b[i]))
        c[j] = corr
    gt = tuple(b) + tuple(c)
    assert is_symplectic_R(space, gt), "symplectic lift failed"
    red = tuple(space.reduce_vec(r) for r in gt)
    assert red == tuple(
        _row_apply(space, g, space.std_basis_k(i)) for i in range(m)
    ), "lift does not reduce to g"
    return gt


def act_on_enhanced(space, a, enh):
    """ASp(V) acting on enhanced Lagrangians:
    (g, alpha_g) . (L, alpha) = (g L, l -> alpha(g^-1 l) + alpha_g(g^-1 l))."""
    from .symplectic import EnhancedLagrangian
    R = space.R
    inv = asp_inv(space, a)
    new_rows = tuple(a.apply_g(r) for r in enh.rows)
    amap = {}
    for l in space.span_k(new_rows):
        l0 = inv.apply_g(l)
        amap[l] = R.add(enh.alpha_of(l0), a.alpha_of(l0))
    return EnhancedLagrangian(space, new_rows, amap)


def enumerate_asp(space):
    """All of ASp(V): one section alpha per g in Sp(V) (via a symplectic
    lift), shifted by the torsor Hom(V, 2R)."""
    _check_cap(space.R.d, space.n, "ASp(V) enumeration")
    R = space.R
    vecs = tuple(space.all_vectors_k())
    two_tors = sorted(R.two_torsion())
    # F2-generators of V: xi^a e_i
    gens = [(i, 1 << a) for i in range(space.dim) for a in range(R.d)]
    out = []
    for g in enumerate_sp_k(space):
        base = lift_sp(space, symplectic_lift_matrix(space, g), validate=False)
        for vals in itertools.product(two_tors, repeat=len(gens)):
            alpha = {}
            for v in vecs:
                s = base.alpha_of(v)
                gi = 0
                for i in range(space.dim):
                    c = v[i]
                    for aexp in range(R.d):
                        if (c >> aexp) & 1:
                            s = R.add(s, vals[gi + aexp])
                    gi += R.d
                alpha[v] = s
            out.append(AspElement(space, g, alpha, validate=False))
    assert len({e.key() for e in out}) == len(out)
    return tuple(out)


# -- the k-valued obstruction -------------------------------------------------

def preserves_residue_quadratic(space, g):
    """Whether g preserves Q(v) = bt(v, v) mod 2 (the residue quadratic
    form of the splitting)."""
    for v in space.all_vectors_k():
        if space.beta_field(_row_apply(space, g, v), _row_apply(space, g, v)) \
                != space.beta_field(v, v):
            return False
    return True


def residue_polarization(space, g):
    """A k-valued phi with
    phi(v+w) - phi(v) - phi(w) = bt(gv, gw) - bt(v, w)  (all mod 2),
    when one exists (iff g preserves the residue quadratic form), else None.

    Construction: the defect c(v, w) is alternating when Q is preserved, so
    phi(sum x_i e_i) = sum_{i<j} x_i x_j c(e_i, e_j) polarizes it."""
    R = space.R

    def c(v, w):
        gv, gw = _row_apply(space, g, v), _row_apply(space, g, w)
        return space.beta_field(gv, gw) ^ space.beta_field(v, w)

    gens = []
    for i in range(space.dim):
        for a in range(R.d):
            e = [0] * space.dim
            e[i] = 1 << a
            gens.append(tuple(e))
    phi = {}
    for v in space.all_vectors_k():
        bits = []
        for i in range(space.dim):
            for a in range(R.d):
                if (v[i] >> a) & 1:
                    bits.append(gens[i * R.d + a])
        s = 0
        for x in range(len(bits)):
            for y in range(x + 1, len(bits)):
                s ^= c(bits[x], bits[y])
        phi[v] = s
    for v in phi:
        for w in phi:
            vw = tuple(a ^ b for a, b in zip(v, w))
            if phi[vw] ^ phi[v] ^ phi[w] != c(v, w):
                return None
    return phi
