"""The symplectic module (Vt, omt) over R, its reduction (V, om), and the
Lagrangian zoo: plain subspaces of V, enhanced Lagrangians (L, alpha),
free submodule lifts, and oriented Lagrangians (Lt, o).

Conventions (standard splitting, first n coordinates vs last n):
    bt((l1,m1),(l2,m2)) = <l1, m2>            (the splitting cocycle)
    omt = bt - bt^T                           (the symplectic form on Vt)
    beta = 2*bt  and  om = 2*omt  on V = k^{2n}, valued in the ideal 2R.

k-vectors are tuples of bitmasks, R-vectors tuples of ring indices.
"""
from __future__ import annotations

import itertools

from . import linalg

MAX_EXHAUSTIVE_DN = 4


class CapExceeded(ValueError):
    pass


def _check_cap(d, n, what="exhaustive enumeration"):
    import os
    if d * n > MAX_EXHAUSTIVE_DN and not os.environ.get("WEIL2_UNSAFE_NO_CAPS"):
        raise CapExceeded(
            f"{what} refused at d*n = {d * n} > {MAX_EXHAUSTIVE_DN} "
            "(set WEIL2_UNSAFE_NO_CAPS=1 to override)"
        )


class SympSpace:
    def __init__(self, ring, n: int):
        self.R = ring
        self.n = n
        self.dim = 2 * n
        self.dn = ring.d * n

    # -- forms ---------------------------------------------------------------
    def bt(self, vt, wt):
        R, n = self.R, self.n
        s = 0
        for i in range(n):
            s = R.add(s, R.mul(vt[i], wt[n + i]))
        return s

    def omt(self, vt, wt):
        return self.R.sub(self.bt(vt, wt), self.bt(wt, vt))

    def lift_vec(self, v):
        return tuple(self.R.lift(x) for x in v)

    def reduce_vec(self, vt):
        return tuple(self.R.reduce(x) for x in vt)

    def beta(self, v, w):
        """beta = 2*bt on V; independent of the coordinate lifts."""
        R = self.R
        return R.mul(R.two, self.bt(self.lift_vec(v), self.lift_vec(w)))

    def omega(self, v, w):
        return self.R.sub(self.beta(v, w), self.beta(w, v))

    def beta_field(self, v, w):
        """The k-valued residue of bt; only used for the pseudo-symplectic
        obstruction from the introduction."""
        R, n = self.R, self.n
        s = 0
        for i in range(n):
            s ^= R.field_mul(v[i], w[n + i])
        return s

    def zero_vec_k(self):
        return (0,) * self.dim

    def all_vectors_k(self):
        return itertools.product(range(self.R.field_size), repeat=self.dim)

    def std_basis_k(self, i):
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    # -- Lagrangian subspaces of V --------------------------------------------
    def enumerate_lagrangians(self):
        """All n-dimensional isotropic subspaces of V as canonical RREF bases,
        sorted.  Enumerates echelon patterns (pivot sets + free entries) and
        filters by isotropy."""
        _check_cap(self.R.d, self.n)
        R, n, m = self.R, self.n, self.dim
        q = R.field_size
        found = []
        for pivots in itertools.combinations(range(m), n):
            free_pos = []
            for i in range(n):
                for c in range(pivots[i] + 1, m):
                    if c not in pivots:
                        free_pos.append((i, c))
            for vals in itertools.product(range(q), repeat=len(free_pos)):
                rows = [[0] * m for _ in range(n)]
                for i in range(n):
                    rows[i][pivots[i]] = 1
                for (i, c), v in zip(free_pos, vals):
                    rows[i][c] = v
                rows = [tuple(r) for r in rows]
                if all(
                    self.omega(rows[i], rows[j]) == 0
                    for i in range(n)
                    for j in range(i + 1, n)
                ):
                    found.append(tuple(rows))
        return tuple(sorted(found))

    def standard_lagrangian(self):
        """span(e_1 .. e_n) -- the first half of the splitting."""
        return tuple(self.std_basis_k(i) for i in range(self.n))

    def dual_standard_lagrangian(self):
        return tuple(self.std_basis_k(self.n + i) for i in range(self.n))

    def span_k(self, rows):
        return linalg.span_field(self.R, rows, width=self.dim)

    def transversal_k(self, rows1, rows2):
        return linalg.rank_field(self.R, tuple(rows1) + tuple(rows2)) == self.dim

    def transversal_R(self, basis1, basis2):
        # Nakayama: a pair of free submodules is transversal over R iff the
        # reductions are transversal over k.
        return self.transversal_k(
            tuple(self.reduce_vec(b) for b in basis1),
            tuple(self.reduce_vec(b) for b in basis2),
        )

    # -- enhanced Lagrangians ---------------------------------------------------
    def coords_in_rref(self, rows, pivots, v):
        return tuple(v[p] for p in pivots)

    def enhance_from_lift(self, basis):
        """The enhancement alpha(l) = bt(lt, lt) of the reduction of a free
        isotropic lift; independent of which lift of l in the submodule is
        used (the cross terms cancel against isotropy)."""
        R = self.R
        rows = tuple(self.reduce_vec(b) for b in basis)
        rows_r, pivots = linalg.rref_field(R, rows)
        # re-express the lift basis against the canonical reduced rows so the
        # stored subspace basis stays canonical
        basis_can = []
        for row in rows_r:
            coeffs = linalg.solve_field(R, linalg.transpose(rows), row)
            vt = (0,) * self.dim
            for c, b in zip(coeffs, basis):
                vt = linalg.vec_add(R, vt, linalg.vec_scale(R, R.lift(c), b))
            basis_can.append(vt)
        alpha = {}
        for coeffs in itertools.product(range(R.field_size), repeat=len(rows_r)):
            vt = (0,) * self.dim
            for c, b in zip(coeffs, basis_can):
                vt = linalg.vec_add(R, vt, linalg.vec_scale(R, R.lift(c), b))
            alpha[self.reduce_vec(vt)] = self.bt(vt, vt)
        return EnhancedLagrangian(self, rows_r, alpha)

    def enumerate_enhancements(self, rows):
        """Every solution alpha of the polarization equation over the fixed
        subspace.  The solution set is a torsor over the group homomorphisms
        L -> R (which land in the 2-torsion 2R)."""
        R = self.R
        base = self.enhance_from_lift(self.initial_lift(rows))
        rows = base.rows
        gens = []  # F2-generators of L: xi^a * (basis row i)
        for row in rows:
            for a in range(R.d):
                gens.append((row, 1 << a))
        two_tors = sorted(R.two_torsion())
        out = []
        elements = base.elements
        for vals in itertools.product(two_tors, repeat=len(gens)):
            delta = {}
            for v in elements:
                coeffs = tuple(v[p] for p in base.pivots)
                s = 0
                gi = 0
                for c in coeffs:
                    for a in range(R.d):
                        if (c >> a) & 1:
                            s = R.add(s, vals[gi + a])
                    gi += R.d
                delta[v] = s
            alpha = {v: R.add(base.alpha_of(v), delta[v]) for v in elements}
            out.append(EnhancedLagrangian(self, rows, alpha))
        assert len({e.alpha for e in out}) == len(out)
        return tuple(sorted(out, key=lambda e: e.alpha))

    # -- free submodule lifts -----------------------------------------------------
    def initial_lift(self, rows):
        """One free isotropic lift of the subspace spanned by `rows`:
        {0,1}-lift the basis, then cancel the 2R-valued pairing defects
        against an exact dual family."""
        R, n = self.R, self.n
        b = [self.lift_vec(r) for r in rows]
        duals = self._dual_family(b)
        for i in range(len(b)):
            corr = b[i]
            for j in range(i + 1, len(b)):
                w = self.omt(b[i], b[j])
                if w:
                    corr = linalg.vec_add(R, corr, linalg.vec_scale(R, w, duals[j]))
            b[i] = corr
        for i in range(len(b)):
            for j in range(len(b)):
                assert self.omt(b[i], b[j]) == 0, "lift correction failed"
        basis, _ = linalg.rref_ring(R, b)
        return basis

    def _dual_family(self, basis):
        """Vectors c_j with omt(b_i, c_j) = delta_ij (no isotropy demanded)."""
        R, n = self.R, self.n
        rows = []
        for bvec in basis:
            rows.append(tuple(R.neg(x) for x in bvec[n:]) + tuple(bvec[:n]))
        duals = []
        for j in range(len(basis)):
            target = tuple(R.one if i == j else 0 for i in range(len(basis)))
            duals.append(linalg.solve_ring(R, tuple(rows), target))
        return duals

    def enumerate_submodule_lifts(self, rows):
        """All free Lagrangian submodules reducing onto the subspace; they
        form a torsor over symmetric n x n matrices over k."""
        R, n = self.R, self.n
        base = self.initial_lift(rows)
        duals = self._dual_family(base)
        q = R.field_size
        pos = [(i, j) for i in range(n) for j in range(i, n)]
        seen = {}
        for vals in itertools.product(range(q), repeat=len(pos)):
            S = [[0] * n for _ in range(n)]
            for (i, j), v in zip(pos, vals):
                S[i][j] = S[j][i] = v
            basis = []
            for i in range(n):
                vt = base[i]
                for j in range(n):
                    if S[i][j]:
                        c = R.mul(R.two, R.lift(S[i][j]))
                        vt = linalg.vec_add(R, vt, linalg.vec_scale(R, c, duals[j]))
                basis.append(vt)
            can, _ = linalg.rref_ring(R, basis)
            seen[can] = True
        lifts = tuple(sorted(seen))
        expected = q ** (n * (n + 1) // 2)
        assert len(lifts) == expected, (len(lifts), expected)
        return lifts

    def enumerate_oriented(self):
        """All oriented Lagrangians (canonical submodule basis, unit)."""
        _check_cap(self.R.d, self.n)
        out = []
        for rows in self.enumerate_lagrangians():
            for basis in self.enumerate_submodule_lifts(rows):
                for u in self.R.units:
                    out.append(OrientedLagrangian(basis, u))
        return tuple(out)

    def standard_oriented(self):
        basis = tuple(
            tuple(self.R.one if j == i else 0 for j in range(self.dim))
            for i in range(self.n)
        )
        return OrientedLagrangian(basis, self.R.one)

    # -- pairings and projections ---------------------------------------------------
    def wedge_pairing(self, oL, oM):
        """omt_wedge(o_L, o_M) = u_L * u_M * det[omt(l_i, m_j)]; a unit
        exactly when the pair is transversal."""
        R = self.R
        W = tuple(
            tuple(self.omt(li, mj) for mj in oM.basis) for li in oL.basis
        )
        det = linalg.det_ring(R, W)
        if not R.is_unit(det):
            raise ValueError("wedge pairing of a non-transversal pair")
        return R.mul(R.mul(oL.unit, oM.unit), det)

    def r_map(self, M_rows, N_rows, L_rows):
        """The projection onto N along L, restricted to M, as a dense dict.
        Defined by r(m) - m in L; requires N + L = V."""
        R = self.R
        if not self.transversal_k(N_rows, L_rows):
            raise ValueError("r_map needs N transversal to L")
        cols = linalg.transpose(tuple(N_rows) + tuple(L_rows))
        out = {}
        for m in self.span_k(M_rows):
            x = linalg.solve_field(R, cols, m)
            nv = [0] * self.dim
            for c, row in zip(x[: len(N_rows)], N_rows):
                for t, e in enumerate(row):
                    nv[t] ^= R.field_mul(c, e)
            out[m] = tuple(nv)
        return out

    def r_map_tilde(self, Mt, Nt, Lt):
        """Images of Mt's basis under the projection onto Nt along Lt."""
        R = self.R
        cols = linalg.transpose(tuple(Nt) + tuple(Lt))
        images = []
        for m in Mt:
            x = linalg.solve_ring(R, cols, m)
            nv = (0,) * self.dim
            for c, row in zip(x[: len(Nt)], Nt):
                nv = linalg.vec_add(R, nv, linalg.vec_scale(R, c, row))
            images.append(nv)
        return images

    def omega_tilde_L_gram(self, Mt, Nt, Lt):
        """Gram matrix of the R-valued symmetric form omt_L(m1, m2) =
        omt(r^Lt(m1), m2) on the basis of Mt."""
        r = self.r_map_tilde(Mt, Nt, Lt)
        return tuple(
            tuple(self.omt(r[i], Mt[j]) for j in range(len(Mt)))
            for i in range(len(Mt))
        )

    def oriented_transform(self, gt, oriented):
        """g acts on (Lt, o) by moving the submodule and pushing the top
        wedge forward; the result is re-expressed over the canonical basis.
        Matrices act on row vectors: b -> sum_j b[j] gt[j]."""
        R = self.R
        img = linalg.mat_mul(R, oriented.basis, gt)
        can, pivots = linalg.rref_ring(R, img)
        T = tuple(tuple(v[p] for p in pivots) for v in img)
        return OrientedLagrangian(can, R.mul(oriented.unit, linalg.det_ring(R, T)))


class EnhancedLagrangian:
    """A Lagrangian subspace with a quadratic function alpha polarizing beta:
    alpha(l1 + l2) - alpha(l1) - alpha(l2) = beta(l1, l2)."""

    __slots__ = ("space", "rows", "pivots", "elements", "_amap", "alpha")

    def __init__(self, space, rows, alpha_map, validate=True):
        self.space = space
        rows_r, pivots = linalg.rref_field(space.R, rows)
        self.rows = rows_r
        self.pivots = pivots
        self.elements = tuple(sorted(space.span_k(rows_r)))
        self._amap = dict(alpha_map)
        self.alpha = tuple(self._amap[v] for v in self.elements)
        if validate:
            self._validate()

    def _validate(self):
        sp, R = self.space, self.space.R
        assert len(self.rows) == sp.n, "not middle-dimensional"
        for l1 in self.elements:
            for l2 in self.elements:
                assert sp.omega(l1, l2) == 0, "subspace is not isotropic"
                lhs = R.sub(
                    R.sub(self._amap[_xor(l1, l2)], self._amap[l1]), self._amap[l2]
                )
                if lhs != sp.beta(l1, l2):
                    raise ValueError("alpha does not polarize beta")

    def alpha_of(self, v):
        return self._amap[v]

    def key(self):
        return (self.rows, self.alpha)

    def __eq__(self, other):
        return isinstance(other, EnhancedLagrangian) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"EnhancedLagrangian(rows={self.rows}, alpha={self.alpha})"


def _xor(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


class OrientedLagrangian:
    """A free Lagrangian submodule with a generator of its top wedge, stored
    as (canonical basis, unit): o = unit * (b_1 ^ ... ^ b_n)."""

    __slots__ = ("basis", "unit")

    def __init__(self, basis, unit):
        self.basis = tuple(tuple(b) for b in basis)
        self.unit = unit

    def key(self):
        return (self.basis, self.unit)

    def __eq__(self, other):
        return isinstance(other, OrientedLagrangian) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"OrientedLagrangian(basis={self.basis}, unit={self.unit})"


def enumerate_enhanced(space):
    """All enhanced Lagrangians of the space, in a fixed deterministic order."""
    out = []
    for rows in space.enumerate_lagrangians():
        out.extend(space.enumerate_enhancements(rows))
    return tuple(out)
