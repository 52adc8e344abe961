"""Model spaces of the Heisenberg representation and the canonical
intertwiners between them.

For an enhanced Lagrangian (L, alpha) the model H_L consists of functions
on H(V) with
    f((l, z) * h) = psi(z - alpha(l)) f(h),
where psi(x) = i^{tr x} is the additive character of central character
psi.  Such f is determined by its values on (t, 0) for t in a fixed
transversal T_L of L in V (the span of the non-pivot standard basis
vectors, in lexicographic order).

The right translation pi_L(h) f = f(. h) realizes H(V) on H_L with one
psi-entry per matrix row.  Between two models the canonical intertwiner is
averaging over the source Lagrangian:
    (F_{M,L} f)(h) = sum_{m in M} f((m, alpha_M(m)) * h).
For a transversal pair every matrix entry of F_{M,L} is a single fourth
root of unity; we store the exponent matrix (entries in Z/4) and only
expand to exact cyclotomic numbers on demand.
"""
from __future__ import annotations

import itertools

from .cyclotomic import Cyc8
from .witt import gauss_sum, trace_form


class Model:
    __slots__ = ("space", "enh", "reps", "rep_index", "_pivset")

    def __init__(self, space, enh):
        self.space = space
        self.enh = enh
        comp = [space.std_basis_k(j) for j in range(space.dim)
                if j not in enh.pivots]
        self.reps = tuple(sorted(space.span_k(comp))) if comp else ((0,) * space.dim,)
        self.rep_index = {t: i for i, t in enumerate(self.reps)}
        self._pivset = enh.pivots

    @property
    def dim(self):
        return len(self.reps)

    def split(self, v):
        """v = l + t with l in L and t in the transversal."""
        R = self.space.R
        l = [0] * self.space.dim
        for p, row in zip(self.enh.pivots, self.enh.rows):
            c = v[p]
            if c:
                for a, e in enumerate(row):
                    l[a] ^= R.field_mul(c, e)
        l = tuple(l)
        t = tuple(a ^ b for a, b in zip(v, l))
        return l, t

    def eval_exponent(self, h):
        """psi-exponent bookkeeping for f((v, z)) = psi(z - alpha(l) -
        beta(l, t)) f((t, 0)): returns (exponent, t)."""
        sp, R = self.space, self.space.R
        v, z = h
        l, t = self.split(v)
        w = R.sub(R.sub(z, self.enh.alpha_of(l)), sp.beta(l, t))
        return R.psi_exp(w), t

    def pi_exponents(self, h):
        """pi(h) as (exponent, column) per row: (pi(h) f)[t] = psi(e) f[t']."""
        sp, R = self.space, self.space.R
        w, z = h
        out = []
        for t in self.reps:
            ht = ((tuple(a ^ b for a, b in zip(t, w))),
                  R.add(z, sp.beta(t, w)))
            e, t2 = self.eval_exponent(ht)
            out.append((e, self.rep_index[t2]))
        return tuple(out)

    def pi_matrix(self, h):
        """pi(h) as an exact matrix of fourth roots of unity (one nonzero
        per row)."""
        n = self.dim
        M = [[Cyc8.from_rational(0)] * n for _ in range(n)]
        for i, (e, j) in enumerate(self.pi_exponents(h)):
            M[i][j] = Cyc8.i_pow(e)
        return tuple(tuple(r) for r in M)


def standard_model(space):
    enh = space.enhance_from_lift(space.standard_oriented().basis)
    return Model(space, enh)


def intertwiner_exponents(model_M, model_L):
    """The exponent matrix of F_{M,L} for a transversal pair: entry
    [t_M][t_L] is the psi-exponent of the single m in M with
    m + t_M + t_L in L."""
    sp = model_M.space
    R = sp.R
    eM, eL = model_M.enh, model_L.enh
    if not sp.transversal_k(eM.rows, eL.rows):
        raise ValueError("exponent form requires a transversal pair")
    rows = []
    for tM in model_M.reps:
        row = [None] * model_L.dim
        for m in eM.elements:
            v = tuple(a ^ b for a, b in zip(m, tM))
            l, tL = model_L.split(v)
            e = R.psi_exp(
                R.sub(
                    R.sub(
                        R.add(eM.alpha_of(m), sp.beta(m, tM)),
                        eL.alpha_of(l),
                    ),
                    sp.beta(l, tL),
                )
            )
            j = model_L.rep_index[tL]
            assert row[j] is None, "transversal pair must hit each column once"
            row[j] = e
        assert all(x is not None for x in row)
        rows.append(tuple(row))
    return tuple(rows)


def intertwiner_matrix(model_M, model_L):
    """F_{M,L} as an exact cyclotomic matrix; works for any pair (entries
    are Z[i] sums over the fibre of m + t_M + t_L in L)."""
    sp = model_M.space
    R = sp.R
    eM, eL = model_M.enh, model_L.enh
    spanL = set(eL.elements)
    out = []
    for tM in model_M.reps:
        row = [[0, 0, 0, 0] for _ in range(model_L.dim)]
        for m in eM.elements:
            v = tuple(a ^ b for a, b in zip(m, tM))
            l, tL = model_L.split(v)
            assert l in spanL
            e = R.psi_exp(
                R.sub(
                    R.sub(
                        R.add(eM.alpha_of(m), sp.beta(m, tM)),
                        eL.alpha_of(l),
                    ),
                    sp.beta(l, tL),
                )
            )
            row[model_L.rep_index[tL]][e] += 1
        out.append(tuple(
            Cyc8((c[0] - c[2], 0, c[1] - c[3], 0)) for c in row
        ))
    return tuple(out)


def exponents_to_matrix(E):
    return tuple(tuple(Cyc8.i_pow(e) for e in row) for row in E)


# -- exact Z[i] fast path ------------------------------------------------------
# a Z[i] value is an (re, im) int pair; i^e rotations are table lookups

_ROT = ((1, 0), (0, 1), (-1, 0), (0, -1))


def zi_of_exp(e):
    return _ROT[e % 4]


def zi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def zi_rot(a, e):
    r, i = a
    e %= 4
    if e == 0:
        return (r, i)
    if e == 1:
        return (-i, r)
    if e == 2:
        return (-r, -i)
    return (i, -r)


def compose_exponent_matrices(A, B):
    """(A B)[i][j] = sum_k i^{A[i][k] + B[k][j]} as Z[i] pairs."""
    n, mid, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            re = im = 0
            for k in range(mid):
                e = (Ai[k] + B[k][j]) % 4
                if e == 0:
                    re += 1
                elif e == 1:
                    im += 1
                elif e == 2:
                    re -= 1
                else:
                    im -= 1
            row.append((re, im))
        out.append(tuple(row))
    return tuple(out)


def proportionality_scalar(comp, F_exp):
    """comp = C * i^{F_exp} entrywise: extract C in Z[i] and verify every
    entry; returns the exact Cyc8 scalar."""
    c = zi_rot(comp[0][0], -F_exp[0][0])
    for i in range(len(comp)):
        for j in range(len(comp[0])):
            if zi_rot(c, F_exp[i][j]) != comp[i][j]:
                raise ValueError("composite is not proportional to the target")
    return Cyc8((c[0], 0, c[1], 0))


def matrix_mul_cyc(A, B):
    n, mid, m = len(A), len(B), len(B[0])
    zero = Cyc8.from_rational(0)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = zero
            for k in range(mid):
                s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def matrix_scale_cyc(c, A):
    return tuple(tuple(c * x for x in row) for row in A)


def matrix_inverse_cyc(A):
    """Exact inverse over Q(zeta8) by Gauss-Jordan."""
    n = len(A)
    zero, one = Cyc8.from_rational(0), Cyc8.from_rational(1)
    aug = [list(A[i]) + [one if j == i else zero for j in range(n)]
           for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if not aug[i][c].is_zero()), None)
        if p is None:
            raise ZeroDivisionError("singular matrix over Q(zeta8)")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [inv * x for x in aug[c]]
        for i in range(n):
            if i != c and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


# -- the three routes to the association scalar ---------------------------------

def composition_scalar(space, eN, eM, eL):
    """Route 1: compose F_{N,M} F_{M,L} and divide by F_{N,L}; asserts full
    proportionality.  Requires all three pairs transversal."""
    mN, mM, mL = Model(space, eN), Model(space, eM), Model(space, eL)
    FNM = intertwiner_exponents(mN, mM)
    FML = intertwiner_exponents(mM, mL)
    FNL = intertwiner_exponents(mN, mL)
    comp = compose_exponent_matrices(FNM, FML)
    return proportionality_scalar(comp, FNL)


def formula_scalar(space, eN, eM, eL):
    """Route 2: the quadratic character sum
    C = sum_{m in M} psi(alpha_M(m) + alpha_N(r(m)) - alpha_L(m - r(m))
                         - beta(m, r(m))),
    with r the projection onto N along L."""
    R = space.R
    r = space.r_map(eM.rows, eN.rows, eL.rows)
    tally = [0, 0, 0, 0]
    for m in eM.elements:
        rm = r[m]
        lm = tuple(a ^ b for a, b in zip(m, rm))
        q = R.sub(
            R.sub(
                R.add(eM.alpha_of(m), eN.alpha_of(rm)),
                eL.alpha_of(lm),
            ),
            space.beta(m, rm),
        )
        tally[R.psi_exp(q)] += 1
    return Cyc8((tally[0] - tally[2], 0, tally[1] - tally[3], 0))


def gauss_scalar(space, eN, eM, eL, lifts=None):
    """Route 3: reduce the character sum to a Gauss character of the
    R-valued symmetric form omt_L(m1, m2) = omt(r^Lt(m1), m2) on a free
    lift Mt.

    Choosing free lifts (Mt, Nt, Lt) splits Q into the lift part
    omt_L(mt, mt) plus a 2R-valued defect sigma; sigma matches a linear
    character psi(2 omt_L(mt_s, .)) and completes into the square, so
    C = psi(-omt_L(mt_s, mt_s)) * G([Mt, tr omt_L]).
    """
    R = space.R
    if lifts is None:
        Mt = space.initial_lift(eM.rows)
        Nt = space.initial_lift(eN.rows)
        Lt = space.initial_lift(eL.rows)
    else:
        Mt, Nt, Lt = lifts
    gram = space.omega_tilde_L_gram(Mt, Nt, Lt)
    for i in range(len(gram)):
        for j in range(i + 1, len(gram)):
            assert gram[i][j] == gram[j][i], "omt_L must be symmetric"

    baseM = space.enhance_from_lift(Mt)
    baseN = space.enhance_from_lift(Nt)
    baseL = space.enhance_from_lift(Lt)
    r = space.r_map(eM.rows, eN.rows, eL.rows)
    piv = baseM.pivots

    def sigma(m):
        rm = r[m]
        lm = tuple(a ^ b for a, b in zip(m, rm))
        s = R.add(
            R.sub(eM.alpha_of(m), baseM.alpha_of(m)),
            R.sub(eN.alpha_of(rm), baseN.alpha_of(rm)),
        )
        return R.sub(s, R.sub(eL.alpha_of(lm), baseL.alpha_of(lm)))

    def coeffs(m):
        # ring coefficients of the {0,1}-coordinate lift of m against Mt
        return tuple(R.lift(m[p]) for p in piv)

    def gram_eval(a, b):
        s = 0
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        s = R.add(s, R.mul(ai, R.mul(gram[i][j], bj)))
        return s

    # match sigma against the linear characters 2 omt_L(mt_s, .)
    m_sigma = None
    for cand in eM.elements:
        cc = coeffs(cand)
        if all(
            R.psi_exp(sigma(m)) == R.psi_exp(R.mul(R.two, gram_eval(cc, coeffs(m))))
            for m in eM.elements
        ):
            m_sigma = cand
            break
    if m_sigma is None:
        raise ValueError("sigma does not match any linear character")

    cs = coeffs(m_sigma)
    shift = Cyc8.i_pow(-R.psi_exp(gram_eval(cs, cs)) % 4)
    return shift * gauss_sum(trace_form(R, gram))
