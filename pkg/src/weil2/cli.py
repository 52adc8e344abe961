"""Command-line interface: ring inspection, Witt classification, cocycle
tables, verification suites, Weil matrices, and the regression corpus.

All output is deterministic for a fixed argument list: enumeration orders
are canonical, sampling is seeded (Mersenne Twister via the stdlib `random`
module, recorded in every report header), and no timestamps are emitted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import verify, witt
from .cyclotomic import Cyc8
from .galois import ring
from .heisenberg import enumerate_asp, enumerate_sp_R
from .symplectic import SympSpace, enumerate_enhanced
from .weil import SplitWeilRepresentation, WeilRepresentation, lambda_root, mu_root
from .transport import splitting_transport, trivialization_transport

SCHEMA_VERSION = 1


def _parse_gram(text):
    data = json.loads(text)
    if isinstance(data, int):
        data = [[data]]
    B = tuple(tuple(int(x) % 4 for x in row) for row in data)
    witt.validate_gram(B)
    return B


def _print(out_path, text):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- ring-info -----------------------------------------------------------------


def cmd_ring_info(args):
    R = ring(args.d)
    # a unit square root of the trace's surjectivity: an element with trace 1
    witness = next(a for a in range(R.size) if R.trace(a) == 1)
    info = {
        "schema_version": SCHEMA_VERSION,
        "d": R.d,
        "size": R.size,
        "residue_field_size": R.field_size,
        "modulus_low_to_high": list(R.modulus),
        "unit_count": len(R.units),
        "two_torsion": list(R.two_torsion()),
        "trace_one_witness": witness,
    }
    _print(args.out, json.dumps(info, indent=2) + "\n")
    return 0


# -- witt ----------------------------------------------------------------------


def cmd_witt(args):
    B = _parse_gram(args.gram)
    if args.action == "classify":
        counts, U = witt.decompose(B)
        cls = witt.WittClass(counts)
        info = {
            "schema_version": SCHEMA_VERSION,
            "gram": [list(r) for r in B],
            "block_counts": {"one": counts[0], "three": counts[1],
                             "hyp": counts[2], "m4": counts[3]},
            "rank": cls.rank,
            "disc": cls.disc,
            "gw_class": cls.gw,
            "gauss": witt.gauss_sum(B).to_json(),
            "witness": [list(r) for r in U],
        }
        _print(args.out, json.dumps(info, indent=2) + "\n")
        return 0
    if args.action == "gauss":
        g = witt.gauss_sum(B)
        _print(args.out, f"{g}\n")
        return 0
    if args.action == "isometric":
        if not args.gram2:
            print("isometric needs a second gram", file=sys.stderr)
            return 2
        B2 = _parse_gram(args.gram2)
        same = witt.is_isometric(B, B2)
        _print(args.out, ("true" if same else "false") + "\n")
        return 0
    raise AssertionError(args.action)


# -- cocycle-table ---------------------------------------------------------------


def _cocycle_rows(d, n, mode, sample_count, seed):
    from .models import formula_scalar
    R = ring(d)
    sp = SympSpace(R, n)
    subs = sp.enumerate_lagrangians()
    rows = []
    if mode == "exhaustive":
        enh = {s: sp.enumerate_enhancements(s) for s in subs}
        for (rN, rM, rL) in verify._transversal_triples(sp, subs):
            for eN in enh[rN]:
                for eM in enh[rM]:
                    for eL in enh[rL]:
                        c = formula_scalar(sp, eN, eM, eL)
                        rows.append((eN.key(), eM.key(), eL.key(), c))
    else:
        rng = random.Random(seed)
        lift_cache = {}

        def lifts_of(r):
            if r not in lift_cache:
                lift_cache[r] = sp.enumerate_submodule_lifts(r)
            return lift_cache[r]

        for _ in range(sample_count):
            while True:
                rN, rM, rL = (rng.choice(subs) for _ in range(3))
                if (sp.transversal_k(rN, rM) and sp.transversal_k(rM, rL)
                        and sp.transversal_k(rN, rL)):
                    break
            eN = verify._random_enhancement(sp, rng.choice(lifts_of(rN)), rng)
            eM = verify._random_enhancement(sp, rng.choice(lifts_of(rM)), rng)
            eL = verify._random_enhancement(sp, rng.choice(lifts_of(rL)), rng)
            rows.append((eN.key(), eM.key(), eL.key(),
                         formula_scalar(sp, eN, eM, eL)))
    return rows


def cmd_cocycle_table(args):
    dn = args.d * args.n
    mode = args.mode or ("exhaustive" if dn <= 2 else "sampled")
    if mode == "exhaustive" and dn > 4:
        print("exhaustive triple sweep rejected for d*n > 4", file=sys.stderr)
        return 2
    rows = _cocycle_rows(args.d, args.n, mode, args.sample_count, args.seed)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "prng": verify.PRNG_NAME,
            "d": args.d, "n": args.n, "mode": mode, "seed": args.seed,
            "rows": [
                {"N": repr(kN), "M": repr(kM), "L": repr(kL), "C": c.to_json()}
                for (kN, kM, kL, c) in rows
            ],
        }
        _print(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "M", "L", "c0", "c1", "c2", "c3"])
        for (kN, kM, kL, c) in rows:
            w.writerow([repr(kN), repr(kM), repr(kL)] + list(c.to_json()))
        _print(args.out, buf.getvalue())
    return 0


# -- verify ----------------------------------------------------------------------


def cmd_verify(args):
    checks = verify.run_suite(args.suite, args.d, args.n, args.mode,
                              args.sample_count, args.seed)
    failures = [c for c in checks if not c.passed]
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "prng": verify.PRNG_NAME,
            "suite": args.suite,
            "config": {"d": args.d, "n": args.n, "seed": args.seed,
                       "mode": args.mode, "sample_count": args.sample_count},
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in checks],
            "failures": len(failures),
        }
        _print(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}"
                 for c in checks]
        lines.append(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
        _print(args.out, "\n".join(lines) + "\n")
    return 1 if failures else 0


# -- weil-matrix ------------------------------------------------------------------


def _matrix_json(M):
    return [[x.to_json() for x in row] for row in M]


def cmd_weil_matrix(args):
    R = ring(args.d)
    sp = SympSpace(R, args.n)
    if args.split:
        S = SplitWeilRepresentation(sp)
        group = enumerate_sp_R(sp)
        if not 0 <= args.element < len(group):
            print(f"element index out of range (0..{len(group) - 1})",
                  file=sys.stderr)
            return 2
        g = group[args.element]
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "split", "d": args.d, "n": args.n,
            "element_index": args.element,
            "symplectic_matrix": [list(r) for r in g],
            "matrix": _matrix_json(S.operator(g)),
        }
    else:
        W = WeilRepresentation(sp)
        group = enumerate_asp(sp)
        if not 0 <= args.element < len(group):
            print(f"element index out of range (0..{len(group) - 1})",
                  file=sys.stderr)
            return 2
        a = group[args.element]
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "enhanced", "d": args.d, "n": args.n,
            "element_index": args.element,
            "residue_matrix": [list(r) for r in a.g],
            "matrix": _matrix_json(W.operator(a)),
        }
    _print(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


# -- emit-corpus -------------------------------------------------------------------


def cmd_emit_corpus(args):
    R = ring(args.d)
    sp = SympSpace(R, args.n)
    dn = args.d * args.n
    corpus = {
        "schema_version": SCHEMA_VERSION,
        "prng": verify.PRNG_NAME,
        "config": {"d": args.d, "n": args.n, "seed": args.seed},
        "ring": {
            "d": R.d, "size": R.size,
            "modulus_low_to_high": list(R.modulus),
            "unit_count": len(R.units),
        },
    }

    if dn <= 2:
        enh = enumerate_enhanced(sp)
        corpus["enhanced_lagrangians"] = [repr(e.key()) for e in enh]
        corpus["oriented_count"] = len(sp.enumerate_oriented())
        rows = _cocycle_rows(args.d, args.n, "exhaustive", 0, args.seed)
    else:
        rows = _cocycle_rows(args.d, args.n, "sampled", args.sample_count,
                             args.seed)
    corpus["cocycle_table"] = [
        {"N": repr(kN), "M": repr(kM), "L": repr(kL), "C": c.to_json()}
        for (kN, kM, kL, c) in rows
    ]

    classifications = []
    for r in (1, 2):
        for B in witt.all_unimodular_grams(r):
            counts, _ = witt.decompose(B)
            classifications.append({
                "gram": [list(row) for row in B],
                "counts": list(counts),
                "gw": witt.gw_exponent(counts),
                "gauss": witt.gauss_sum(B).to_json(),
            })
    corpus["witt_classification_rank<=2"] = classifications

    if dn == 1:
        W = WeilRepresentation(sp)
        S = SplitWeilRepresentation(sp)
        corpus["weil_matrices"] = [
            {"element": i, "matrix": _matrix_json(W.operator(a))}
            for i, a in enumerate(enumerate_asp(sp))
        ]
        corpus["split_weil_matrices"] = [
            {"element": i, "matrix": _matrix_json(S.operator(g))}
            for i, g in enumerate(enumerate_sp_R(sp))
        ]
        lam = []
        base = W.base
        for e in enumerate_enhanced(sp):
            T = trivialization_transport(sp, e, base)
            lam.append({"L": repr(e.key()), "scalar": T.scalar.to_json(),
                        "lambda": lambda_root(T.scalar).to_json()})
        corpus["lambda_roots"] = lam
        mu = []
        obase = S.base
        for o in sp.enumerate_oriented():
            St = splitting_transport(sp, o, obase)
            mu.append({"L": repr(o.key()), "scalar": St.scalar.to_json(),
                       "mu": mu_root(St.scalar).to_json()})
        corpus["mu_roots"] = mu

    _print(args.out, json.dumps(corpus, indent=2) + "\n")
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="weil2",
        description="Exact Heisenberg/Weil representation toolkit over "
                    "Galois rings of characteristic 4.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(q, d_default=1, n_default=1):
        q.add_argument("--d", type=int, default=d_default,
                       help="Galois ring degree (1..4)")
        q.add_argument("--n", type=int, default=n_default,
                       help="number of hyperbolic pairs")
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--mode", choices=("exhaustive", "sampled"), default=None)
        q.add_argument("--sample-count", type=int, default=200)
        q.add_argument("--out", default=None, help="write output to a file")

    q = sub.add_parser("ring-info", help="Galois ring parameters")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_ring_info)

    q = sub.add_parser("witt", help="classify symmetric forms over Z/4")
    q.add_argument("action", choices=("classify", "gauss", "isometric"))
    q.add_argument("gram", help="gram matrix as JSON, e.g. [[1,0],[0,1]]")
    q.add_argument("gram2", nargs="?", default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_witt)

    q = sub.add_parser("cocycle-table", help="tabulate intertwiner cocycle values")
    add_common(q)
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.set_defaults(func=cmd_cocycle_table)

    q = sub.add_parser("verify", help="run exact verification suites")
    q.add_argument("--suite", default="all",
                   choices=verify.SUITE_NAMES + ("all",))
    q.add_argument("--d", type=int, default=None)
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--mode", choices=("exhaustive", "sampled"), default=None)
    q.add_argument("--sample-count", type=int, default=200)
    q.add_argument("--out", default=None)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("weil-matrix", help="print one Weil operator")
    add_common(q)
    q.add_argument("--element", type=int, default=0)
    q.add_argument("--split", action="store_true",
                   help="use the sign-cocycle construction over Sp(Z/4)")
    q.set_defaults(func=cmd_weil_matrix)

    q = sub.add_parser("emit-corpus", help="write the regression corpus")
    add_common(q)
    q.set_defaults(func=cmd_emit_corpus)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
