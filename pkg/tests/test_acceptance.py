"""Acceptance gate: ten criteria, one test (and one PASS/FAIL line) each.

Every comparison inside a criterion is exact -- Gauss sums, cocycles, and
operator identities are checked for literal equality in Z[zeta_8, 1/2], never
within a tolerance.  Each criterion also carries a wall-clock budget; going
over the budget fails the criterion even if every check passes.

Run `pytest -v tests/test_acceptance.py` for the ten lines.
"""

import json
import time

from weil2 import verify
from weil2.cli import main as cli_main

_DURATIONS = {}


def _gate(num, label, budget_s, fn, expect_names=None):
    t0 = time.monotonic()
    checks = fn()
    elapsed = time.monotonic() - t0
    _DURATIONS[num] = elapsed
    failures = [c for c in checks if not c.passed]
    ok = not failures and elapsed <= budget_s
    print(f"CRITERION {num:2d} [{label}]: {'PASS' if ok else 'FAIL'} "
          f"({len(checks) - len(failures)}/{len(checks)} checks, "
          f"{elapsed:.1f}s of {budget_s:.0f}s budget)")
    if expect_names is not None:
        missing = set(expect_names) - {c.name for c in checks}
        assert not missing, f"expected checks missing: {sorted(missing)}"
    assert not failures, [(c.name, c.detail) for c in failures]
    assert elapsed <= budget_s, f"{elapsed:.1f}s exceeds {budget_s:.0f}s budget"
    return checks


def test_criterion_01_witt_relations_and_purity():
    _gate(1, "Witt blocks, relations, Gauss purity", 5.0,
          verify.witt_core_checks,
          {"witt.purity.rank<=3", "witt.decompose-witness", "witt.rel1",
           "witt.rel2", "witt.rel3", "witt.gauss-of-one"})


def test_criterion_02_grothendieck_witt_character():
    _gate(2, "monoid character: additive, order 8, vanishing", 1.0,
          verify.gw_checks,
          {"gw.additive", "gw.generator-order", "gw.gauss-fourth-power",
           "gw.vanishing"})


def test_criterion_03_cocycle_smallest_case():
    _gate(3, "d = n = 1 cocycle, all routes, all triples", 10.0,
          verify.cocycle_checks_small,
          {"cocycle.three-route.d1n1", "cocycle.fourth-power.d1n1"})


def test_criterion_04_cocycle_exhaustive_and_sampled():
    """dn = 2 exhaustively; dn = 4 sampled with at least 200 triples."""
    samples = 70  # x3 shapes = 210 sampled triples total

    def run():
        checks = []
        checks += verify.cocycle_checks_exhaustive(2, 1)
        checks += verify.cocycle_checks_exhaustive(1, 2)
        for d, n in ((4, 1), (2, 2), (1, 4)):
            checks += verify.cocycle_checks_sampled(d, n, samples, seed=0)
        return checks

    assert 3 * samples >= 200
    _gate(4, "dn = 2 exhaustive, dn = 4 sampled", 300.0, run,
          {"cocycle.fourth-power.d2n1", "cocycle.oriented-identity.d2n1",
           "cocycle.fourth-power.d1n2", "cocycle.oriented-identity.d1n2",
           "cocycle.three-route.d4n1", "cocycle.fourth-power.d4n1",
           "cocycle.three-route.d2n2", "cocycle.fourth-power.d2n2",
           "cocycle.three-route.d1n4", "cocycle.fourth-power.d1n4"})


def test_criterion_05_trivialization():
    _gate(5, "scaled transport trivializes the cocycle", 60.0,
          verify.suite_trivialization,
          {"trivialization.multiplicative",
           "trivialization.auxiliary-independence",
           "trivialization.materialized-16x16"})


def test_criterion_06_splitting():
    _gate(6, "oriented square root of the transport", 120.0,
          lambda: verify.suite_splitting(seed=0),
          {"splitting.norm-coeff-identity.d1n1", "splitting.multiplicative",
           "splitting.square-is-trivialization",
           "splitting.gauss-conj-symmetry"})


def test_criterion_07_discriminant_identities():
    _gate(7, "discriminant and wedge identities", 30.0,
          lambda: verify.suite_disc(seed=0),
          {"disc.trace-form-unit", "disc.trace-vs-norm.d2",
           "disc.wedge-identity.d1n1", "disc.wedge-identity.d1n2",
           "disc.four-term-combination.d1n1"})


def test_criterion_08_weil_representation():
    _gate(8, "Egorov, commutants, projective cocycles", 120.0,
          verify.suite_weil,
          {"weil.heisenberg-commutant", "weil.egorov", "weil.cocycle-mu4",
           "weil.cocycle-identity", "weil.split-cocycle-mu2",
           "weil.split-vs-enhanced", "weil.lift-multiplicative",
           "weil.commutant", "weil.object-independence"})


def test_criterion_09_residue_obstruction():
    _gate(9, "residue field obstruction and affine lifts", 1.0,
          verify.suite_intro,
          {"intro.solvable-iff-orthogonal", "intro.two-of-six",
           "intro.identity-and-swap", "intro.affine-lift-exists"})


def test_criterion_10_determinism(tmp_path):
    """Two `verify --suite all` runs with one config are byte-identical, and
    the whole acceptance pass stays under ten minutes of wall clock."""
    t0 = time.monotonic()
    args = ["verify", "--suite", "all", "--d", "2", "--n", "2",
            "--mode", "sampled", "--sample-count", "40", "--seed", "7",
            "--format", "json"]
    p1 = tmp_path / "report1.json"
    p2 = tmp_path / "report2.json"
    rc1 = cli_main(args + ["--out", str(p1)])
    rc2 = cli_main(args + ["--out", str(p2)])
    elapsed = time.monotonic() - t0
    _DURATIONS[10] = elapsed
    identical = p1.read_bytes() == p2.read_bytes()
    total = sum(_DURATIONS.values())
    ok = rc1 == rc2 == 0 and identical and total <= 600.0
    print(f"CRITERION 10 [byte-identical verify, full run < 10 min]: "
          f"{'PASS' if ok else 'FAIL'} ({elapsed:.1f}s for two runs, "
          f"{total:.1f}s total of 600s budget)")
    assert rc1 == 0 and rc2 == 0
    assert identical, "verify --suite all reports differ between runs"
    report = json.loads(p1.read_text())
    assert report["failures"] == 0
    assert report["prng"] == "python-random-mt19937"
    if len(_DURATIONS) == 10:
        assert total <= 600.0, f"acceptance pass took {total:.1f}s"
