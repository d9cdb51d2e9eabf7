"""Acceptance suite: one test per criterion, run at full size.

Each test records a one-line PASS/FAIL verdict that the terminal summary
prints at the end of the session (see conftest.py).
"""

import itertools
import random
import re
import time

from conftest import ACCEPTANCE_LINES

from orbitclosure.exactfield import QQ, PrimeField
from orbitclosure.paperdata import PaperData
from orbitclosure.report import PASS
from orbitclosure.verifier import (
    SuiteConfig,
    check_action_axioms,
    check_cover_identities,
    check_minor_parametrization,
    check_orbit_witnesses,
    check_set_equalities,
)

FULL = SuiteConfig()  # trials=1000, axiom_trials=500, seed 0
_cache = {}


def _verdict(key, title, ok, extra=""):
    ACCEPTANCE_LINES[key] = f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title}" + (f" ({extra})" if extra else "")


def _samples(detail):
    m = re.match(r"(\d+) ", detail)
    return int(m.group(1)) if m else 0


def _witness_report():
    if "witness" not in _cache:
        start = time.perf_counter()
        _cache["witness"] = (check_orbit_witnesses(FULL), time.perf_counter() - start)
    return _cache["witness"]


def test_criterion_1_cover_identities():
    start = time.perf_counter()
    r = check_cover_identities(FULL)
    elapsed = time.perf_counter() - start
    ok = r.passed and elapsed < 5.0 and r.totals["total"] >= 20
    _verdict("1", "cover identities exact", ok, f"{r.totals['pass']}/{r.totals['total']} claims, {elapsed:.1f} s")
    assert r.passed, [c.as_dict() for c in r.failures()]
    assert r.by_id("cover.eta_prime.rho_prime").status == PASS
    assert elapsed < 5.0


def test_criterion_2_witness_matrices():
    r, elapsed = _witness_report()
    claims = [c for c in r.claims if c.id.startswith("witness.")]
    rational = [c for c in claims if c.id.endswith(".rational")]
    swept = [c for c in claims if c.id.endswith(".F3")]
    names = {c.id.split(".")[1] for c in rational}
    ok = (all(c.status == PASS for c in claims) and len(names) == 16
          and all(_samples(c.detail) >= 1000 for c in rational) and len(swept) == 16 and elapsed < 120)
    _verdict("2", "g1, g2, g3 and 13 table matrices", ok,
             f"{len(names)} witnesses x >=1000 rational tuples + F3 sweep, {elapsed:.0f} s incl. closure rows")
    assert names == {"g1", "g2", "g3"} | {f"rho1-{i}" for i in range(1, 8)} | {
        f"rho2-{i}" for i in range(1, 4)} | {f"rho3-{i}" for i in range(1, 4)}
    for c in rational:
        assert c.status == PASS, c.as_dict()
        assert _samples(c.detail) >= 1000, c.detail
    for c in swept:
        assert c.status == PASS, c.as_dict()
        assert _samples(c.detail) > 0
    assert elapsed < 120


def test_criterion_3_closure_rows():
    r, _ = _witness_report()
    claims = [c for c in r.claims if c.id.startswith("closure.")]
    ids = {c.id for c in claims}
    want = {f"closure.{row}.{kind}" for row in ("rho1-8", "rho2-4", "rho3-4") for kind in ("rational", "F3", "F5")}
    ok = ids == want and all(c.status == PASS for c in claims) and all(
        _samples(c.detail) >= 1000 for c in claims if c.id.endswith(".rational"))
    _verdict("3", "closure rows vanish on S'", ok, "3 rows over F3, F5 and 1000 rational samples")
    assert ids == want
    for c in claims:
        assert c.status == PASS, c.as_dict()
        if c.id.endswith(".rational"):
            assert _samples(c.detail) >= 1000


def test_criterion_4_minor_parametrization():
    r = check_minor_parametrization(FULL)
    ok = r.passed and all(_samples(c.detail) >= 1000 for c in r.claims) and len(r.claims) == 2
    _verdict("4", "minor parametrization of both orbits", ok, "1000 random invertible rational matrices")
    assert {c.id for c in r.claims} == {"minors.eta", "minors.rho"}
    for c in r.claims:
        assert c.status == PASS, c.as_dict()
        assert _samples(c.detail) >= 1000


def test_criterion_5_set_equalities_F2_F3():
    start = time.perf_counter()
    r = check_set_equalities(SuiteConfig(primes=(2, 3)))
    elapsed = time.perf_counter() - start
    counts = {p: r.by_id(f"sets.F{p}.count.VS").status for p in (2, 3)}
    ok = r.passed and elapsed < 60
    _verdict("5", "exact set equalities over F2 and F3", ok,
             f"{r.totals['pass']}/{r.totals['total']} claims, {elapsed:.1f} s")
    assert r.passed, [c.as_dict() for c in r.failures()]
    assert counts == {2: PASS, 3: PASS}
    assert r.by_id("sets.F2.count.O_eta").status == PASS
    for p in (2, 3):
        for key in ("VS_eq_O_eta_u_0", "VS_eq_V1_V2_V3", "VSprime_eq_VS", "VTS3_eq_VS",
                    "VT_eq_O_rho_u_O_eta_u_0", "VT_eq_U1_U2_U3", "O_rho_eq_VT_cap_W"):
            assert r.by_id(f"sets.F{p}.{key}").status == PASS
    assert elapsed < 60


def test_criterion_5_optional_F5():
    start = time.perf_counter()
    r = check_set_equalities(SuiteConfig(primes=(5,)))
    elapsed = time.perf_counter() - start
    _verdict("5b", "optional: same set equalities over F5", r.passed and elapsed < 600,
             f"{r.totals['pass']}/{r.totals['total']} claims, {elapsed:.0f} s")
    assert r.passed, [c.as_dict() for c in r.failures()]
    assert elapsed < 600


def test_criterion_6_action_axioms():
    r = check_action_axioms(FULL)
    comp = r.by_id("axioms.composition.rational")
    ok = r.passed and _samples(comp.detail) >= 500 and r.by_id("axioms.identity.F2").status == PASS
    _verdict("6", "action axioms and Lie invariance", ok, f"{comp.detail} for composition")
    assert r.passed, [c.as_dict() for c in r.failures()]
    assert _samples(comp.detail) >= 500
    assert r.by_id("axioms.lie_invariance.rational").status == PASS


# -- criterion 7: mutations -----------------------------------------------------

def _entries_vanishing_on_domain(w):
    """Positions whose entry is zero at every admissible point tried.

    Flipping the sign of such an entry does not change the matrix, so no
    check can notice it.
    """
    points = []
    F5 = PrimeField(5)
    for tup in itertools.product(range(5), repeat=len(w.params)):
        P = {k: F5(v) for k, v in zip(w.params, tup)}
        if w.predicate.holds(P):
            points.append(P)
    rng = random.Random(w.name)
    found = 0
    for _ in range(10_000):
        if found == 50:
            break
        try:
            P = w.predicate.apply_solve({k: QQ(rng.randint(-20, 20)) for k in w.params})
        except ZeroDivisionError:
            continue
        if w.predicate.holds(P):
            points.append(P)
            found += 1
    zero = set()
    for i, j in itertools.product(range(3), repeat=2):
        if all(w.matrix(P)[i, j].is_zero() for P in points):
            zero.add((i, j))
    return zero


def test_criterion_7_mutations_are_detected():
    data = PaperData.default()
    small = dict(trials=50, witness_sweep_primes=(3,), closure_sweep_primes=(3,))
    missed, tried, inert = [], 0, 0

    s3 = data.system("S3").generators
    for gen, f in enumerate(s3):
        for term in range(len(f.terms)):
            tried += 1
            m = data.with_flipped_s3_sign(gen, term)
            r = check_set_equalities(SuiteConfig(primes=(2, 3), data=m, **small))
            if r.passed or not all(c.counterexample for c in r.failures()):
                missed.append(f"S3[{gen}] term {term}")

    for w in data.all_witnesses():
        zero = _entries_vanishing_on_domain(w)
        for i, j in itertools.product(range(3), repeat=2):
            if (i, j) in zero:
                inert += 1
                continue
            tried += 1
            m = data.with_flipped_entry(w.name, i, j)
            r = check_orbit_witnesses(SuiteConfig(witness_names=(w.name,), data=m, **small))
            if r.passed or not all(c.counterexample for c in r.failures()):
                missed.append(f"{w.name} ({i + 1},{j + 1})")

    _verdict("7", "single sign flips in S3 or a witness entry are caught", not missed,
             f"{tried} mutations, {len(missed)} missed, {inert} zero entries skipped")
    assert not missed, missed
    assert tried >= 14 + 13 * 4
