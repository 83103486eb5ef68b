"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""
from __future__ import annotations

import io
import time
from collections import Counter

import pytest

from conftest import ACCEPTANCE
from coxorbit import catalog, folding, suites
from coxorbit.certificate import FAIL, PASS, SKIPPED
from coxorbit.cli import RunConfig, run, write_report
from coxorbit.rootsystem import get
from coxorbit.weyl import stabilizer_datum

SWEEP_TYPES = list(suites.DEFAULT_TYPES)
DEEP = list(suites.DEEP_TYPES)
OPTS = suites.Options(seed=0)


def record(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"


def tally(labels, check):
    counts = Counter()
    per_type = {}
    for lab in labels:
        certs = suites.run_suite(lab, check, OPTS)
        c = Counter(x.status for x in certs)
        per_type[lab] = c
        counts.update(c)
    return counts, per_type


def test_prop_a_sweep():
    t0 = time.perf_counter()
    counts, per_type = tally(SWEEP_TYPES, "prop-a")
    t_default = time.perf_counter() - t0
    deep_counts, deep_per = tally(DEEP, "prop-a")
    t_deep = time.perf_counter() - t0
    everyone_checked = all(c[PASS] > 0 for c in {**per_type, **deep_per}.values())
    ok = counts[FAIL] == 0 and deep_counts[FAIL] == 0 and everyone_checked and t_default <= 60 and t_deep <= 600
    record(
        "prop-a sweep",
        ok,
        f"{counts[PASS]} pass / {counts[FAIL]} fail over {len(SWEEP_TYPES)} types in {t_default:.1f}s; "
        f"E8 {deep_counts[PASS]} pass / {deep_counts[FAIL]} fail, total {t_deep:.1f}s",
    )


def test_prop_b_and_agreement():
    fails = 0
    disagree = 0
    n = 0
    for lab in SWEEP_TYPES + DEEP:
        for c in suites.run_suite(lab, "prop-b", OPTS):
            n += 1
            fails += c.status == FAIL
            disagree += c.detail["prop_a"] != c.detail["prop_b"]
    record("prop-b and (a)<=>(b) agreement", fails == 0 and disagree == 0 and n > 0,
           f"{n} (type, J) pairs, {fails} fail, {disagree} disagreements")


def test_prop_c_sampled():
    labels = [lab for lab in SWEEP_TYPES if suites.rank_of(lab) <= 5]
    short = []
    fails = 0
    total = 0
    h3 = 0
    for lab in labels:
        certs = suites.run_suite(lab, "prop-c", OPTS)
        sampled = certs[: OPTS.prop_c_samples]
        if len(sampled) < 500:
            short.append(lab)
        fails += sum(c.status == FAIL for c in certs)
        total += len(certs)
        if lab == "H3":
            h3 = len(certs) - len(sampled)
    expected_h3 = 120 * 8 * 30
    ok = not short and fails == 0 and h3 == expected_h3
    record("prop-c sampled + exhaustive H3", ok,
           f"{len(labels)} types x >=500 samples, H3 exhaustive {h3}/{expected_h3}, {total} instances, {fails} fail")


def test_oshima_lemma():
    labels = [lab for lab in SWEEP_TYPES + DEEP if suites.crystallographic(lab) and suites.irreducible(lab)]
    counts, per_type = tally(labels, "oshima-x")
    ok = counts[FAIL] == 0 and all(c[PASS] > 0 for c in per_type.values())
    record("oshima-x (X single orbit, |X n C| <= 1)", ok,
           f"{counts[PASS]} specs over {len(labels)} types, {counts[FAIL]} fail")


def test_counterexample():
    certs = suites.run_suite("A3", "counterexample-a3", OPTS)
    c = certs[0]
    ok = len(certs) == 1 and c.status == PASS and c.detail["orbit"] == [(-1, 0, 0), (1, 0, 0)] and (0, 0, 1) in c.detail["slice"]
    record("counterexample-a3 (strict inclusion observed)", ok, f"slice {c.detail['slice']}, orbit {c.detail['orbit']}")


def test_root_strings():
    labels = ["A3", "B3", "C3", "D4", "F4", "G2"]
    t0 = time.perf_counter()
    lines = []
    ok = True
    for check in ("rootstring-b", "rootstring-a", "rootstring-c", "decomposition"):
        counts, per_type = tally(labels, check)
        ok &= counts[FAIL] == 0 and all(c[PASS] > 0 for c in per_type.values())
        lines.append(f"{check} {counts[PASS]}/{counts[FAIL]}/{counts[SKIPPED]}")
    dt = time.perf_counter() - t0
    ok &= dt <= 120
    record("root strings and minimal decompositions", ok, f"pass/fail/skipped: {', '.join(lines)}; {dt:.1f}s")


def test_dihedral():
    labels = ["A1xA1", "A2", "B2", "G2", "I2(5)"]
    counts, per_type = tally(labels, "dihedral")
    ok = counts[FAIL] == 0 and all(c[PASS] > 0 for c in per_type.values())
    record("dihedral lemma", ok, f"{counts[PASS]} (v, alpha) instances over {len(labels)} types, {counts[FAIL]} fail")


def test_folding():
    t0 = time.perf_counter()
    expected = {"H4": ("E8", 240, 14400), "H3": ("D6", 60, 120), "I2(5)": ("A4", 20, 10)}
    notes = []
    ok = True
    for lab, (target, npsi, nelts) in expected.items():
        certs = [c for chk in suites.ALIASES["folding"] for c in suites.run_suite(lab, chk, OPTS)]
        by = {c.check: c for c in certs}
        ok &= all(c.status == PASS for c in certs)
        ok &= by["fold-type"].detail["identified"] == target and by["fold-type"].detail["psi"] == npsi
        ok &= by["fold-length"].detail["elements"] == nelts
        ok &= by["fold-phi-prime"].detail["forward"] >= 200 and by["fold-phi-prime"].detail["converse"] >= 200
        ok &= by["fold-table"].detail["pairs"] == (npsi // 2) ** 2
        notes.append(f"{lab}->{by['fold-type'].detail['identified']} |Psi|={by['fold-type'].detail['psi']}")
    dt = time.perf_counter() - t0
    ok &= dt <= 300
    record("folding (types, table, factorisation, lengths, phi, phi')", ok, f"{', '.join(notes)}; {dt:.1f}s")


def test_rescaling_invariance():
    labels = [lab for lab in SWEEP_TYPES if lab[0] in "BCFG"]
    counts, per_type = tally(labels, "rescale-invariance")
    ok = counts[FAIL] == 0 and {"B3", "C3", "F4"} <= set(per_type)
    record("rescaling invariance (B/C, F4, G2 duals)", ok,
           f"{counts[PASS]} (J, alpha) comparisons over {len(labels)} types, {counts[FAIL]} fail")


def test_chamber_vectors():
    ok = True
    few = []
    boundary_types = 0
    n = 0
    for lab in SWEEP_TYPES:
        s = get(lab)
        certs = suites.run_suite(lab, "chamber-vector", OPTS)
        vs = {}
        for c in certs:
            vs.setdefault(c.alpha, []).append(c)
        n += len(certs)
        ok &= all(c.status == PASS for c in certs)
        if len(certs) < 100 * 2 ** s.rank:
            few.append(lab)
        if any(stabilizer_datum(s, v) for v in vs):
            boundary_types += 1
    ok &= not few and boundary_types == len(SWEEP_TYPES)
    record("chamber-vector orbit identity", ok,
           f"{n} (v, J) instances, 100 samples per type, boundary vectors in {boundary_types}/{len(SWEEP_TYPES)} types")


def test_determinism():
    checks = ["prop-c", "chamber-vector", "fold-phi", "fold-phi-prime", "prop-a"]
    types = ["A3", "B4", "D5", "F4", "H3", "I2(5)"]

    def stream(jobs):
        cfg = RunConfig(types=types, checks=checks, jobs=jobs, seed=17, options=suites.Options(seed=17))
        buf = io.StringIO()
        write_report(run(cfg, log=io.StringIO()), "json-lines", buf)
        return buf.getvalue().encode()

    a, b, c = stream(1), stream(1), stream(2)
    record("determinism (byte-identical streams)", a == b == c and len(a) > 0, f"{len(a)} bytes, 3 runs (1, 1, 2 workers)")
