"""Acceptance criteria 1-9, each at its stated range and tolerance.

Every test prints one ``[PASS]``/``[FAIL]`` line and adds it to the
"acceptance criteria" section of the pytest terminal summary.
"""

import json
import os
import time
from itertools import combinations_with_replacement

from potent.characterize import EXCEPTIONS, MIN_ORDER, expand_entry, predicate_for
from potent.graph import target_pattern
from potent.oracle import oracle_search
from potent.sequence import enumerate_graphic, is_graphic, lay_off, path_cycle_check
from potent.sigma import extremal_sequence, sigma_value
from potent.verify import verify_range

from .conftest import ACCEPTANCE_LINES

WORKERS = max(1, min(4, os.cpu_count() or 1))
CUBIC = ("K33", "K6minusC6")
ALL = ("K23", "K5minusP4", "K33", "K6minusC6")


def record(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def test_criterion_1_cubic_characterizations_match_exhaustive_oracle():
    start = time.perf_counter()
    failures, tested = [], 0
    for tag in CUBIC:
        report = verify_range(tag, 6, 9, workers=WORKERS, mode="exhaustive")
        tested += report.sequences_tested
        failures += report.mismatches
        assert report.agreements + len(report.mismatches) == report.sequences_tested
    for m in failures:
        print("MISMATCH", json.dumps(m, sort_keys=True))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 30 * 60
    record(1, ok, f"K33 and K6minusC6, n=6..9: {tested} sequences, {len(failures)} mismatches, {elapsed:.0f}s")
    assert ok


def test_criterion_2_sigma_k6c6():
    values = {n: sigma_value("K6minusC6", n).sigma for n in range(6, 11)}
    by_oracle = {n: sigma_value("K6minusC6", n, method="oracle", mode="exhaustive").sigma for n in (6, 7, 8)}
    ok = all(v == 6 * n - 10 for n, v in values.items()) and all(by_oracle[n] == values[n] for n in by_oracle)
    record(2, ok, f"sigma(K6minusC6, n) predicate {values}, oracle {by_oracle}, expected 6n-10")
    assert ok


def test_criterion_3_sigma_k33():
    got, times = {}, {}
    for n in (11, 12):
        start = time.perf_counter()
        got[n] = sigma_value("K33", n).sigma
        times[n] = time.perf_counter() - start
    ok = got == {11: 52, 12: 56} and all(t <= 300 for t in times.values())
    record(3, ok, f"sigma(K33, 11)={got[11]}, sigma(K33, 12)={got[12]}; "
                  f"times {times[11]:.1f}s, {times[12]:.1f}s (limit 300s each)")
    assert ok


def test_criterion_4_extremal_witnesses():
    cases = [("K33", n, 5 * n - 5 if n % 2 else 5 * n - 6) for n in (11, 12)]
    cases += [("K6minusC6", n, 6 * n - 12) for n in range(6, 11)]
    bad = []
    for tag, n, total in cases:
        seq = extremal_sequence(tag, n)
        if not (is_graphic(seq) and seq.sigma == total and not predicate_for(tag)(seq).potential):
            bad.append(f"{tag} n={n} ({seq})")
    ok = not bad
    record(4, ok, f"{len(cases)} extremal sequences graphic, exact sums, predicate-false" + (f"; bad: {bad}" if bad else ""))
    assert ok


def _table_instances(tag):
    out = []
    for j, template in enumerate(EXCEPTIONS[tag], start=1):
        members = [m for n in range(MIN_ORDER[tag], 17) if (m := expand_entry(template, n)) and is_graphic(m)]
        out += [(j, m) for m in (members[:2] if "n" in template else members[:1])]
    return out


def test_criterion_5_exception_lists():
    bad, checked = [], 0
    start = time.perf_counter()
    for tag in CUBIC:
        pred = predicate_for(tag)
        for j, terms in _table_instances(tag):
            checked += 1
            verdict = pred(terms)
            found = oracle_search(terms, target_pattern(tag), "exhaustive", cap=max(10, len(terms)))
            if verdict.potential or found.potential:
                bad.append({"target": tag, "entry": j, "sequence": terms,
                            "predicate": verdict.to_json(), "oracle": found.to_json()})
    for b in bad:
        print("EXCEPTION-LIST FAILURE", json.dumps(b, sort_keys=True))
    ok = not bad
    record(5, ok, f"{checked} exception instances graphic, predicate-false, exhaustive oracle finds no realization "
                  f"({time.perf_counter() - start:.0f}s)")
    assert ok


def test_criterion_6_graphicality_cross_check():
    disagreements, count = [], 0
    for n in range(1, 9):
        for terms in combinations_with_replacement(range(7, -1, -1), n):
            count += 1
            if is_graphic(terms, "erdos_gallai") != is_graphic(terms, "kleitman_wang"):
                disagreements.append(terms)
    unsound, applied = [], 0
    for n in range(1, 11):
        for terms in combinations_with_replacement(range(n - 1, -1, -1), n):
            if path_cycle_check(terms) == "applies_and_graphic":
                applied += 1
                if not (is_graphic(terms) and is_graphic(terms, "kleitman_wang")):
                    unsound.append(terms)
    ok = not disagreements and not unsound
    record(6, ok, f"EG == KW on {count} sequences (n<=8, terms<=7); path/cycle hypothesis held on {applied} "
                  f"sequences (n<=10), all graphic" + (f"; bad: {disagreements[:3]} {unsound[:3]}" if not ok else ""))
    assert ok


def test_criterion_7_oracle_modes_agree():
    bad, count = [], 0
    for tag in ALL:
        h = target_pattern(tag)
        for n in range(h.order, 9):
            for seq in enumerate_graphic(n):
                count += 1
                a = oracle_search(seq, h, "exhaustive")
                b = oracle_search(seq, h, "top_degree")
                if a.potential != b.potential:
                    bad.append((tag, str(seq)))
                for r in (a, b):
                    if r.witness is not None and not r.witness.validate():
                        bad.append((tag, str(seq), "invalid witness"))
    ok = not bad
    record(7, ok, f"exhaustive vs top-degree agree on {count} (target, sequence) pairs, n<=8" + (f"; bad: {bad[:5]}" if bad else ""))
    assert ok


def test_criterion_8_auxiliary_predicates():
    failures, tested = [], 0
    for tag in ("K23", "K5minusP4"):
        report = verify_range(tag, 5, 8, workers=WORKERS, mode="exhaustive")
        tested += report.sequences_tested
        failures += report.mismatches
    for m in failures:
        print("MISMATCH", json.dumps(m, sort_keys=True))
    ok = not failures
    record(8, ok, f"K23 and K5minusP4, n=5..8: {tested} sequences, {len(failures)} mismatches")
    assert ok


def test_criterion_9_monotone_under_lay_off():
    bad, pairs = [], 0
    for tag in ALL:
        pred = predicate_for(tag)
        for n in range(MIN_ORDER[tag] + 1, 9):
            for seq in enumerate_graphic(n):
                for k in range(1, n + 1):
                    res = lay_off(seq, k)
                    # residuals with a zero term are outside the predicates' domain
                    if res.terms[-1] < 1:
                        continue
                    pairs += 1
                    if pred(res).potential and not pred(seq).potential:
                        bad.append((tag, str(seq), k))
    ok = not bad
    record(9, ok, f"predicate(residual) => predicate(sequence) on {pairs} lay-off pairs, n<=8, all four targets"
                  + (f"; bad: {bad[:5]}" if bad else ""))
    assert ok

