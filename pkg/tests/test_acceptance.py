"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``. Criterion 9 needs AUDIOACTIVE_HEAVY=1.
"""

import itertools
import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from conftest import ACCEPTANCE_RESULTS, HEAVY  # noqa: E402

from audioactive import chemistry, fst, machines, theorems  # noqa: E402
from audioactive.machines import A, B  # noqa: E402


def record(name, ok, detail):
    ACCEPTANCE_RESULTS[name] = (ok, detail)
    assert ok, f"{name}: {detail}"


def test_1_table_one():
    start = time.perf_counter()
    report = theorems.prove_splitting(10)
    elapsed = time.perf_counter() - start
    ok = (
        tuple(report.sizes[:9]) == theorems.SPLITTING_SIZES
        and report.sizes[9] == 21
        and elapsed < 5
    )
    record("1. Sink.Audio+^n state counts", ok, f"sizes {report.sizes} in {elapsed:.2f}s (gate 5s)")


def test_2_splitting_theorem():
    report = theorems.prove_splitting(10)
    r = report.recognizer
    witness = B.encode("3*133")
    checks = {
        "R9~R10": fst.equivalent(r(9), r(10)),
        "R8!~R9": not fst.equivalent(r(8), r(9)),
        "witness in R8": fst.accepts(r(8), witness),
        "witness not in R9": not fst.accepts(r(9), witness),
    }
    record("2. Splitting theorem", all(checks.values()), ", ".join(f"{k}={v}" for k, v in checks.items()))


def test_3_reference_tables():
    split = theorems.prove_splitting(10).splitting_recognizer
    atom = theorems.build_atom_recognizer(split)
    t2 = fst.canonical(theorems.parse_table(theorems.SPLITTING_TABLE, B))
    t3 = fst.canonical(theorems.parse_table(theorems.ATOM_TABLE, A))
    ok2, ok3 = fst.isomorphic(split, t2), fst.isomorphic(atom, t3)
    record(
        "3. Splitting/Atom vs reference tables",
        ok2 and ok3 and split.num_states == 21 and atom.num_states == 26,
        f"splitting {split.num_states} states iso={ok2}, atom {atom.num_states} states iso={ok3}",
    )


def test_4_cosmological_fixed_point():
    start = time.perf_counter()
    split = theorems.prove_splitting(10).splitting_recognizer
    atomicf = theorems.build_atomicf(split, theorems.build_atom_recognizer(split))
    report = theorems.prove_cosmological(atomicf, 25)
    elapsed = time.perf_counter() - start
    s = report.sizes
    gates = s[0] == 43 and s[5] == 592 == max(s) and s[23] == 243 and s[24] == 243
    rest = all(s[i] == theorems.COSMOLOGY_SIZES[i] for i in range(25))
    ok = gates and rest and report.fixed_point_n == 24 and elapsed < 30
    record(
        "4. Cosmological fixed point",
        ok,
        f"n1={s[0]} n6={s[5]} n24={s[23]} n25={s[24]}, all 25 values match={rest}, "
        f"fixed point {report.fixed_point_n}, {elapsed:.2f}s (gate 30s)",
    )


def test_5_elements(std, cosmology):
    verdict = theorems.verify_periodic_table(cosmology, splitting=std["splitting"], atom=std["atom"])
    table = chemistry.PERIODIC_TABLE
    decays_ok = (
        table.by_name("He").decay == ("Hf", "Pa", "H", "Ca", "Li")
        and table.by_name("Np").decay == ("Hf", "Pa", "H", "Ca", "Pu")
        and table.by_name("H").decay == ("H",)
    )
    same = set(cosmology.elements) == {e.word for e in table}
    record(
        "5. Element enumeration",
        len(cosmology.elements) == 94 and same and verdict.passed and decays_ok,
        f"{len(cosmology.elements)} words, set-equal={same}, verdict failures={len(verdict.failures)}",
    )


def test_6_growth_ratio():
    g = chemistry.growth_rate()
    lengths = chemistry.derivation_lengths((1,), 41)
    empirical = lengths[41] / lengths[40]
    ok = 1.3035 <= g.lam <= 1.3037 and g.residual <= 1e-10 and abs(empirical - g.lam) < 1e-2
    record(
        "6. Growth ratio",
        ok,
        f"lambda={g.lam:.10f} residual={g.residual:.1e} empirical={empirical:.5f} "
        f"(printed 1.303557 differs in the 5th decimal; computed value is the root)",
    )


def test_7_oracle_equivalence(std):
    oracle = chemistry.SplittingOracle(30)
    bad = checked = 0
    for n in range(1, 8):
        for letters in itertools.product("123d", repeat=n):
            w = "".join(letters)
            for i in range(1, n):
                checked += 1
                if fst.accepts(std["splitting"], B.encode(w[:i] + "*" + w[i:])) != oracle.splits(w[:i], w[i:]):
                    bad += 1
            checked += 1
            if fst.accepts(std["atom"], A.encode(w)) != oracle.is_atom(w):
                bad += 1
    record("7. Oracle equivalence", bad == 0, f"{checked} checks, {bad} discrepancies")


def test_8_fst_property_suite(corpus, splitting_report):
    from test_fst import RANDOM_RECOGNIZERS, check_recognizer, corpus_recognizers

    recs = list(corpus_recognizers(corpus, splitting_report).values()) + RANDOM_RECOGNIZERS
    failures = 0
    for r in recs:
        try:
            check_recognizer(r, 8)
            m = fst.minimize(r)
            assert fst.minimize(m).transitions == m.transitions
            assert fst.canonical(m).transitions == m.transitions
        except AssertionError:
            failures += 1
    record("8. fst property suite", failures == 0, f"{len(recs)} recognizers, words up to length 8, {failures} failing")


@pytest.mark.skipif(
    not HEAVY,
    reason="heavy audit; set AUDIOACTIVE_HEAVY=1 (this build computes 195,938, see README)",
)
def test_9_heavy_audit():
    start = time.perf_counter()
    count = theorems.audit_audio_src(25)
    elapsed = time.perf_counter() - start
    record(
        "9. Audio^25 . Src audit",
        count == theorems.AUDIO_SRC_25_STATES,
        f"{count} states (expected {theorems.AUDIO_SRC_25_STATES}) in {elapsed:.1f}s",
    )


def test_10_reduction(std):
    raw = fst.trim(fst.compose(machines.build_audio(), std["atomicf"]))
    reduced = fst.reduce_transducer(raw)
    rng = random.Random(2024)
    mismatches = 0
    for _ in range(500):
        while True:
            w = "".join(rng.choice("123d") for _ in range(rng.randint(1, 12)))
            if chemistry.is_day_one(w):
                break
        if fst.transduce(raw, A.encode(w)) != fst.transduce(reduced, A.encode(w)):
            mismatches += 1
    record(
        "10. Heuristic reduction",
        reduced.num_states <= 100 and mismatches == 0,
        f"{raw.num_states} -> {reduced.num_states} states (gate 100), {mismatches}/500 mismatches",
    )


if not HEAVY:
    ACCEPTANCE_RESULTS.setdefault("9. Audio^25 . Src audit", (None, "skipped, set AUDIOACTIVE_HEAVY=1"))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
