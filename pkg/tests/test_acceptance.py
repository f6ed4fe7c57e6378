"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run just this file with ``pytest tests/test_acceptance.py -v`` or as a
script, ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import nullcontext
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from lamwork.adequacy import (  # noqa: E402
    HEAD_NU, HEAD_X, HEAD_Y, LAMBDA_HEADED, UNSOLVABLE, CandidateSurvives, build_probe,
    check_predecessor, church_pred, classify_probe, refute, search_predecessor,
)
from lamwork.enumeration import count_closed, enumerate_codes  # noqa: E402
from lamwork.numerals import builtin, nour_numeral, numerals, verify_laws  # noqa: E402
from lamwork.random_terms import random_term  # noqa: E402
from lamwork.reduction import Verdict, beta_eq, normalize  # noqa: E402
from lamwork.selftest import (  # noqa: E402
    edge_candidates, refutation_battery, substitution_lemma_case, substitution_lemma_holds,
)
from lamwork.syntax import canonical, parse, print_term  # noqa: E402
from lamwork.terms import FALSE, TRUE, App, alpha_eq, from_named, to_named  # noqa: E402

import oracle  # noqa: E402
from test_enumeration import PINNED_COUNTS, brute_force_count  # noqa: E402

RESULTS: dict[str, bool] = {}


def _report(capsys, name: str, ok: bool, detail: str, seconds: float) -> None:
    RESULTS[name] = ok
    line = f"{'PASS' if ok else 'FAIL'}  {name:<28} {detail} ({seconds:.2f}s)"
    with capsys.disabled() if capsys is not None else nullcontext():
        print("\n" + line if capsys is not None else line)
    assert ok, line


def check_adequate_case(capsys=None):
    t0 = time.perf_counter()
    church = builtin("church")
    laws = verify_laws(church, 50)
    pred = check_predecessor(church, church_pred(), 50)
    dt = time.perf_counter() - t0
    ok = laws.all_pass and pred.all_pass and dt < 30
    _report(capsys, "church laws + predecessor", ok, f"laws {laws.verdict}, pred {pred.verdict}", dt)


def check_nour_laws(capsys=None):
    t0 = time.perf_counter()
    nour = builtin("nour")
    report = verify_laws(nour, 50)
    ds = numerals(nour, 50)
    # independent restatement of distinctness and zero tests
    distinct = len(ds) == 51 and all(not alpha_eq(ds[i], ds[j]) for i in range(51) for j in range(i))
    zt = [beta_eq(App(nour.zero_test, d), TRUE if n == 0 else FALSE) for n, d in enumerate(ds)]
    ok = report.all_pass and distinct and all(v is Verdict.YES for v in zt)
    detail = f"{report.verdict}, 51 numerals distinct={distinct}, zero tests {sum(v is Verdict.YES for v in zt)}/51"
    _report(capsys, "nour laws", ok, detail, time.perf_counter() - t0)


def check_literal_successor(capsys=None):
    t0 = time.perf_counter()
    ff = verify_laws(builtin("nour-paper"), 1).first_failure
    ok = (ff is not None and ff.n == 1 and ff.law == "closed_form"
          and ff.expected == r"\x. x (\y.\z. z) (\y.\z. z)"
          and ff.actual == r"\x. x (\y.\z. z) (\y.\z. z (\w.\u. w) (\w. w))")
    detail = "no failure" if ff is None else f"FirstFailure n={ff.n}: expected {ff.expected}, got {ff.actual}"
    _report(capsys, "literal successor fixture", ok, detail, time.perf_counter() - t0)


def _battery_certificates():
    nour = builtin("nour")
    return {name: refute(nour, cand) for name, cand in refutation_battery().items()}, nour


def check_refutation_battery(capsys=None):
    t0 = time.perf_counter()
    certs, nour = _battery_certificates()
    bad = []
    for name, cert in certs.items():
        if isinstance(cert, CandidateSurvives) or cert.verdict != "Refuted":
            bad.append(name)
            continue
        # independent confirmation: normalize P d_{n+1} and compare with d_n
        n = cert.counterexample_n
        out = normalize(App(cert.candidate, nour_numeral(n + 1)), 100_000)
        if out.reached and alpha_eq(out.result, nour_numeral(n)):
            bad.append(name)
    dt = time.perf_counter() - t0
    ok = len(certs) == 25 and not bad and dt < 60
    _report(capsys, "refutation battery", ok, f"{len(certs)} candidates, inconsistent {bad}", dt)


def check_case_coverage(capsys=None):
    t0 = time.perf_counter()
    certs, _ = _battery_certificates()
    seen = {c.classification.case for c in certs.values() if not isinstance(c, CandidateSurvives)}
    edges = {name: classify_probe(build_probe(t), fuel=1000).case for name, t in edge_candidates().items()}
    ok = {HEAD_X, HEAD_Y, HEAD_NU} <= seen and {LAMBDA_HEADED, UNSOLVABLE} <= set(edges.values())
    _report(capsys, "case coverage", ok, f"battery {sorted(seen)}, fixtures {sorted(set(edges.values()))}",
            time.perf_counter() - t0)


def check_brute_force_search(capsys=None):
    t0 = time.perf_counter()
    res = search_predecessor(builtin("nour"), 12, 3, 500)
    dt = time.perf_counter() - t0
    expected = sum(count_closed(n) for n in range(1, 13))
    ok = res.found is None and res.tried == expected and dt < 600
    detail = (f"{res.verdict}, tried {res.tried}/{expected}, rejected at 0: {res.rejected_at_zero}, "
              f"later: {res.rejected_later}, fuel exhausted: {res.fuel_exhausted}")
    _report(capsys, "search size <= 12", ok, detail, dt)


def check_substitution_lemma(capsys=None):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    done = failed = oracle_checked = 0
    while done < 1000:
        case = substitution_lemma_case(rng)
        if case is None:
            continue
        done += 1
        m, n, h, sigma = case
        if not substitution_lemma_holds(m, n, h, sigma):
            failed += 1
        if done % 10 == 0:
            # the reference reducer must agree with the engine's h(M, N)
            got, steps, _ = oracle.run(to_named(m), h, oracle.head_step)
            oracle_checked += 1
            if steps != h or from_named(got) != n:
                failed += 1
    ok = failed == 0
    _report(capsys, "substitution lemma", ok,
            f"{done} cases, {oracle_checked} oracle cross-checks, {failed} failures", time.perf_counter() - t0)


def check_syntax_round_trip(capsys=None):
    t0 = time.perf_counter()
    rng = random.Random(4242)
    terms = [random_term(rng, rng.randint(1, 30), ("a", "b", "x")) for _ in range(1000)]
    failures = sum(not alpha_eq(parse(print_term(t)), t) for t in terms)
    failures += sum(parse(canonical(t)) != t for t in terms)
    by_text: dict[str, object] = {}
    clashes = sum(by_text.setdefault(canonical(t), t) != t for t in terms)
    distinct_terms = len(set(terms))
    ok = failures == 0 and clashes == 0 and len(by_text) == distinct_terms
    _report(capsys, "syntax round-trip", ok,
            f"1000 terms ({distinct_terms} distinct), {failures} round-trip failures, {clashes} canonical clashes",
            time.perf_counter() - t0)


def check_enumeration_counts(capsys=None):
    t0 = time.perf_counter()
    counted = [count_closed(n) for n in range(1, 10)]
    enumerated = [0] * 10
    for code in enumerate_codes(9):
        enumerated[len(code)] += 1
    brute = [brute_force_count(n) for n in range(1, 10)]
    ok = counted == brute == enumerated[1:] == PINNED_COUNTS[1:]
    _report(capsys, "enumeration counts", ok, f"sizes 1..9: {counted}", time.perf_counter() - t0)


# pytest does not inject fixtures into parameters with defaults, hence the wrappers
def test_adequate_case(capsys):
    check_adequate_case(capsys)


def test_nour_laws(capsys):
    check_nour_laws(capsys)


def test_literal_successor(capsys):
    check_literal_successor(capsys)


def test_refutation_battery(capsys):
    check_refutation_battery(capsys)


def test_case_coverage(capsys):
    check_case_coverage(capsys)


def test_brute_force_search(capsys):
    check_brute_force_search(capsys)


def test_substitution_lemma(capsys):
    check_substitution_lemma(capsys)


def test_syntax_round_trip(capsys):
    check_syntax_round_trip(capsys)


def test_enumeration_counts(capsys):
    check_enumeration_counts(capsys)


if __name__ == "__main__":
    checks = [v for k, v in list(globals().items()) if k.startswith("check_") and v.__module__ == __name__]
    for fn in checks:
        try:
            fn()
        except AssertionError:
            pass
    sys.exit(0 if all(RESULTS.values()) else 1)
