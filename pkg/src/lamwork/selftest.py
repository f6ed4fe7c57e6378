"""Reduced-bound run of the workbench invariants, used by ``lamwork selftest``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .adequacy import CandidateSurvives, check_predecessor, church_pred, refute, search_predecessor
from .enumeration import count_closed, enumerate_codes
from .numerals import NOUR_SUCC, builtin, verify_laws
from .random_terms import normalizing_closed_terms, random_term
from .reduction import Verdict, head_reduce
from .syntax import parse, print_term
from .terms import App, Term, app, lam, substitute, var

BATTERY_SEED = 1999
BATTERY_SIZE = 20


def omega_combinator() -> Term:
    return lam("x", app(var("x"), var("x")))


def fixed_candidates() -> dict[str, Term]:
    return {
        "identity": parse(r"\n. n"),
        "second_projection": parse(r"\p. p (\x.\y. y)"),
        "constant_identity": parse(r"\n.\z. z"),
        "church_pred": church_pred(),
        "nour_successor": NOUR_SUCC,
    }


def refutation_battery() -> dict[str, Term]:
    """The fixed candidates followed by seeded random closed normalizing terms."""
    battery = fixed_candidates()
    for i, t in enumerate(normalizing_closed_terms(BATTERY_SIZE, seed=BATTERY_SEED)):
        battery[f"random_{i:02d}"] = t
    return battery


def edge_candidates() -> dict[str, Term]:
    """Candidates whose probes have a leading binder or no head normal form."""
    w = omega_combinator()
    return {
        "lambda_headed": parse(r"\n.\a.\b.\c.\d. d"),
        "unsolvable_divergent": lam("n", App(w, w)),
        "unsolvable_normal": lam("n", "a", app(app(var("a"), w, w), app(var("a"), w, w))),
    }


def substitution_lemma_case(rng: random.Random, names=("a", "b", "c", "d")):
    """One (M, N, h, sigma) sample with h >= 1; returns None if the draw had no head redex."""
    m = random_term(rng, rng.randint(6, 24), names, redex_bias=0.5)
    out = head_reduce(m, rng.randint(1, 30))
    if out.steps == 0:
        return None
    sigma = {
        name: random_term(rng, rng.randint(1, 8), names + ("e",), redex_bias=0.3)
        for name in names
        if rng.random() < 0.7
    }
    return m, out.result, out.steps, sigma


def substitution_lemma_holds(m: Term, n: Term, h: int, sigma) -> bool:
    out = head_reduce(substitute(m, sigma), h)
    return out.steps == h and out.result == substitute(n, sigma)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    seconds: float


def _laws(name: str, bound: int) -> tuple[bool, str]:
    report = verify_laws(builtin(name), bound)
    return report.all_pass, report.verdict


def _church_adequate(bound: int) -> tuple[bool, str]:
    report = check_predecessor(builtin("church"), church_pred(), bound)
    return report.all_pass, report.verdict


def _literal_successor_fixture() -> tuple[bool, str]:
    report = verify_laws(builtin("nour-paper"), 1)
    ff = report.first_failure
    ok = ff is not None and ff.n == 1 and ff.law == "closed_form"
    return ok, "no failure" if ff is None else f"FirstFailure n={ff.n} law={ff.law}"


def _battery() -> tuple[bool, str]:
    nour = builtin("nour")
    bad = []
    cases = set()
    for label, cand in {**refutation_battery(), **edge_candidates()}.items():
        cert = refute(nour, cand, 100_000)
        if isinstance(cert, CandidateSurvives):
            bad.append(label)
            continue
        cases.add(cert.classification.case)
        if cert.verdict == "Refuted" and cert.direct_verdict is not Verdict.NO:
            bad.append(label)
    return not bad, f"cases {sorted(cases)}" + (f"; inconsistent: {bad}" if bad else "")


def _search(max_size: int) -> tuple[bool, str]:
    res = search_predecessor(builtin("nour"), max_size, 3, 500)
    return res.found is None, f"{res.verdict}, {res.tried} candidates"


def _enumeration(max_size: int) -> tuple[bool, str]:
    counts = [0] * (max_size + 1)
    for code in enumerate_codes(max_size):
        counts[len(code)] += 1
    expected = [count_closed(k) for k in range(max_size + 1)]
    return counts == expected, f"counts {counts[1:]}"


def _substitution_lemma(cases: int, seed: int = 7) -> tuple[bool, str]:
    rng = random.Random(seed)
    done = failed = 0
    while done < cases:
        sample = substitution_lemma_case(rng)
        if sample is None:
            continue
        done += 1
        failed += not substitution_lemma_holds(*sample)
    return failed == 0, f"{done} cases, {failed} failures"


def _roundtrip(cases: int, seed: int = 11) -> tuple[bool, str]:
    rng = random.Random(seed)
    failed = 0
    texts: dict[str, Term] = {}
    for _ in range(cases):
        t = random_term(rng, rng.randint(1, 30), ("a", "b", "x", "y"))
        failed += parse(print_term(t, "readable")) != t
        text = print_term(t, "canonical")
        failed += texts.setdefault(text, t) != t
    return failed == 0, f"{cases} terms, {failed} failures"


def checks(quick: bool = True) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    bound = 20 if quick else 50
    return [
        ("church laws", lambda: _laws("church", bound)),
        ("church predecessor", lambda: _church_adequate(bound)),
        ("nour laws", lambda: _laws("nour", bound)),
        ("nour-paper successor fixture", _literal_successor_fixture),
        ("refutation battery", _battery),
        ("brute-force search", lambda: _search(9 if quick else 12)),
        ("enumeration counts", lambda: _enumeration(8 if quick else 9)),
        ("substitution lemma", lambda: _substitution_lemma(200 if quick else 1000)),
        ("syntax round-trip", lambda: _roundtrip(200 if quick else 1000)),
    ]


def run(quick: bool = True) -> list[Check]:
    results = []
    for name, fn in checks(quick):
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an aborted run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(Check(name, ok, detail, time.perf_counter() - start))
    return results
