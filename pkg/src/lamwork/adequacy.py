"""Predecessor checking, and refutation of predecessor candidates for the pair-based numerals.

A candidate predecessor ``P`` is turned into the probe
``Q = λn.((P <F, n>) T)``.  Because the pair-based numerals are
``d_{n+1} = <F, p_{n+1}>``, the predecessor law forces ``Q p_1 x y`` to reach
``x`` and ``Q p_{n+1} x y`` to reach ``y`` for ``n >= 1``.  Head-reducing
``Q ν x y`` with a fresh ``ν`` and reading off the head of the result says
which of those requirements must break, and where.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _engine
from .enumeration import count_closed, enumerate_codes, enumerate_closed
from .numerals import NumeralSystem, nour_numeral, numerals, p_term
from .reduction import (
    DEFAULT_FUEL, MAX_NODES, HnfShape, Verdict, decode, encode, head_reduce, hnf_shape, normalize,
)
from .syntax import canonical
from .terms import FALSE, TRUE, App, Free, Term, app, free_vars, lam, pair, var

__all__ = [
    "NotClosed", "WrongSystem", "PredecessorReport", "PredecessorRecord", "check_predecessor",
    "church_pred", "build_probe", "classify_probe", "ProbeClassification", "refute",
    "RefutationCertificate", "CandidateSurvives", "search_predecessor", "SearchResult",
    "enumerate_closed", "PROBE_VARS",
]

NU, X, Y = "ν", "x", "y"
PROBE_VARS = (NU, X, Y)


class NotClosed(ValueError):
    pass


class WrongSystem(ValueError):
    pass


def _require_closed(term: Term, what: str = "candidate") -> None:
    fv = free_vars(term)
    if fv:
        raise NotClosed(f"{what} has free variables: {', '.join(sorted(fv))}")


# -- predecessor law ---------------------------------------------------------

@dataclass(frozen=True)
class PredecessorRecord:
    n: int
    passed: bool
    observed: Term | None  # None when normalization ran out of fuel
    steps: int


@dataclass(frozen=True)
class PredecessorReport:
    system: str
    candidate: Term
    bound: int
    fuel: int
    per_index: tuple[PredecessorRecord, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.per_index)

    @property
    def first_failure(self) -> int | None:
        return next((r.n for r in self.per_index if not r.passed), None)

    @property
    def verdict(self) -> str:
        return "AllPass" if self.all_pass else "FirstFailure"

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "candidate": canonical(self.candidate),
            "bound": self.bound,
            "fuel": self.fuel,
            "verdict": self.verdict,
            "first_failure": self.first_failure,
            "per_index": [
                {
                    "n": r.n,
                    "pass": r.passed,
                    "observed": None if r.observed is None else canonical(r.observed),
                    "steps": r.steps,
                }
                for r in self.per_index
            ],
        }


def check_predecessor(
    sys: NumeralSystem,
    candidate: Term,
    bound: int,
    fuel: int = DEFAULT_FUEL,
    stop_at_first: bool = False,
) -> PredecessorReport:
    """Check ``(candidate d_{n+1}) = d_n`` for ``n < bound``; fuel exhaustion counts as failure."""
    _require_closed(candidate)
    ds = numerals(sys, bound, fuel)
    records = []
    for n in range(bound):
        out = normalize(App(candidate, ds[n + 1]), fuel)
        observed = out.result if out.reached else None
        ok = observed is not None and observed == ds[n]
        records.append(PredecessorRecord(n, ok, observed, out.steps))
        if stop_at_first and not ok:
            break
    return PredecessorReport(sys.name, candidate, bound, fuel, tuple(records))


def church_pred() -> Term:
    """``λn. fst (n (λp. <snd p, succ (snd p)>) <c_0, c_0>)``."""
    c0 = lam("f", "x", var("x"))
    succ = lam("m", "f", "x", app(var("f"), app(var("m"), var("f"), var("x"))))
    snd = app(var("p"), FALSE)
    step = lam("p", pair(snd, app(succ, snd)))
    return lam("n", app(var("n"), step, pair(c0, c0), TRUE))


# -- probe and its classification --------------------------------------------

def build_probe(candidate: Term) -> Term:
    """``λn.((candidate <F, n>) T)``."""
    _require_closed(candidate)
    return lam("n", app(candidate, pair(FALSE, var("n")), TRUE))


HEAD_X = "HeadX"
HEAD_Y = "HeadY"
HEAD_NU = "HeadNu"
LAMBDA_HEADED = "LambdaHeaded"
UNSOLVABLE = "Unsolvable"


@dataclass(frozen=True)
class ProbeClassification:
    case: str
    binders: int = 0
    head: str | None = None
    args: int = 0
    steps: int = 0  # head-reduction length, or fuel spent when unsolvable

    def to_dict(self) -> dict:
        return {"case": self.case, "binders": self.binders, "head": self.head, "args": self.args}

    def __str__(self) -> str:
        if self.case == UNSOLVABLE:
            return f"Unsolvable(fuel {self.steps})"
        if self.case == LAMBDA_HEADED:
            return f"LambdaHeaded(binders={self.binders}, head={self.head}, args={self.args})"
        return f"{self.case}({self.args})"


def _probe_application(probe: Term, first: Term) -> Term:
    return app(probe, first, var(X), var(Y))


def classify_probe(probe: Term, fuel: int = DEFAULT_FUEL) -> ProbeClassification:
    """Head-reduce ``probe ν x y`` and classify the head normal form."""
    _require_closed(probe, "probe")
    out = head_reduce(_probe_application(probe, var(NU)), fuel)
    if not out.reached:
        return ProbeClassification(UNSOLVABLE, steps=out.steps)
    shape = hnf_shape(out.result)
    if shape.binders > 0:
        return ProbeClassification(LAMBDA_HEADED, shape.binders, shape.head, shape.args, out.steps)
    case = {X: HEAD_X, Y: HEAD_Y, NU: HEAD_NU}[shape.head]
    return ProbeClassification(case, 0, shape.head, shape.args, out.steps)


def counterexample_index(cls: ProbeClassification) -> tuple[int, str]:
    """Index ``n`` at which the predecessor law must fail, and the variable it requires."""
    if cls.case == HEAD_X:
        return 1, Y
    if cls.case == HEAD_NU:
        return cls.args + 1, Y
    # HeadY, a leading binder, or no head normal form: the law already fails at 0
    return 0, X


# -- refutation --------------------------------------------------------------

REFUTED = "Refuted"
REFUTED_MODULO_FUEL = "RefutedModuloFuel"


@dataclass(frozen=True)
class RefutationCertificate:
    candidate: Term
    probe: Term
    classification: ProbeClassification
    counterexample_n: int
    required: str
    observed_probe: Term | None  # head normal form of (probe p_{n+1} x y), None if not reached
    observed_probe_hnf: HnfShape | None
    lhs: Term | None  # normal form of (candidate d_{n+1}), None if not reached
    rhs: Term
    direct_verdict: Verdict
    fuel: int
    verdict: str

    def to_dict(self) -> dict:
        shape = self.observed_probe_hnf
        return {
            "candidate": canonical(self.candidate),
            "probe": canonical(self.probe),
            "classification": self.classification.to_dict(),
            "counterexample": {
                "n": self.counterexample_n,
                "required": self.required,
                "observed": None if self.observed_probe is None else canonical(self.observed_probe),
                "observed_shape": None if shape is None else {
                    "binders": shape.binders, "head": shape.head, "args": shape.args,
                },
            },
            "direct_check": {
                "lhs_nf": None if self.lhs is None else canonical(self.lhs),
                "rhs_nf": canonical(self.rhs),
                "verdict": self.direct_verdict.value,
            },
            "fuel": self.fuel,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class CandidateSurvives:
    """The refutation could not be completed; ``reason`` says which check held."""

    candidate: Term
    classification: ProbeClassification
    counterexample_n: int
    reason: str
    fuel: int

    verdict = "CandidateSurvives"

    def to_dict(self) -> dict:
        return {
            "candidate": canonical(self.candidate),
            "classification": self.classification.to_dict(),
            "counterexample": {"n": self.counterexample_n},
            "reason": self.reason,
            "fuel": self.fuel,
            "verdict": self.verdict,
        }


def _require_nour_shape(sys: NumeralSystem, fuel: int) -> None:
    try:
        ds = numerals(sys, 2, fuel)
    except RuntimeError as exc:
        raise WrongSystem(f"{sys.name}: {exc}") from exc
    if any(d != nour_numeral(i) for i, d in enumerate(ds)):
        raise WrongSystem(f"{sys.name}: numerals are not <T, p_0>, <F, p_1>, <F, p_2>")


def refute(
    sys: NumeralSystem, candidate: Term, fuel: int = DEFAULT_FUEL
) -> RefutationCertificate | CandidateSurvives:
    _require_closed(candidate)
    _require_nour_shape(sys, fuel)
    probe = build_probe(candidate)
    cls = classify_probe(probe, fuel)
    n, required = counterexample_index(cls)

    # (a) the probe at p_{n+1} must not head-reduce to the required variable
    instance = head_reduce(_probe_application(probe, p_term(n + 1)), fuel)
    observed = instance.result if instance.reached else None
    observed_shape = hnf_shape(observed) if observed is not None else None

    # (b) the law itself, by normalization
    ds = numerals(sys, n + 1, fuel)
    lhs_out = normalize(App(candidate, ds[n + 1]), fuel)
    lhs = lhs_out.result if lhs_out.reached else None
    if lhs is None:
        direct = Verdict.UNKNOWN
    else:
        direct = Verdict.YES if lhs == ds[n] else Verdict.NO

    if direct is Verdict.YES or observed == Free(required):
        reason = (
            f"law holds at n={n}" if direct is Verdict.YES
            else f"probe at p_{n + 1} reaches {required}"
        )
        return CandidateSurvives(candidate, cls, n, reason, fuel)

    verdict = REFUTED if direct is Verdict.NO else REFUTED_MODULO_FUEL
    return RefutationCertificate(
        candidate=candidate,
        probe=probe,
        classification=cls,
        counterexample_n=n,
        required=required,
        observed_probe=observed,
        observed_probe_hnf=observed_shape,
        lhs=lhs,
        rhs=ds[n],
        direct_verdict=direct,
        fuel=fuel,
        verdict=verdict,
    )


def format_certificate(cert: RefutationCertificate | CandidateSurvives) -> str:
    if isinstance(cert, CandidateSurvives):
        return "\n".join([
            f"candidate:      {canonical(cert.candidate)}",
            f"classification: {cert.classification}",
            f"CandidateSurvives at n={cert.counterexample_n}: {cert.reason}",
        ])
    obs = "<no head normal form within fuel>" if cert.observed_probe is None else canonical(cert.observed_probe)
    lhs = "<no normal form within fuel>" if cert.lhs is None else canonical(cert.lhs)
    return "\n".join([
        f"candidate:      {canonical(cert.candidate)}",
        f"probe:          {canonical(cert.probe)}",
        f"classification: {cert.classification}",
        f"counterexample: n={cert.counterexample_n} requires {cert.required}, "
        f"probe at p_{cert.counterexample_n + 1} gives {obs}",
        f"direct check:   P d_{cert.counterexample_n + 1} = {lhs}",
        f"                d_{cert.counterexample_n} = {canonical(cert.rhs)}",
        f"                beta_eq: {cert.direct_verdict.value}",
        f"verdict:        {cert.verdict}",
    ])


# -- brute-force search ------------------------------------------------------

@dataclass
class SearchResult:
    system: str
    max_size: int
    law_bound: int
    fuel: int
    tried: int = 0
    rejected_at_zero: int = 0
    rejected_later: int = 0
    fuel_exhausted: int = 0
    found: Term | None = None
    found_index: int | None = None

    @property
    def verdict(self) -> str:
        return "NoneFound" if self.found is None else "Found"

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "max_size": self.max_size,
            "law_bound": self.law_bound,
            "fuel": self.fuel,
            "verdict": self.verdict,
            "found": None if self.found is None else canonical(self.found),
            "statistics": {
                "tried": self.tried,
                "rejected_at_zero": self.rejected_at_zero,
                "rejected_later": self.rejected_later,
                "fuel_exhausted": self.fuel_exhausted,
            },
        }


def _scan(job) -> tuple[int, int, int, int, int | None, tuple | None]:
    """Check one slice of the enumeration; returns counts and the first survivor."""
    max_size, start, stop, num_codes, fuel = job
    normalize_code = _engine.kernel.normalize
    tried = at_zero = later = exhausted = 0
    for index, cand in enumerate(itertools.islice(enumerate_codes(max_size), start, stop), start):
        tried += 1
        cand = list(cand)
        for n in range(len(num_codes) - 1):
            status, out, _, _ = normalize_code([_engine.APP] + cand + num_codes[n + 1], fuel, MAX_NODES)
            if status != _engine.REACHED:
                exhausted += 1
            elif out == num_codes[n]:
                continue
            if n == 0:
                at_zero += 1
            else:
                later += 1
            break
        else:
            return tried, at_zero, later, exhausted, index, tuple(cand)
    return tried, at_zero, later, exhausted, None, None


def search_predecessor(
    sys: NumeralSystem,
    max_size: int,
    law_bound: int,
    fuel: int = DEFAULT_FUEL,
    workers: int = 1,
    chunk: int = 20_000,
) -> SearchResult:
    """Try every closed term of size <= ``max_size`` as a predecessor.

    Law indices are tried from ``n = 0`` upward and a candidate is dropped
    at its first failure.  With several workers the earliest survivor in
    enumeration order is reported.
    """
    num_codes = [encode(d) for d in numerals(sys, law_bound, DEFAULT_FUEL)]
    result = SearchResult(sys.name, max_size, law_bound, fuel)
    total = sum(count_closed(k) for k in range(1, max_size + 1))
    jobs = [(max_size, s, min(s + chunk, total), num_codes, fuel) for s in range(0, total, chunk)]

    if workers <= 1:
        outcomes = []
        for job in jobs:
            outcomes.append(_scan(job))
            if outcomes[-1][4] is not None:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_scan, jobs))
        # drop work past the earliest survivor so the statistics match a serial run
        cut = next((i for i, o in enumerate(outcomes) if o[4] is not None), None)
        if cut is not None:
            outcomes = outcomes[: cut + 1]

    for tried, at_zero, later, exhausted, index, code in outcomes:
        result.tried += tried
        result.rejected_at_zero += at_zero
        result.rejected_later += later
        result.fuel_exhausted += exhausted
        if index is not None:
            result.found = decode(code)
            result.found_index = index
    return result
