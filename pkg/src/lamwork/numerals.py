"""Numeral systems as data, and a mechanical checker for their laws."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .reduction import DEFAULT_FUEL, Verdict, beta_eq, normalize
from .syntax import canonical
from .terms import (
    FALSE, TRUE, App, Bound, Lam, Term, app, is_closed, lam, pair, var,
)


class UnknownSystem(KeyError):
    pass


class FuelExhausted(RuntimeError):
    """A numeral could not be normalized within the fuel budget."""

    def __init__(self, system: str, n: int, fuel: int):
        super().__init__(f"{system}: numeral {n} did not normalize within {fuel} steps")
        self.system = system
        self.n = n
        self.fuel = fuel


@dataclass(frozen=True)
class NumeralSystem:
    name: str
    zero: Term
    successor: Term
    zero_test: Term
    closed_form: Callable[[int], Term] | None = field(default=None, compare=False)

    def __post_init__(self):
        for label in ("zero", "successor", "zero_test"):
            if not is_closed(getattr(self, label)):
                raise ValueError(f"{self.name}: {label} must be closed")


def p_term(n: int) -> Term:
    """``λx_1 ... λx_n. λx. x``."""
    body: Term = Lam(Bound(0), "x")
    for i in range(n, 0, -1):
        body = Lam(body, f"x{i}")
    return body


def nour_numeral(n: int) -> Term:
    return pair(TRUE, p_term(0)) if n == 0 else pair(FALSE, p_term(n))


def church_numeral(n: int) -> Term:
    body = var("x")
    for _ in range(n):
        body = App(var("f"), body)
    return lam("f", "x", body)


CHURCH_SUCC = lam("n", "f", "x", app(var("f"), app(var("n"), var("f"), var("x"))))
CHURCH_ZERO_TEST = lam("n", app(var("n"), lam("z", FALSE), TRUE))

NOUR_SUCC = lam("n", pair(FALSE, lam("x", app(var("n"), FALSE))))
NOUR_LITERAL_SUCC = lam("n", pair(FALSE, lam("x", var("n"))))
NOUR_ZERO_TEST = lam("n", app(var("n"), TRUE))


def builtin(name: str) -> NumeralSystem:
    if name == "church":
        return NumeralSystem("church", church_numeral(0), CHURCH_SUCC, CHURCH_ZERO_TEST, church_numeral)
    if name == "nour":
        return NumeralSystem("nour", nour_numeral(0), NOUR_SUCC, NOUR_ZERO_TEST, nour_numeral)
    if name == "nour-paper":
        return NumeralSystem("nour-paper", nour_numeral(0), NOUR_LITERAL_SUCC, NOUR_ZERO_TEST, nour_numeral)
    raise UnknownSystem(name)


BUILTIN_NAMES = ("church", "nour", "nour-paper")


def numerals(sys: NumeralSystem, upto: int, fuel: int = DEFAULT_FUEL) -> list[Term]:
    """``[d_0, ..., d_upto]``, each the normal form of the successor applied to the previous."""
    out = [sys.zero]
    for n in range(1, upto + 1):
        res = normalize(App(sys.successor, out[-1]), fuel)
        if not res.reached:
            raise FuelExhausted(sys.name, n, fuel)
        out.append(res.result)
    return out


def numeral(sys: NumeralSystem, n: int, fuel: int = DEFAULT_FUEL) -> Term:
    return numerals(sys, n, fuel)[n]


# -- law verification --------------------------------------------------------

LAWS = ("normal", "distinct", "closed_form", "zero_test")


@dataclass(frozen=True)
class LawRecord:
    n: int
    normal_ok: bool
    distinct_ok: bool
    successor_ok: bool  # agreement with the closed form, i.e. S d_{n-1} = d_n
    zerotest_ok: bool

    @property
    def ok(self) -> bool:
        return self.normal_ok and self.distinct_ok and self.successor_ok and self.zerotest_ok


@dataclass(frozen=True)
class LawFailure:
    n: int
    law: str
    expected: str
    actual: str


@dataclass(frozen=True)
class LawReport:
    system: str
    bound: int
    fuel: int
    per_index: tuple[LawRecord, ...]
    failures: tuple[LawFailure, ...]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> LawFailure | None:
        return self.failures[0] if self.failures else None

    @property
    def verdict(self) -> str:
        return "AllPass" if self.all_pass else "FirstFailure"

    def to_dict(self) -> dict:
        ff = self.first_failure
        return {
            "system": self.system,
            "bound": self.bound,
            "fuel": self.fuel,
            "verdict": self.verdict,
            "first_failure": None if ff is None else {"n": ff.n, "law": ff.law},
            "failures": [
                {"n": f.n, "law": f.law, "expected": f.expected, "actual": f.actual}
                for f in self.failures
            ],
        }


def _nf_text(m: Term, fuel: int) -> str:
    res = normalize(m, fuel)
    return canonical(res.result) if res.reached else f"<no normal form within {fuel} steps>"


def verify_laws(sys: NumeralSystem, bound: int, fuel: int = DEFAULT_FUEL) -> LawReport:
    """Check the numeral-system laws for ``d_0 .. d_bound``.

    Numerals come from iterating the successor.  The successor law is
    checked against ``closed_form`` when the system has one; otherwise the
    iterated numerals define the sequence and only normality, distinctness
    and the zero test are checked.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    records: list[LawRecord] = []
    failures: list[LawFailure] = []
    seen: dict[Term, int] = {}
    current = sys.zero
    for n in range(bound + 1):
        if n > 0:
            res = normalize(App(sys.successor, current), fuel)
            if not res.reached:
                failures.append(LawFailure(
                    n, "closed_form",
                    canonical(sys.closed_form(n)) if sys.closed_form else "<normal form>",
                    f"<successor did not normalize within {fuel} steps>",
                ))
                records.append(LawRecord(n, False, False, False, False))
                break
            current = res.result
        d = current
        row: list[LawFailure] = []

        normal_ok = normalize(d, fuel).steps == 0
        if not normal_ok:
            row.append(LawFailure(n, "normal", _nf_text(d, fuel), canonical(d)))

        distinct_ok = d not in seen
        if not distinct_ok:
            m = seen[d]
            row.append(LawFailure(n, "distinct", f"differs from d_{m} = {canonical(d)}", canonical(d)))
        else:
            seen[d] = n

        successor_ok = True
        if sys.closed_form is not None:
            expected = sys.closed_form(n)
            successor_ok = d == expected
            if not successor_ok:
                row.append(LawFailure(n, "closed_form", canonical(expected), canonical(d)))

        target = TRUE if n == 0 else FALSE
        test = App(sys.zero_test, d)
        zerotest_ok = beta_eq(test, target, fuel) is Verdict.YES
        if not zerotest_ok:
            row.append(LawFailure(n, "zero_test", canonical(target), _nf_text(test, fuel)))

        records.append(LawRecord(n, normal_ok, distinct_ok, successor_ok, zerotest_ok))
        failures.extend(row)
    return LawReport(sys.name, bound, fuel, tuple(records), tuple(failures))


def format_report(report: LawReport) -> str:
    lines = [f"system {report.system}: laws for d_0..d_{report.bound} (fuel {report.fuel})"]
    if report.all_pass:
        lines.append(f"AllPass ({len(report.per_index)} numerals)")
    else:
        ff = report.first_failure
        lines.append(f"FirstFailure n={ff.n} law={ff.law}")
        lines.append(f"  expected: {ff.expected}")
        lines.append(f"  actual:   {ff.actual}")
        if len(report.failures) > 1:
            lines.append(f"  ({len(report.failures)} failures in total)")
    return "\n".join(lines)
