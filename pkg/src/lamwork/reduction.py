"""Head reduction, normal-order normalization and the semi-decisions built on them.

Fuel always counts beta-contractions.  ``steps`` in a head-reduction outcome
is the length of the head reduction between the input and the result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import _engine
from ._engine import APP, FREE_BASE, LAM
from .terms import App, Bound, Free, Lam, Term, canonical_name
from .syntax import canonical

DEFAULT_FUEL = 100_000
TRACE_LIMIT = 10_000
# terms larger than this stop the reduction as if fuel ran out
MAX_NODES = 200_000


class Status(enum.Enum):
    REACHED = "Reached"
    FUEL_EXHAUSTED = "FuelExhausted"


class Strategy(enum.Enum):
    HEAD = "Head"
    NORMAL_ORDER = "NormalOrder"


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class _Marker:
    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name


AT_HNF = _Marker("AtHnf")
NOT_HNF = _Marker("NotHnf")


@dataclass(frozen=True)
class HnfShape:
    binders: int
    head: str
    args: int
    # de Bruijn index of a bound head, None for a free head
    head_index: int | None = None

    @property
    def lambda_headed(self) -> bool:
        return self.binders > 0


@dataclass(frozen=True)
class ReductionOutcome:
    status: Status
    result: Term
    steps: int
    strategy: Strategy
    trace: tuple[Term, ...] | None = None
    space_exhausted: bool = False

    @property
    def reached(self) -> bool:
        return self.status is Status.REACHED


@dataclass(frozen=True)
class Solvable:
    steps: int


# -- encoding to kernel codes ------------------------------------------------

def encode(m: Term, table: dict[str, int] | None = None) -> list[int]:
    """Flatten ``m`` into preorder code; free names get ids from ``table``."""
    if table is None:
        table = {}
    out: list[int] = []
    stack = [m]
    while stack:
        t = stack.pop()
        if isinstance(t, App):
            out.append(APP)
            stack.append(t.arg)
            stack.append(t.fun)
        elif isinstance(t, Lam):
            out.append(LAM)
            stack.append(t.body)
        elif isinstance(t, Bound):
            out.append(t.index)
        else:
            ident = table.setdefault(t.name, len(table))
            out.append(FREE_BASE - ident)
    return out


def decode(code: Sequence[int], names: Sequence[str] = ()) -> Term:
    # rebuild bottom-up from the reversed preorder
    stack: list[Term] = []
    for t in reversed(code):
        if t == APP:
            f = stack.pop()
            a = stack.pop()
            stack.append(App(f, a))
        elif t == LAM:
            stack.append(Lam(stack.pop()))
        elif t >= 0:
            stack.append(Bound(t))
        else:
            stack.append(Free(names[FREE_BASE - t]))
    (term,) = stack
    return term


def _outcome(raw, names, strategy) -> ReductionOutcome:
    status, code, steps, trace = raw
    return ReductionOutcome(
        status=Status.REACHED if status == _engine.REACHED else Status.FUEL_EXHAUSTED,
        result=decode(code, names),
        steps=steps,
        strategy=strategy,
        trace=None if trace is None else tuple(decode(c, names) for c in trace),
        space_exhausted=status == _engine.SPACE_EXHAUSTED,
    )


def _check_fuel(fuel: int) -> None:
    if fuel < 0:
        raise ValueError("fuel must be non-negative")


# -- operations --------------------------------------------------------------

def head_reduce(m: Term, fuel: int = DEFAULT_FUEL, trace: bool = False,
                max_nodes: int = MAX_NODES) -> ReductionOutcome:
    _check_fuel(fuel)
    table: dict[str, int] = {}
    code = encode(m, table)
    raw = _engine.kernel.head_reduce(code, fuel, max_nodes, TRACE_LIMIT if trace else 0)
    return _outcome(raw, list(table), Strategy.HEAD)


def head_step(m: Term) -> Term | _Marker:
    """Contract the head redex of ``m``, or return ``AT_HNF``."""
    out = head_reduce(m, 1, max_nodes=2**62)
    return AT_HNF if out.steps == 0 else out.result


def normalize(m: Term, fuel: int = DEFAULT_FUEL, trace: bool = False,
              max_nodes: int = MAX_NODES) -> ReductionOutcome:
    """Leftmost-outermost reduction to beta-normal form with a shared step budget."""
    _check_fuel(fuel)
    table: dict[str, int] = {}
    code = encode(m, table)
    raw = _engine.kernel.normalize(code, fuel, max_nodes, TRACE_LIMIT if trace else 0)
    return _outcome(raw, list(table), Strategy.NORMAL_ORDER)


def hnf_shape(m: Term) -> HnfShape | _Marker:
    binders = 0
    while isinstance(m, Lam):
        binders += 1
        m = m.body
    args = 0
    while isinstance(m, App):
        args += 1
        m = m.fun
    if isinstance(m, Lam):
        return NOT_HNF
    if isinstance(m, Free):
        return HnfShape(binders, m.name, args)
    return HnfShape(binders, canonical_name(binders - 1 - m.index), args, m.index)


def beta_eq(a: Term, b: Term, fuel: int = DEFAULT_FUEL) -> Verdict:
    na = normalize(a, fuel)
    if not na.reached:
        return Verdict.UNKNOWN
    nb = normalize(b, fuel)
    if not nb.reached:
        return Verdict.UNKNOWN
    return Verdict.YES if na.result == nb.result else Verdict.NO


def is_solvable(m: Term, fuel: int = DEFAULT_FUEL) -> Solvable | Verdict:
    out = head_reduce(m, fuel)
    return Solvable(out.steps) if out.reached else Verdict.UNKNOWN


# -- trace emission ----------------------------------------------------------

def trace_lines(outcome: ReductionOutcome) -> list[str]:
    return [f"{i}: {canonical(t)}" for i, t in enumerate(outcome.trace or ())]


def trace_records(outcome: ReductionOutcome) -> list[dict]:
    return [{"step": i, "term": canonical(t)} for i, t in enumerate(outcome.trace or ())]
