"""Untyped lambda terms in locally nameless form.

Bound variables are de Bruijn indices (``Bound(0)`` refers to the nearest
enclosing ``Lam``); free variables keep their names.  Binder names survive
only as ``Lam.hint``, which is excluded from comparison, so structural
equality *is* alpha-equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union


@dataclass(frozen=True, slots=True)
class Free:
    name: str


@dataclass(frozen=True, slots=True)
class Bound:
    index: int


@dataclass(frozen=True, slots=True)
class Lam:
    body: "Term"
    hint: str | None = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


Term = Union[Free, Bound, Lam, App]
Substitution = Mapping[str, Term]


# -- construction helpers ----------------------------------------------------

def abstract(term: Term, name: str, depth: int = 0) -> Term:
    """Replace free occurrences of ``name`` by the index of a binder at ``depth``."""
    match term:
        case Free(n):
            return Bound(depth) if n == name else term
        case Bound():
            return term
        case Lam(body, hint):
            return Lam(abstract(body, name, depth + 1), hint)
        case App(f, a):
            return App(abstract(f, name, depth), abstract(a, name, depth))
    raise TypeError(term)


def lam(*args) -> Term:
    """``lam("x", "y", body)`` builds ``λx.λy.body`` binding the free x, y of body."""
    *names, body = args
    for name in reversed(names):
        body = Lam(abstract(body, name), name)
    return body


def app(fun: Term, *args: Term) -> Term:
    for a in args:
        fun = App(fun, a)
    return fun


def var(name: str) -> Free:
    return Free(name)


def shift(term: Term, by: int, cutoff: int = 0) -> Term:
    match term:
        case Bound(k):
            return Bound(k + by) if k >= cutoff else term
        case Free():
            return term
        case Lam(body, hint):
            return Lam(shift(body, by, cutoff + 1), hint)
        case App(f, a):
            return App(shift(f, by, cutoff), shift(a, by, cutoff))
    raise TypeError(term)


# -- queries -----------------------------------------------------------------

def alpha_eq(a: Term, b: Term) -> bool:
    return a == b


def free_vars(m: Term) -> frozenset[str]:
    out: set[str] = set()
    stack = [m]
    while stack:
        t = stack.pop()
        if isinstance(t, Free):
            out.add(t.name)
        elif isinstance(t, Lam):
            stack.append(t.body)
        elif isinstance(t, App):
            stack.append(t.fun)
            stack.append(t.arg)
    return frozenset(out)


def is_closed(m: Term) -> bool:
    return not free_vars(m)


def loose_indices(m: Term, depth: int = 0) -> frozenset[int]:
    """Indices of ``m`` that escape it (relative to ``m``'s root)."""
    match m:
        case Bound(k):
            return frozenset((k - depth,)) if k >= depth else frozenset()
        case Free():
            return frozenset()
        case Lam(body):
            return loose_indices(body, depth + 1)
        case App(f, a):
            return loose_indices(f, depth) | loose_indices(a, depth)
    raise TypeError(m)


def is_well_scoped(m: Term) -> bool:
    return not loose_indices(m)


def size(m: Term) -> int:
    n = 0
    stack = [m]
    while stack:
        t = stack.pop()
        n += 1
        if isinstance(t, Lam):
            stack.append(t.body)
        elif isinstance(t, App):
            stack.append(t.fun)
            stack.append(t.arg)
    return n


def substitute(m: Term, sigma: Substitution) -> Term:
    """Simultaneous, capture-avoiding substitution for free variables.

    Images are well-scoped terms, so placing them under binders needs no
    shifting and nothing they contain can be captured.
    """
    if not sigma:
        return m

    def go(t: Term) -> Term:
        match t:
            case Free(name):
                return sigma.get(name, t)
            case Bound():
                return t
            case Lam(body, hint):
                return Lam(go(body), hint)
            case App(f, a):
                return App(go(f), go(a))
        raise TypeError(t)

    return go(m)


# -- the standard combinators used throughout --------------------------------

TRUE: Term = lam("x", "y", var("x"))
FALSE: Term = lam("x", "y", var("y"))
IDENTITY: Term = lam("x", var("x"))
OMEGA: Term = app(lam("x", app(var("x"), var("x"))), lam("x", app(var("x"), var("x"))))


def pair(m: Term, n: Term) -> Term:
    """``<m, n> = λz.(z m n)``; the binder cannot capture anything in m or n."""
    return Lam(App(App(Bound(0), shift(m, 1)), shift(n, 1)), "z")


# -- named view --------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class NVar:
    name: str


@dataclass(frozen=True, slots=True)
class NLam:
    name: str
    body: "Named"


@dataclass(frozen=True, slots=True)
class NApp:
    fun: "Named"
    arg: "Named"


Named = Union[NVar, NLam, NApp]

_ALPHABET = "xyzwuvabcdefghijklmnopqrst"


def canonical_name(depth: int) -> str:
    base = _ALPHABET[depth % len(_ALPHABET)]
    return base if depth < len(_ALPHABET) else f"{base}{depth // len(_ALPHABET)}"


def _fresh(candidate: str, taken: Iterable[str], sep: str = "") -> str:
    taken = set(taken)
    if candidate not in taken:
        return candidate
    k = 1
    while True:
        name = f"{candidate}{sep * k}" if sep else f"{candidate}{k}"
        if name not in taken:
            return name
        k += 1


def to_named(m: Term, canonical: bool = False) -> Named:
    """Give every binder a printable name.

    Canonical names depend only on binder depth (plus a prime suffix when a
    free variable already uses the name), so alpha-equal terms get the same
    names.  Readable mode starts from the binder hint and adds a numeric
    suffix only when the hint would capture or be captured.
    """
    free = free_vars(m)

    def go(t: Term, env: list[str]) -> Named:
        match t:
            case Free(name):
                return NVar(name)
            case Bound(k):
                return NVar(env[len(env) - 1 - k])
            case App(f, a):
                return NApp(go(f, env), go(a, env))
            case Lam(body, hint):
                depth = len(env)
                if canonical:
                    name = _fresh(canonical_name(depth), free, sep="'")
                else:
                    outer = {env[depth - k] for k in loose_indices(body) if k >= 1}
                    name = _fresh(hint or canonical_name(depth), free | outer)
                return NLam(name, go(body, env + [name]))
        raise TypeError(t)

    return go(m, [])


def from_named(n: Named) -> Term:
    def go(t: Named, env: list[str]) -> Term:
        match t:
            case NVar(name):
                for i in range(len(env) - 1, -1, -1):
                    if env[i] == name:
                        return Bound(len(env) - 1 - i)
                return Free(name)
            case NLam(name, body):
                return Lam(go(body, env + [name]), name)
            case NApp(f, a):
                return App(go(f, env), go(a, env))
        raise TypeError(t)

    return go(n, [])
