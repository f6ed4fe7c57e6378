"""Reference reducer on *named* terms with textbook capture-avoiding substitution.

Deliberately shares nothing with the flat-code kernel beyond the named view.
"""

from __future__ import annotations

import itertools

from lamwork.terms import NApp, NLam, NVar, Named

_counter = itertools.count()


def fv(t: Named) -> set[str]:
    if isinstance(t, NVar):
        return {t.name}
    if isinstance(t, NLam):
        return fv(t.body) - {t.name}
    return fv(t.fun) | fv(t.arg)


def fresh(avoid: set[str]) -> str:
    while True:
        name = f"_v{next(_counter)}"
        if name not in avoid:
            return name


def subst(t: Named, x: str, s: Named) -> Named:
    if isinstance(t, NVar):
        return s if t.name == x else t
    if isinstance(t, NApp):
        return NApp(subst(t.fun, x, s), subst(t.arg, x, s))
    if t.name == x:
        return t
    if t.name in fv(s) and x in fv(t.body):
        new = fresh(fv(s) | fv(t.body) | {x})
        return NLam(new, subst(subst(t.body, t.name, NVar(new)), x, s))
    return NLam(t.name, subst(t.body, x, s))


def head_step(t: Named) -> Named | None:
    if isinstance(t, NLam):
        inner = head_step(t.body)
        return None if inner is None else NLam(t.name, inner)
    spine = []
    while isinstance(t, NApp):
        spine.append(t.arg)
        t = t.fun
    if not spine or not isinstance(t, NLam):
        return None
    spine.reverse()
    out = subst(t.body, t.name, spine[0])
    for a in spine[1:]:
        out = NApp(out, a)
    return out


def leftmost_step(t: Named) -> Named | None:
    if isinstance(t, NVar):
        return None
    if isinstance(t, NLam):
        inner = leftmost_step(t.body)
        return None if inner is None else NLam(t.name, inner)
    if isinstance(t.fun, NLam):
        return subst(t.fun.body, t.fun.name, t.arg)
    f = leftmost_step(t.fun)
    if f is not None:
        return NApp(f, t.arg)
    a = leftmost_step(t.arg)
    return None if a is None else NApp(t.fun, a)


def run(t: Named, fuel: int, step) -> tuple[Named, int, bool]:
    """Returns (final term, steps taken, reached a term with no redex of this kind)."""
    for n in range(fuel + 1):
        nxt = step(t)
        if nxt is None:
            return t, n, True
        if n == fuel:
            return t, n, False
        t = nxt
    raise AssertionError("unreachable")


def size(t: Named) -> int:
    if isinstance(t, NVar):
        return 1
    if isinstance(t, NLam):
        return 1 + size(t.body)
    return 1 + size(t.fun) + size(t.arg)
