"""Seeded random term generation for property checks and candidate batteries."""

from __future__ import annotations

import random
from typing import Sequence

from .reduction import normalize
from .terms import App, Bound, Free, Lam, Term


def random_term(
    rng: random.Random,
    size: int,
    free: Sequence[str] = (),
    depth: int = 0,
    redex_bias: float = 0.0,
) -> Term:
    """A term with exactly ``size`` nodes, loose indices below ``depth``, free names from ``free``.

    ``redex_bias`` is the chance that an application gets an abstraction in
    function position, which makes head reductions longer.
    """
    if size < 1:
        raise ValueError("size must be positive")
    leaf_ok = depth > 0 or bool(free)
    if size == 1:
        if not leaf_ok:
            raise ValueError("no variable available for a leaf")
        pick = rng.randrange(depth + len(free))
        return Bound(pick) if pick < depth else Free(free[pick - depth])

    # splits whose parts can both be filled
    min_part = 1 if leaf_ok else 2
    splits = [i for i in range(min_part, size - min_part)] if size >= 3 else []
    if splits and rng.random() < 0.55:
        left = rng.choice(splits)
        right = size - 1 - left
        if left >= 2 and rng.random() < redex_bias:
            fun: Term = Lam(random_term(rng, left - 1, free, depth + 1, redex_bias))
        else:
            fun = random_term(rng, left, free, depth, redex_bias)
        return App(fun, random_term(rng, right, free, depth, redex_bias))
    return Lam(random_term(rng, size - 1, free, depth + 1, redex_bias))


def random_closed(rng: random.Random, size: int, redex_bias: float = 0.0) -> Term:
    return random_term(rng, size, (), 0, redex_bias)


def normalizing_closed_terms(
    count: int,
    seed: int = 1999,
    min_size: int = 6,
    max_size: int = 16,
    fuel: int = 1_000,
) -> list[Term]:
    """``count`` distinct closed terms that reach a normal form within ``fuel`` steps."""
    rng = random.Random(seed)
    out: list[Term] = []
    seen: set[Term] = set()
    while len(out) < count:
        t = random_closed(rng, rng.randint(min_size, max_size), redex_bias=0.3)
        if t in seen or not normalize(t, fuel).reached:
            continue
        seen.add(t)
        out.append(t)
    return out
