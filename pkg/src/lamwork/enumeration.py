"""Exhaustive enumeration of closed terms by size.

Order: increasing size; within a size, variables before abstractions
before applications; variables by increasing index; applications by
increasing size of the function part, then function order, then argument
order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from ._engine import APP, LAM
from .reduction import decode
from .terms import Term

Code = tuple[int, ...]


@lru_cache(maxsize=None)
def _stratum(n: int, depth: int) -> tuple[Code, ...]:
    return tuple(_generate(n, depth))


def _generate(n: int, depth: int) -> Iterator[Code]:
    """All terms of size ``n`` whose loose indices are below ``depth``."""
    if n == 1:
        for k in range(depth):
            yield (k,)
        return
    for body in _stratum(n - 1, depth + 1):
        yield (LAM,) + body
    for left in range(1, n - 1):
        right = n - 1 - left
        rights = _stratum(right, depth)
        if not rights:
            continue
        for f in _stratum(left, depth):
            for a in rights:
                yield (APP,) + f + a


def enumerate_codes(max_size: int) -> Iterator[Code]:
    for n in range(1, max_size + 1):
        yield from _generate(n, 0)


def enumerate_closed(max_size: int) -> Iterator[Term]:
    """Every closed term of size <= ``max_size``, each exactly once."""
    for code in enumerate_codes(max_size):
        yield decode(code)


def count_closed(n: int, depth: int = 0) -> int:
    """Number of terms of size ``n`` with loose indices below ``depth`` (counted, not generated)."""
    return _count(n, depth)


@lru_cache(maxsize=None)
def _count(n: int, depth: int) -> int:
    if n < 1:
        return 0
    if n == 1:
        return depth
    total = _count(n - 1, depth + 1)
    for left in range(1, n - 1):
        total += _count(left, depth) * _count(n - 1 - left, depth)
    return total
