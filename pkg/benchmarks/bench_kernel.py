"""Compiled kernel vs. pure-Python fallback on the workbench's hot paths.

    python benchmarks/bench_kernel.py [--repeat 3] [--max-size 10]

Each workload runs with ``_engine.kernel`` pointed at one backend in turn,
and the best of ``--repeat`` wall-clock times is reported.
"""

from __future__ import annotations

import argparse
import time

from lamwork import _engine, _pykernel
from lamwork.adequacy import check_predecessor, church_pred, search_predecessor
from lamwork.numerals import builtin, church_numeral
from lamwork.reduction import normalize
from lamwork.terms import app

try:
    from lamwork import _ckernel
except ImportError:
    _ckernel = None


def workloads(max_size: int):
    nour, church = builtin("nour"), builtin("church")
    big = app(church_numeral(3), church_numeral(12))  # normal form has 12^3 applications
    return [
        (f"search nour size<={max_size}", lambda: search_predecessor(nour, max_size, 3, 500)),
        ("church pred check to 50", lambda: check_predecessor(church, church_pred(), 50)),
        ("normalize church 12^3", lambda: normalize(big, 100_000)),
    ]


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-size", type=int, default=10)
    args = parser.parse_args()

    kernels = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    saved = _engine.kernel
    print(f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in kernels) + f"{'speedup':>10}")
    try:
        for label, fn in workloads(args.max_size):
            times = []
            for _, kernel in kernels:
                _engine.kernel = kernel
                times.append(best_of(fn, args.repeat))
            speedup = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else f"{'n/a':>10}"
            print(f"{label:<28}" + "".join(f"{t:>11.3f}s" for t in times) + speedup)
    finally:
        _engine.kernel = saved
    if _ckernel is None:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
