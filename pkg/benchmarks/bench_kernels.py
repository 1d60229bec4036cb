"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --k 100,200,300 --reps 3

Both versions get the same inputs and seeds; outputs are checked for equality
before timings are reported.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time

import numpy as np

from staircase_tableaux import _kernels
from staircase_tableaux._kernels import _fallback
from staircase_tableaux.counting import eta_shape
from staircase_tableaux.insertion import ws_insert
from staircase_tableaux.sampling import sample_skew_staircase
from staircase_tableaux.words import phi


def _median_time(fn, reps: int) -> float:
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def cases(k: int):
    """(name, args factory) pairs; factories return fresh arguments per call."""
    a, b = k // 5, k // 3
    eta = list(eta_shape(k, a, b))
    word = phi(sample_skew_staircase(k, a, b, np.random.default_rng(k)))
    pair = ws_insert(word)
    rows = pair.p.rows()
    steps = [None] * len(pair.q)
    for (r, c), v in pair.q.items():
        steps[v.value - 1] = (r - 1, c - 1, v.marked)
    n = 2 * k - 2
    return [
        ("hook_walk", lambda: (eta, np.random.default_rng(0))),
        ("ws_uninsert", lambda: ([list(r) for r in rows], steps)),
        ("word_inversions", lambda: (word, n)),
    ]


def run(ks, reps):
    core = _kernels.core
    if core is None:
        sys.exit("compiled core is not built; reinstall without STAIRCASE_TABLEAUX_NO_EXT")
    table = []
    for k in ks:
        for name, make in cases(k):
            fast, slow = getattr(core, name), getattr(_fallback, name)
            if fast(*make()) != slow(*make()):
                sys.exit(f"{name} outputs differ at k={k}")
            t_core = _median_time(lambda: fast(*make()), reps)
            t_py = _median_time(lambda: slow(*make()), reps)
            table.append((k, name, t_core, t_py, t_py / t_core))
    return table


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", default="100,200,300")
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--out", help="optional CSV output")
    args = parser.parse_args(argv)
    table = run([int(x) for x in args.k.split(",")], args.reps)
    print(f"{'k':>5} {'kernel':<16} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for k, name, tc, tp, sp in table:
        print(f"{k:>5} {name:<16} {tc:>10.4f} {tp:>10.4f} {sp:>7.1f}x")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "kernel", "cython_seconds", "python_seconds", "speedup"])
            w.writerows(table)


if __name__ == "__main__":
    main()
