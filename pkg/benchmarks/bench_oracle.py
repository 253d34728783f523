"""Time the connectivity oracle on the compiled and pure-Python kernels.

Kernel time excludes building the rank table, which both backends share.

    python3 benchmarks/bench_oracle.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from ilsconn import CoeffMatrix, counterexample_matrix
from ilsconn.kernels import BACKENDS, get_backend
from ilsconn.oracle import rank_table

EQ1 = counterexample_matrix(4, 3)
CASES = [
    ("eq1 d=4", EQ1, 4),
    ("eq1 d=6", EQ1, 6),
    ("eq1 d=8", EQ1, 8),
    ("eo 3x4 d=3", CoeffMatrix.from_rows([[1, 0, 2, -1], [0, 1, -1, 0], [1, 1, 0, 0]]), 3),
    ("eo 2x5 d=2", CoeffMatrix.from_rows([[1, 2, 0, 1, -1], [0, 1, 3, -2, 0]]), 2),
]


def bench(A, d, backend, repeat):
    _, _, ranks, sizes = rank_table(A, d)
    kernel = get_backend(backend)
    best, found = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        found = kernel.first_disconnecting(ranks, sizes, A.n, d)
        best = min(best, time.perf_counter() - t)
    return best, found, len(ranks) // A.m * sum(1 for _ in range(1))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    names = sorted(BACKENDS)
    print(f"{'case':<14}{'#b':>8}" + "".join(f"{n:>12}" for n in names) + "   speedup  result")
    for label, A, d in CASES:
        _, _, _, sizes = rank_table(A, d)
        nb = 1
        for s in sizes:
            nb *= s
        times, found = {}, set()
        for name in names:
            times[name], f, _ = bench(A, d, name, args.repeat)
            found.add(f)
        assert len(found) == 1, f"backends disagree on {label}"
        row = f"{label:<14}{nb:>8}" + "".join(f"{times[n]:>11.4f}s" for n in names)
        speed = f"{times['python'] / times['cython']:.1f}x" if "cython" in times else "-"
        res = found.pop()
        row += f"{speed:>10}  {'connected' if res is None else 'disconnected'}"
        print(row)


if __name__ == "__main__":
    main()
