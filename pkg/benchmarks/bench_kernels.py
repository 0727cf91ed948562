"""Time the numba and numpy backends of the oracle kernels on complete graphs.

    python3 benchmarks/bench_kernels.py --max-n 7 --repeat 3
"""

import argparse
import time

import numpy as np

from forestsym import _kernels
from forestsym.graphs import complete, graph_of


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if _kernels.HAVE_NUMBA:
        # compile outside the timed region
        _kernels.coloring_histogram(2, [(1, 2)], True, "numba")
        _kernels.orientation_histogram(2, [(1, 2)], "numba")
    else:
        print("numba unavailable or disabled; timing numpy only")

    print(f"{'kernel':<12}{'n':>3}{'work':>12}" + "".join(f"{b:>12}" for b in backends))
    for n in range(3, args.max_n + 1):
        g = graph_of(complete(n))
        jobs = [
            ("coloring", n**n, lambda b: _kernels.coloring_histogram(n, g.edges, False, b)),
        ]
        if len(g.edges) <= 21:
            jobs.append(("orientation", 2 ** len(g.edges), lambda b: _kernels.orientation_histogram(n, g.edges, b)))
        for name, work, fn in jobs:
            times, results = [], []
            for b in backends:
                t, out = best_of(lambda: fn(b), args.repeat)
                times.append(t)
                results.append(out)
            assert all(np.array_equal(results[0], r) for r in results[1:]), "backends disagree"
            print(f"{name:<12}{n:>3}{work:>12}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times))


if __name__ == "__main__":
    main()
