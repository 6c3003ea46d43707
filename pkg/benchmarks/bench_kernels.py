"""Benchmark the three crossing-count backends against each other.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 50,200,800] [--repeats 5]

Random segment sets are drawn with a fixed seed, every backend is checked
against the exact python path before timing, and the best of ``repeats``
wall-clock runs is reported per backend and size.
"""

import argparse
import time

import numpy as np

from flipdist import kernels


def make_segments(rng, m):
    pts = rng.integers(-(10**6), 10**6, size=(m, 4)).astype(np.int64)
    keep = (pts[:, 0] != pts[:, 2]) | (pts[:, 1] != pts[:, 3])
    return pts[keep]


def bench(backend, a, b, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        kernels.crossing_counts(a, b, kernel=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="50,200,800")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = ["python", "numpy"]
    if kernels.HAS_NUMBA:
        backends.append("numba")
        # trigger compilation outside the timed region
        warm = make_segments(np.random.default_rng(0), 4)
        kernels.crossing_counts(warm, warm, kernel="numba")
    else:
        print("numba not installed; benchmarking python and numpy only")

    rng = np.random.default_rng(20260823)
    print(f"{'m x m':>10s}  " + "".join(f"{b:>12s}" for b in backends))
    for m in sizes:
        a = make_segments(rng, m)
        b = make_segments(rng, m)
        reference = kernels.crossing_counts(a, b, kernel="python")
        row = []
        for backend in backends:
            got = kernels.crossing_counts(a, b, kernel=backend)
            assert np.array_equal(got, reference), backend
            row.append(bench(backend, a, b, args.repeats))
        cells = "".join(f"{t * 1000:>10.2f}ms" for t in row)
        print(f"{m:>5d}x{m:<4d}  {cells}")


if __name__ == "__main__":
    main()
