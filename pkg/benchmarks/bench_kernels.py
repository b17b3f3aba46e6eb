#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure numpy fallback.

Usage: python benchmarks/bench_kernels.py [--sizes 32,64,128] [--lps 2000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spectrachrome._kernels import _pure

try:
    from spectrachrome._kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_jacobi(sizes):
    rng = np.random.default_rng(1)
    print(f"{'jacobi_eigh':<16} {'python':>12} {'cython':>12} {'speedup':>9}")
    for n in sizes:
        m = rng.standard_normal((n, n))
        m = (m + m.T) / 2
        t_py = timeit(lambda: _pure.jacobi_eigh(m))
        if _fast is not None:
            t_cy = timeit(lambda: _fast.jacobi_eigh(m))
            print(f"  n={n:<12} {t_py * 1e3:>10.1f}ms {t_cy * 1e3:>10.1f}ms {t_py / t_cy:>8.1f}x")
        else:
            print(f"  n={n:<12} {t_py * 1e3:>10.1f}ms {'-':>12} {'-':>9}")


def bench_simplex(count):
    rng = np.random.default_rng(2)
    problems = []
    for _ in range(count):
        nvars = int(rng.integers(2, 9))
        nrows = int(rng.integers(2, 16))
        problems.append(
            (
                rng.integers(-4, 5, size=(nrows, nvars)).astype(float),
                rng.integers(-1, 2, size=nrows).astype(np.int64),
                rng.integers(0, 9, size=nrows).astype(float),
                rng.integers(-4, 5, size=nvars).astype(float),
            )
        )

    def run(impl):
        for A, senses, b, c in problems:
            impl.simplex(A, senses, b, c)

    print(f"\n{'simplex':<16} {'python':>12} {'cython':>12} {'speedup':>9}")
    t_py = timeit(lambda: run(_pure), repeats=2)
    if _fast is not None:
        t_cy = timeit(lambda: run(_fast), repeats=2)
        print(f"  {count} small LPs {t_py * 1e3:>10.0f}ms {t_cy * 1e3:>10.0f}ms {t_py / t_cy:>8.1f}x")
    else:
        print(f"  {count} small LPs {t_py * 1e3:>10.0f}ms {'-':>12} {'-':>9}")


def bench_pipeline():
    """End to end: the certification pipeline on a mid-size instance."""
    import spectrachrome as sc

    g = sc.generate("generalized_petersen", (10, 2))
    t = timeit(lambda: sc.certify(g, 2), repeats=2)
    print(f"\ncertify GP(10,2) k=2 with {sc.KERNEL_BACKEND} kernels: {t * 1e3:.0f}ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="32,64,128,256")
    ap.add_argument("--lps", type=int, default=2000)
    args = ap.parse_args()
    if _fast is None:
        print("compiled extension not built; showing python fallback only\n")
    bench_jacobi([int(s) for s in args.sizes.split(",")])
    bench_simplex(args.lps)
    bench_pipeline()


if __name__ == "__main__":
    main()
