#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times the four hot kernels (pivoted LU, Cholesky, the triangular solves, and
one Gram-Schmidt sweep) on a range of dense sizes and prints a side-by-side
table. Run from the repository root:

    python3 benchmarks/bench_kernels.py [--sizes 64,128,225,448] [--repeat 5]
"""

import argparse
import time

import numpy as np

from rakit import _kernels_py

try:
    from rakit import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(mod, n, repeat, rng):
    A = np.ascontiguousarray(np.eye(n) + 0.3 * rng.standard_normal((n, n)))
    B = rng.standard_normal((n, n))
    S = np.ascontiguousarray(B @ B.T + n * np.eye(n))
    x = rng.standard_normal(n)
    V, _ = np.linalg.qr(rng.standard_normal((n, min(n, 30))))
    V = np.ascontiguousarray(V)
    m = V.shape[1]

    lu = A.copy()
    piv = np.zeros(n, dtype=np.intp)
    t_lu = _time(lambda: mod.lu_factor_inplace(A.copy(), piv.copy()), repeat)
    mod.lu_factor_inplace(lu, piv)
    t_lus = _time(lambda: mod.lu_solve_inplace(lu, piv, x.copy()), repeat)

    ch = S.copy()
    t_ch = _time(lambda: mod.cholesky_inplace(S.copy()), repeat)
    mod.cholesky_inplace(ch)
    t_chs = _time(lambda: mod.cholesky_solve_inplace(ch, x.copy()), repeat)

    h = np.zeros(m)
    t_gs = _time(lambda: mod.mgs_orthogonalize(V, m, x.copy(), h.copy()), repeat)
    return t_lu, t_lus, t_ch, t_chs, t_gs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="64,128,225,448")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    names = ["lu_factor", "lu_solve", "cholesky", "chol_solve", "mgs(m=30)"]
    header = f"{'n':>5} {'kernel':>11} {'python':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        rng = np.random.default_rng(0)
        t_py = bench_backend(_kernels_py, n, args.repeat, rng)
        if compiled is not None:
            rng = np.random.default_rng(0)
            t_c = bench_backend(compiled, n, args.repeat, rng)
        else:
            t_c = [float("nan")] * len(t_py)
        for name, a, b in zip(names, t_py, t_c):
            speed = a / b if b == b and b > 0 else float("nan")
            print(f"{n:>5} {name:>11} {a * 1e3:>10.3f}ms {b * 1e3:>10.3f}ms {speed:>7.1f}x")
    if compiled is None:
        print("\ncompiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
