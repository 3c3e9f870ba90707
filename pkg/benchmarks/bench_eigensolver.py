"""Benchmark the two eigensolver kernel paths against each other.

Times the full-spectrum lockstep bisection on truncations of the constant
angle family for a range of orders, once through the numba-jitted kernel
and once through the pure-numpy kernel, and checks that the results agree
bitwise.  Run from the repository root:

    python3 benchmarks/bench_eigensolver.py

The jitted path is skipped (with a note) when numba is unavailable or
disabled via ONESHIFT_NO_NUMBA=1.
"""

import math
import time

import numpy as np

from oneshift import _kernels
from oneshift.forms import PairFamily, build_sum_truncation
from oneshift.tridiag import default_tol

ORDERS = [200, 500, 1000, 2000]
REPEATS = 3


def prepare(n):
    m = build_sum_truncation(PairFamily.constant(2 * math.pi / 3), n)
    lo, hi = m.gershgorin()
    scale = max(1.0, max(abs(lo), abs(hi)))
    return m.diag, m.offdiag**2, lo, hi, default_tol(m), scale


def time_path(fn, args):
    best = math.inf
    result = None
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    have_jit = _kernels.USE_NUMBA
    if not have_jit:
        print("numba path unavailable (ONESHIFT_NO_NUMBA set or numba missing)")
    else:
        # warm the compilation cache outside the timed region
        d, o2, lo, hi, tol, scale = prepare(8)
        _kernels._bisect_eigenvalues_jit(d, o2, lo, hi, tol, scale)

    print(f"{'n':>6} {'numpy [s]':>12} {'numba [s]':>12} {'speedup':>9}  bitwise")
    for n in ORDERS:
        d, o2, lo, hi, tol, scale = prepare(n)
        t_np, r_np = time_path(_kernels.bisect_eigenvalues_np, (d, o2, lo, hi, tol, scale))
        if have_jit:
            t_jit, r_jit = time_path(
                _kernels._bisect_eigenvalues_jit, (d, o2, lo, hi, tol, scale)
            )
            same = np.array_equal(r_np, r_jit)
            print(f"{n:>6} {t_np:>12.4f} {t_jit:>12.4f} {t_np / t_jit:>8.1f}x  {same}")
        else:
            print(f"{n:>6} {t_np:>12.4f} {'-':>12} {'-':>9}  -")


if __name__ == "__main__":
    main()
