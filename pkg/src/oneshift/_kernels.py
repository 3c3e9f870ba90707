"""Hot numeric kernels: Sturm counts and full-spectrum bisection.

Both a numba-jitted path and a pure-numpy path are provided.  The jitted
path is the default; set the environment variable ``ONESHIFT_NO_NUMBA=1``
to force the numpy fallback (or when numba is not installed).  The two
paths run the same lockstep bisection, so their output is bit-identical.
"""

import os

import numpy as np

_EPS = float(np.finfo(np.float64).eps)

USE_NUMBA = os.environ.get("ONESHIFT_NO_NUMBA", "0").lower() not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def sturm_count_np(diag, off2, x, scale):
    """Number of eigenvalues strictly below each shift in ``x`` (vectorized).

    ``off2`` holds the squared off-diagonal entries.  Exact zero pivots are
    replaced by +eps*scale so the count stays well defined on degenerate
    (e.g. diagonal) matrices.
    """
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    tiny = _EPS * scale
    p = diag[0] - x
    p = np.where(p == 0.0, tiny, p)
    count = (p < 0.0).astype(np.int64)
    for i in range(1, diag.shape[0]):
        p = diag[i] - x - off2[i - 1] / p
        p = np.where(p == 0.0, tiny, p)
        count += p < 0.0
    return count


def bisect_eigenvalues_np(diag, off2, lo, hi, tol, scale):
    """All eigenvalues by count-based bisection, vectorized over indices."""
    n = diag.shape[0]
    lo_arr = np.full(n, lo, dtype=np.float64)
    hi_arr = np.full(n, hi, dtype=np.float64)
    want = np.arange(1, n + 1)
    while np.max(hi_arr - lo_arr) > tol:
        mid = 0.5 * (lo_arr + hi_arr)
        above = sturm_count_np(diag, off2, mid, scale) >= want
        hi_arr = np.where(above, mid, hi_arr)
        lo_arr = np.where(above, lo_arr, mid)
    return 0.5 * (lo_arr + hi_arr)


if USE_NUMBA:

    @njit(cache=True)
    def _sturm_count_jit(diag, off2, x, scale):
        tiny = 2.220446049250313e-16 * scale
        p = diag[0] - x
        if p == 0.0:
            p = tiny
        count = 1 if p < 0.0 else 0
        for i in range(1, diag.shape[0]):
            p = diag[i] - x - off2[i - 1] / p
            if p == 0.0:
                p = tiny
            if p < 0.0:
                count += 1
        return count

    @njit(cache=True)
    def _bisect_eigenvalues_jit(diag, off2, lo0, hi0, tol, scale):
        # all indices bisect in lockstep: one matrix pass serves n shifts,
        # so the division chain is independent across j and vectorizes
        n = diag.shape[0]
        tiny = 2.220446049250313e-16 * scale
        lo = np.full(n, lo0)
        hi = np.full(n, hi0)
        mid = np.empty(n)
        p = np.empty(n)
        cnt = np.empty(n, np.int64)
        width = hi0 - lo0
        while width > tol:
            for j in range(n):
                mid[j] = 0.5 * (lo[j] + hi[j])
                pj = diag[0] - mid[j]
                if pj == 0.0:
                    pj = tiny
                p[j] = pj
                cnt[j] = 1 if pj < 0.0 else 0
            for i in range(1, n):
                di = diag[i]
                ei = off2[i - 1]
                for j in range(n):
                    pj = di - mid[j] - ei / p[j]
                    if pj == 0.0:
                        pj = tiny
                    p[j] = pj
                    if pj < 0.0:
                        cnt[j] += 1
            width = 0.0
            for j in range(n):
                if cnt[j] >= j + 1:
                    hi[j] = mid[j]
                else:
                    lo[j] = mid[j]
                w = hi[j] - lo[j]
                if w > width:
                    width = w
        return 0.5 * (lo + hi)


def sturm_count(diag, off2, x, scale):
    """Scalar Sturm count dispatched to the active kernel path."""
    if USE_NUMBA:
        return int(_sturm_count_jit(diag, off2, float(x), scale))
    return int(sturm_count_np(diag, off2, float(x), scale)[0])


def bisect_eigenvalues(diag, off2, lo, hi, tol, scale):
    """Full spectrum dispatched to the active kernel path (sorted output)."""
    if USE_NUMBA:
        return _bisect_eigenvalues_jit(diag, off2, float(lo), float(hi), tol, scale)
    return bisect_eigenvalues_np(diag, off2, float(lo), float(hi), tol, scale)
