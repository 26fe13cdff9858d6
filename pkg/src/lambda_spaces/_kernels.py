"""Hot numeric kernels.

Each kernel exists twice: a numba ``@njit`` build and a pure-numpy build.
The active set is chosen at import time; set ``LAMBDA_SPACES_DISABLE_NUMBA=1``
to force the numpy path (useful for debugging and as a safety valve on
platforms where numba is unavailable).  Unless disabled, both variants stay
importable so ``benchmarks/bench_kernels.py`` can compare them directly.
"""

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("LAMBDA_SPACES_DISABLE_NUMBA", "") == "1"

_CHUNK = 1 << 22


def power_prefix_sum_py(a, b, q):
    """sum_{n=a}^{b-1} (n+1)^(-q) via chunked pairwise summation."""
    total = 0.0
    for start in range(a, b, _CHUNK):
        end = min(b, start + _CHUNK)
        n = np.arange(start + 1, end + 1, dtype=np.float64)
        total += float(np.sum(n ** (-q)))
    return total


def affine_prefix_sum_py(a, b, c0, c1, p):
    """sum_{n=a}^{b-1} (c0 + c1*n)^(-p) via chunked pairwise summation."""
    total = 0.0
    for start in range(a, b, _CHUNK):
        end = min(b, start + _CHUNK)
        n = np.arange(start, end, dtype=np.float64)
        total += float(np.sum((c0 + c1 * n) ** (-p)))
    return total


def _norm2d_py(u, v, l0, l1, p):
    w = (l0 * np.abs(u) + (l1 - l0) * np.abs(v)) / l1
    return (np.abs(u) ** p + w ** p) ** (1.0 / p)


def pair_sweep_py(us, vs, l0, l1, p, objective):
    """Exhaustive sweep over nonnegative unit-sphere pairs.

    ``us[i], vs[i]`` parametrize points on the positive quarter of the unit
    sphere.  For every pair (i, j) and for both relative sign classes of the
    second point ((+,+) and (+,-)) the objective is evaluated:
    ``objective == 0`` -> parallelogram ratio (von Neumann-Jordan),
    ``objective == 1`` -> min(||x+y||, ||x-y||) (James).

    Returns (best, i, j, cls).
    """
    g = us.shape[0]
    best = -np.inf
    bi = bj = bcls = 0
    for i in range(g):
        a, b = us[i], vs[i]
        n_pp = _norm2d_py(a + us, b + vs, l0, l1, p)
        n_mm = _norm2d_py(a - us, b - vs, l0, l1, p)
        n_pm = _norm2d_py(a + us, b - vs, l0, l1, p)
        n_mp = _norm2d_py(a - us, b + vs, l0, l1, p)
        if objective == 0:
            o1 = (n_pp ** 2 + n_mm ** 2) / 4.0
            o2 = (n_pm ** 2 + n_mp ** 2) / 4.0
        else:
            o1 = np.minimum(n_pp, n_mm)
            o2 = np.minimum(n_pm, n_mp)
        j1 = int(np.argmax(o1))
        j2 = int(np.argmax(o2))
        if o1[j1] > best:
            best, bi, bj, bcls = float(o1[j1]), i, j1, 0
        if o2[j2] > best:
            best, bi, bj, bcls = float(o2[j2]), i, j2, 1
    return best, bi, bj, bcls


if not NUMBA_DISABLED:
    from numba import njit

    @njit(cache=True, nogil=True)
    def power_prefix_sum_nb(a, b, q):
        # Kahan summation, ascending terms (n descending) for accuracy.
        s = 0.0
        c = 0.0
        for n in range(b - 1, a - 1, -1):
            t = (n + 1.0) ** (-q)
            y = t - c
            tot = s + y
            c = (tot - s) - y
            s = tot
        return s

    @njit(cache=True, nogil=True)
    def affine_prefix_sum_nb(a, b, c0, c1, p):
        s = 0.0
        c = 0.0
        for n in range(b - 1, a - 1, -1):
            t = (c0 + c1 * n) ** (-p)
            y = t - c
            tot = s + y
            c = (tot - s) - y
            s = tot
        return s

    @njit(cache=True, nogil=True)
    def pair_sweep_nb(us, vs, l0, l1, p, objective):
        g = us.shape[0]
        best = -1.0e308
        bi = 0
        bj = 0
        bcls = 0
        for i in range(g):
            a = us[i]
            b = vs[i]
            for j in range(g):
                c = us[j]
                d = vs[j]
                w = (l0 * abs(a + c) + (l1 - l0) * abs(b + d)) / l1
                n_pp = (abs(a + c) ** p + w ** p) ** (1.0 / p)
                w = (l0 * abs(a - c) + (l1 - l0) * abs(b - d)) / l1
                n_mm = (abs(a - c) ** p + w ** p) ** (1.0 / p)
                w = (l0 * abs(a + c) + (l1 - l0) * abs(b - d)) / l1
                n_pm = (abs(a + c) ** p + w ** p) ** (1.0 / p)
                w = (l0 * abs(a - c) + (l1 - l0) * abs(b + d)) / l1
                n_mp = (abs(a - c) ** p + w ** p) ** (1.0 / p)
                if objective == 0:
                    o1 = (n_pp * n_pp + n_mm * n_mm) / 4.0
                    o2 = (n_pm * n_pm + n_mp * n_mp) / 4.0
                else:
                    o1 = min(n_pp, n_mm)
                    o2 = min(n_pm, n_mp)
                if o1 > best:
                    best = o1
                    bi, bj, bcls = i, j, 0
                if o2 > best:
                    best = o2
                    bi, bj, bcls = i, j, 1
        return best, bi, bj, bcls

    power_prefix_sum = power_prefix_sum_nb
    affine_prefix_sum = affine_prefix_sum_nb
    pair_sweep = pair_sweep_nb
else:
    power_prefix_sum = power_prefix_sum_py
    affine_prefix_sum = affine_prefix_sum_py
    pair_sweep = pair_sweep_py
