"""Compare the compiled kernels against the pure-numpy fallbacks.

Both variants are always importable from lambda_spaces._kernels; the env
var LAMBDA_SPACES_DISABLE_NUMBA only changes which one the library binds.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from lambda_spaces import _kernels


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm-up (includes jit compilation for the compiled path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def fmt(seconds):
    return f"{seconds * 1e3:9.3f} ms"


def row(name, py_t, nb_t):
    speed = py_t / nb_t if nb_t > 0 else float("inf")
    print(f"{name:34s} numpy {fmt(py_t)}   compiled {fmt(nb_t)}"
          f"   speedup {speed:6.2f}x")


def main():
    if _kernels.NUMBA_DISABLED:
        print("compiled kernels are disabled (LAMBDA_SPACES_DISABLE_NUMBA); "
              "unset the variable to benchmark both paths")
        return
    print("compiled path available: True")

    n = 20_000_000
    row("power prefix sum (2e7 terms)",
        timeit(_kernels.power_prefix_sum_py, 0, n, 2.0),
        timeit(_kernels.power_prefix_sum_nb, 0, n, 2.0))

    row("affine prefix sum (2e7 terms)",
        timeit(_kernels.affine_prefix_sum_py, 0, n, 1.0, 1.0, 2.0),
        timeit(_kernels.affine_prefix_sum_nb, 0, n, 1.0, 1.0, 2.0))

    g = 512
    us = np.linspace(0.0, 0.894, g)
    vs = np.maximum((2.0 * np.sqrt(np.maximum(1.0 - us ** 2, 0.0)) - us), 0.0)
    for objective, label in ((0, "parallelogram"), (1, "min-of-norms")):
        row(f"pair sweep {g}x{g} ({label})",
            timeit(_kernels.pair_sweep_py, us, vs, 1.0, 2.0, 2.0, objective),
            timeit(_kernels.pair_sweep_nb, us, vs, 1.0, 2.0, 2.0, objective))

    # cross-validation: both paths must agree to near machine precision
    a = _kernels.power_prefix_sum_py(0, 10 ** 6, 2.0)
    b = _kernels.power_prefix_sum_nb(0, 10 ** 6, 2.0)
    print(f"\nprefix-sum agreement: |py - compiled| = {abs(a - b):.3e}")


if __name__ == "__main__":
    main()
