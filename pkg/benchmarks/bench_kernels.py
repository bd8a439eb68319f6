"""Timing comparison of the compiled and pure-Python series kernels.

Both backends implement the identical algorithm (ascending compensated
summation with early stop); this script measures the per-evaluation cost of
each on a realistic workload: first-kind series of orders 0..3 evaluated on
a dense grid.

Run from the repository root after installing:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --points 5000 --repeat 7
"""

from __future__ import annotations

import argparse
import time
from array import array

from confbessel import bessel_j_series, kernel_backend
from confbessel import _pykernels

try:
    from confbessel import _ckernels
except ImportError:
    _ckernels = None


def make_workload(n_points: int):
    """(coeff-buffer, alpha, offset) per series, plus a shared x grid."""
    series = [bessel_j_series(p, 0.7, 60) for p in (0.0, 1.0, 2.0, 3.0)]
    packed = [(array("d", s.coeffs), s.alpha.value, s.offset) for s in series]
    lo, hi = 0.1, 8.0
    xs = [lo + (hi - lo) * i / (n_points - 1) for i in range(n_points)]
    return packed, xs


def run_backend(kernel, packed, xs, repeat: int) -> tuple[float, float]:
    """Best wall time per evaluation (seconds) and a value checksum."""
    best = float("inf")
    checksum = 0.0
    for _ in range(repeat):
        t0 = time.perf_counter()
        acc = 0.0
        for coeffs, alpha, offset in packed:
            for x in xs:
                value, _, _ = kernel(coeffs, alpha, offset, x, 1e-18)
                acc += value
        dt = time.perf_counter() - t0
        best = min(best, dt)
        checksum = acc
    return best / (len(packed) * len(xs)), checksum


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2000,
                    help="grid points per series (default %(default)s)")
    ap.add_argument("--repeat", type=int, default=5,
                    help="timing repetitions, best-of (default %(default)s)")
    args = ap.parse_args()

    packed, xs = make_workload(args.points)
    n_evals = len(packed) * len(xs)
    print(f"workload: {len(packed)} series x {len(xs)} points "
          f"= {n_evals} evaluations, 60 terms each")
    print(f"active backend at import: {kernel_backend()}")
    print()

    results = {}
    py_t, py_sum = run_backend(_pykernels.eval_series_kernel, packed, xs,
                               args.repeat)
    results["python"] = (py_t, py_sum)
    if _ckernels is not None:
        cy_t, cy_sum = run_backend(_ckernels.eval_series_kernel, packed, xs,
                                   args.repeat)
        results["cython"] = (cy_t, cy_sum)
        drift = abs(cy_sum - py_sum) / max(abs(py_sum), 1.0)
        if drift > 1e-12:
            print(f"WARNING: backend checksums differ by {drift:.3e}")
            return 1

    print(f"{'backend':<10} {'ns/eval':>12} {'evals/s':>14}")
    for name, (per_eval, _) in results.items():
        print(f"{name:<10} {per_eval * 1e9:>12.1f} {1.0 / per_eval:>14.0f}")
    if "cython" in results:
        speedup = results["python"][0] / results["cython"][0]
        print(f"\ncython speedup over pure python: {speedup:.1f}x")
    else:
        print("\ncompiled backend not available; built pure-python only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
