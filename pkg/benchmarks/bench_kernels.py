"""Benchmark the two kernel backends against each other.

Times the adaptive mode-solve path (``heat_mode``) and the inner scaled
Bessel kernel with the numba backend and with the numpy/scipy fallback on
the same workload, then reports wall times, speedup, and the largest
relative disagreement between the two result sets.

Run from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --repeats 7 --points-per-decade 64
"""

import argparse
import time
from fractions import Fraction

import numpy as np
from scipy import special as sp

from coneasym import (
    ModeProblem,
    RadialProfile,
    circle_spectrum,
    default_grid,
    heat_mode,
)
from coneasym._backend import HAS_NUMBA
from coneasym._kernels import ive_native


def best_of(repeats, fn):
    """Smallest wall time over `repeats` calls (warm cache assumed)."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_heat_mode(args):
    cs = circle_spectrum(radius=Fraction(1, 2), j_max=args.modes - 1)
    profile = RadialProfile("bump", 1.0, 2.0)
    grid = default_grid((-4, -1), args.points_per_decade)
    problems = [
        ModeProblem(n=cs.n, lam=float(lam), t=1.0, profile=profile)
        for lam in cs.eigenvalues[: args.modes]
    ]

    def solve(backend):
        return [
            heat_mode(p, grid, rel_tol=args.rel_tol, backend=backend)
            for p in problems
        ]

    backends = ["numba", "numpy"] if HAS_NUMBA else ["numpy"]
    results = {}
    times = {}
    for backend in backends:
        solve(backend)  # warmup: JIT compile / scipy import paths
        times[backend] = best_of(args.repeats, lambda b=backend: solve(b))
        results[backend] = solve(backend)

    points = args.modes * grid.size
    print(f"heat_mode: {args.modes} modes x {grid.size} points, "
          f"rel_tol={args.rel_tol:g}, best of {args.repeats}")
    for backend in backends:
        per_point = times[backend] / points * 1e6
        print(f"  {backend:<6} {times[backend] * 1e3:9.2f} ms   "
              f"{per_point:8.2f} us/point")
    if len(backends) == 2:
        print(f"  speedup (numpy/numba): {times['numpy'] / times['numba']:.2f}x")
        worst = 0.0
        for a, b in zip(results["numba"], results["numpy"]):
            scale = np.maximum(np.abs(a.values), np.abs(b.values))
            scale[scale == 0.0] = 1.0
            worst = max(worst, float(np.max(np.abs(a.values - b.values) / scale)))
        print(f"  max relative difference: {worst:.3e}")


def bench_ive(args):
    rng = np.random.default_rng(7)
    nus = rng.uniform(0.0, 20.0, args.bessel_calls)
    zs = rng.uniform(1e-3, 500.0, args.bessel_calls)

    def native():
        return [ive_native(nu, z) for nu, z in zip(nus, zs)]

    def scipy_vec():
        return sp.ive(nus, zs)

    native()  # warmup
    scipy_vec()
    t_native = best_of(args.repeats, native)
    t_scipy = best_of(args.repeats, scipy_vec)
    ours = np.array(native())
    ref = np.asarray(scipy_vec())
    scale = np.maximum(np.abs(ref), 1e-300)
    worst = float(np.max(np.abs(ours - ref) / scale))

    label = "native (jit)" if HAS_NUMBA else "native (py)"
    print(f"scaled Bessel I: {args.bessel_calls} scalar calls, best of {args.repeats}")
    print(f"  {label:<12} {t_native * 1e3:9.2f} ms")
    print(f"  scipy.ive    {t_scipy * 1e3:9.2f} ms  (one vectorized call)")
    print(f"  max relative difference vs scipy: {worst:.3e}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--modes", type=int, default=4)
    parser.add_argument("--points-per-decade", type=int, default=48)
    parser.add_argument("--rel-tol", type=float, default=1e-9)
    parser.add_argument("--bessel-calls", type=int, default=20000)
    args = parser.parse_args(argv)
    if not HAS_NUMBA:
        print("numba not importable: timing the numpy backend only")
    bench_heat_mode(args)
    print()
    bench_ive(args)


if __name__ == "__main__":
    main()
