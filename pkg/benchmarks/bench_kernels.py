#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Runs each distance kernel on representative workloads with both backends
and prints a timing table. The jitted variants are compiled (and cached)
before timing, so numbers reflect steady state.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from wienerlab import build_bunch, build_lily
from wienerlab import kernels


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(name, jit_fn, np_fn, repeats):
    t_jit = best_of(jit_fn, repeats) if jit_fn is not None else None
    t_np = best_of(np_fn, repeats)
    if t_jit is None:
        print(f"{name:<38} numba: n/a         numpy: {t_np * 1e3:9.2f} ms")
        return
    speedup = t_np / t_jit if t_jit > 0 else float("inf")
    print(
        f"{name:<38} numba: {t_jit * 1e3:9.2f} ms  numpy: {t_np * 1e3:9.2f} ms"
        f"  speedup: {speedup:6.1f}x"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if kernels.HAVE_NUMBA:
        kernels.warmup()
        # make sure both jit variants are compiled even if the env flag
        # selected the numpy backend for the package itself
        indptr = np.array([0, 1, 2], np.int64)
        indices = np.array([1, 0], np.int64)
        kernels.apsp_jit(indptr, indices, 2)
        kernels.apsp_excluding_jit(indptr, indices, 2, 0)
        kernels.deletion_profile_jit(indptr, indices, 2)
        kernels.exhaustive_sweep_jit(4)
    else:
        print("numba unavailable; reporting numpy fallback only")

    print(f"selected backend: {kernels.BACKEND}")
    print()

    graphs = {
        "B(20), n=106": build_bunch(20),
        "B(50), n=256": build_bunch(50),
        "L(10,7), n=153": build_lily(10, 7),
    }
    for label, g in graphs.items():
        indptr, indices = g.csr()
        n = g.n
        bench_case(
            f"all-pairs distances, {label}",
            (lambda ip=indptr, ix=indices, nn=n: kernels.apsp_jit(ip, ix, nn))
            if kernels.HAVE_NUMBA
            else None,
            lambda ip=indptr, ix=indices, nn=n: kernels.apsp_numpy(ip, ix, nn),
            args.repeats,
        )
    for label, g in graphs.items():
        indptr, indices = g.csr()
        n = g.n
        bench_case(
            f"deletion profile, {label}",
            (lambda ip=indptr, ix=indices, nn=n: kernels.deletion_profile_jit(ip, ix, nn))
            if kernels.HAVE_NUMBA
            else None,
            lambda ip=indptr, ix=indices, nn=n: kernels.deletion_profile_numpy(ip, ix, nn),
            args.repeats,
        )
    bench_case(
        "exhaustive sweep, all n=5 graphs",
        (lambda: kernels.exhaustive_sweep_jit(5)) if kernels.HAVE_NUMBA else None,
        lambda: kernels.exhaustive_sweep_numpy(5),
        max(1, args.repeats // 2),
    )
    bench_case(
        "exhaustive sweep, all n=6 graphs",
        (lambda: kernels.exhaustive_sweep_jit(6)) if kernels.HAVE_NUMBA else None,
        lambda: kernels.exhaustive_sweep_numpy(6),
        1,
    )


if __name__ == "__main__":
    main()
