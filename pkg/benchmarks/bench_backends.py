"""Benchmark the compiled kernel extension against the pure-numpy fallback.

Times ``tmat``/``steering_max``/``chsh_max`` on single states and
``batch_maxima`` on a stack of random density matrices.

Usage::

    python benchmarks/bench_backends.py [--n 20000] [--repeats 5]
"""
import argparse
import time

import numpy as np

from steerscope import random_state
from steerscope._backend import _pykernels

try:
    from steerscope._backend import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(backend, name, mats, ts, repeats):
    rows = []
    rows.append((f"{name}.tmat x{len(mats)}", _time(lambda: [backend.tmat(m) for m in mats], repeats)))
    rows.append(
        (f"{name}.steering_max x{len(ts)}", _time(lambda: [backend.steering_max(t) for t in ts], repeats))
    )
    rows.append(
        (f"{name}.chsh_max x{len(ts)}", _time(lambda: [backend.chsh_max(t) for t in ts], repeats))
    )
    rows.append((f"{name}.batch_maxima n={len(mats)}", _time(lambda: backend.batch_maxima(mats), repeats)))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=20000, help="ensemble size")
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats (best taken)")
    args = parser.parse_args()

    mats = np.stack([random_state(i).mat for i in range(args.n)])
    ts = _pykernels.tmat_batch(mats)

    results = bench(_pykernels, "pure", mats, ts, args.repeats)
    if _kernels is not None:
        results += bench(_kernels, "cython", mats, ts, args.repeats)
        ps, pc = _pykernels.batch_maxima(mats)
        cs, cc = _kernels.batch_maxima(mats)
        parity = max(np.abs(np.asarray(cs) - ps).max(), np.abs(np.asarray(cc) - pc).max())
    else:
        parity = None

    width = max(len(label) for label, _ in results)
    print(f"{'kernel':<{width}}  seconds")
    for label, seconds in results:
        print(f"{label:<{width}}  {seconds:.4f}")
    if parity is None:
        print("\ncompiled extension not available; only the pure backend was timed")
    else:
        pure = dict(results)[f"pure.batch_maxima n={args.n}"]
        comp = dict(results)[f"cython.batch_maxima n={args.n}"]
        print(f"\nbatch speedup (pure / cython): {pure / comp:.2f}x")
        print(f"max |pure - cython| over the batch: {parity:.3e}")


if __name__ == "__main__":
    main()
