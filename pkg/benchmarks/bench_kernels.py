"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and the
speedup.  Outputs are also compared so a fast-but-wrong build shows up.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from mnconvex import _pykernels as py

try:
    from mnconvex import _ckernels as cy
except ImportError:  # extension not built
    cy = None


def workloads():
    rng = np.random.default_rng(20240601)
    n = np.arange(200_000, dtype=float)
    coeffs = np.cumprod(np.r_[1.0, (n[:-1] + 0.5) ** 2 / (n[:-1] + 1.0) ** 2])
    xs = rng.uniform(0.0, 0.9, 20_000)
    small = coeffs[:400].copy()
    trend = np.cumsum(rng.uniform(0.0, 1.0, 500_000))
    a = rng.uniform(0.1, 10.0, 100_000)
    b = rng.uniform(0.1, 10.0, 100_000)
    return {
        "series_sum (x=0.9999)": lambda k: k.series_sum(coeffs, 0.9999, 0.0, 1e-16, 0.999, 8),
        "horner_many (400 terms x 20k points)": lambda k: k.horner_many(small, xs),
        "monotone_scan (500k terms)": lambda k: k.monotone_scan(trend, 1e-15),
        "agm_many (100k pairs)": lambda k: k.agm_many(a, b),
    }


def _same(u, v) -> bool:
    u = u if isinstance(u, tuple) else (u,)
    v = v if isinstance(v, tuple) else (v,)
    return all(np.allclose(np.asarray(p, dtype=float), np.asarray(q, dtype=float), rtol=1e-12) for p, q in zip(u, v))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':40s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}  agree")
    for name, fn in workloads().items():
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:40s} {tp:11.4f} {tc:11.4f} {tp / tc:8.1f}  {_same(fn(py), fn(cy))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
