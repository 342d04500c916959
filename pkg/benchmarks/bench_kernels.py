"""Compare the compiled and pure-Python kernels on representative inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one row per (kernel, backend) with the best wall time over N runs and
the speedup of the compiled backend. Results are checked for agreement.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from packed_semigroups import NumericalSemigroup, residue_class_table
from packed_semigroups.core import sieve_limit
from packed_semigroups.kernels import backends


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    big = NumericalSemigroup((97, 111, 142, 159, 171))
    deep = NumericalSemigroup((97, 111, 142, 159, 171 + 97 * 20))
    table = residue_class_table(big)
    flat, offsets = table._flat
    weights = np.array(deep.msg[1:], dtype=np.int64)
    yield "sieve", lambda k: k.sieve(list(deep.msg), 200_000)
    yield "apery_sieve", lambda k: k.apery_sieve(list(deep.msg), deep.m, sieve_limit(deep))
    yield "closure m=97", lambda k: k.closure_vectors(97, [14, 45, 62, 74])
    yield "closure m=110", lambda k: k.closure_vectors(110, [106, 107, 108, 109])
    yield "apery_from_vectors", lambda k: k.apery_from_vectors(flat, offsets, weights)


def normalize(x):
    if isinstance(x, tuple):
        vecs, res = x
        return sorted(zip(map(tuple, vecs), res))
    return [int(v) for v in x]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = backends()
    print(f"{'kernel':<22}{'backend':<10}{'seconds':>10}{'speedup':>10}")
    for name, fn in cases():
        times, results = {}, {}
        for label, mod in impls.items():
            times[label], results[label] = best_of(lambda: fn(mod), args.repeat)
        if len(results) > 1:
            first, *rest = (normalize(r) for r in results.values())
            assert all(r == first for r in rest), f"backends disagree on {name}"
        for label, t in times.items():
            speed = times["python"] / t if label != "python" else 1.0
            print(f"{name:<22}{label:<10}{t:>10.4f}{speed:>9.1f}x")


if __name__ == "__main__":
    main()
