#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the four hot kernels on workloads shaped like the verification suite:
dense truncated products, sparse-divisor division (the series-building
workhorse), and the single-binomial passes used by the naive Euler products.

Usage:
    python benchmarks/bench_backends.py [--n 20000] [--repeat 5]
"""

import argparse
import time

import numpy as np

from regulus import _kernels_numpy as knp

try:
    from regulus import _kernels_numba as knb
except ImportError:
    knb = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def pentagonal_block(n):
    data = np.zeros(n, np.int64)
    data[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 >= n and g2 >= n:
            break
        for g in (g1, g2):
            if g < n:
                data[g] = 1 if j % 2 == 0 else -1
        j += 1
    return data % 3


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=20000, help="series length")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    n = args.n
    rng = np.random.default_rng(42)
    m = 3
    dense_a = rng.integers(0, m, n).astype(np.int64)
    dense_b = rng.integers(0, m, n).astype(np.int64)
    divisor = pentagonal_block(n)
    d_idx = np.nonzero(divisor)[0]
    d_idx = d_idx[d_idx > 0]
    d_val = divisor[d_idx]

    cases = [
        ("mul_mod dense x dense",
         lambda k: k.mul_mod(dense_a, dense_b, m, n)),
        ("divide_mod sparse divisor",
         lambda k: k.divide_mod(dense_a, d_idx, d_val, 1, m, n)),
        ("mul_one_minus_mod x200",
         lambda k: [k.mul_one_minus_mod(dense_a, s, m) for s in range(1, 201)]),
        ("div_one_minus_mod x200",
         lambda k: [k.div_one_minus_mod(dense_a, s, m) for s in range(1, 201)]),
    ]

    backends = [("numpy", knp)]
    if knb is not None:
        for _, fn in cases:
            fn(knb)  # warm the JIT before timing
        backends.append(("numba", knb))
    else:
        print("numba not importable; timing the numpy fallback only")

    print(f"n = {n}, modulus = {m}, best of {args.repeat}")
    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name, _ in backends)
          + ("     speedup" if knb is not None else ""))
    for label, fn in cases:
        times = [timeit(lambda k=kern: fn(k), args.repeat)
                 for _, kern in backends]
        row = f"{label:32s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)

    # sanity: both backends produce identical blocks
    if knb is not None:
        assert np.array_equal(knp.mul_mod(dense_a, dense_b, m, n),
                              knb.mul_mod(dense_a, dense_b, m, n))
        assert np.array_equal(knp.divide_mod(dense_a, d_idx, d_val, 1, m, n),
                              knb.divide_mod(dense_a, d_idx, d_val, 1, m, n))
        print("parity check: identical output on both backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
