"""Benchmark the gate-chain kernel: numba jit vs pure-numpy tree reduction.

Usage: python benchmarks/bench_kernels.py [--lengths 10000,100000,1000000]
"""

import argparse
import random
import time

import numpy as np

from jones3 import _kernels
from jones3.braid import BraidWord
from jones3.rep2 import _letter_codes, make_params

_ALPHABET = [(1, 1), (1, -1), (2, 1), (2, -1)]


def best_time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lengths", default="10000,100000,1000000")
    args = parser.parse_args()
    lengths = [int(x) for x in args.lengths.split(",")]

    params = make_params(1.0)
    table = np.stack([params.G1, params.G2, params.G1inv, params.G2inv])
    rng = random.Random(0)

    backends = [("numpy", _kernels.chain_product_numpy)]
    if _kernels.HAVE_NUMBA:
        backends.append(("numba", _kernels.chain_product_numba))
    else:
        print("numba not available; benchmarking the numpy path only")

    header = f"{'L':>10}" + "".join(f"{name + ' (ms)':>14}" for name, _ in backends)
    print(header)
    for length in lengths:
        word = BraidWord(rng.choice(_ALPHABET) for _ in range(length))
        mats = np.ascontiguousarray(table[_letter_codes(word)])
        row = f"{length:>10}"
        results = []
        for _, kernel in backends:
            kernel(mats[:16])  # warm-up / jit compile
            row += f"{best_time(lambda: kernel(mats)) * 1e3:>14.3f}"
            results.append(kernel(mats))
        if len(results) == 2 and not np.allclose(results[0], results[1], atol=1e-8):
            raise AssertionError(f"backends disagree at L={length}")
        print(row)


if __name__ == "__main__":
    main()
