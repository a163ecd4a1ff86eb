#!/usr/bin/env python3
"""Benchmark the numba and numpy kernel backends on synthetic corpora.

Usage: python benchmarks/bench_kernels.py [--processes N] [--tokens N]
"""

import argparse
import random
import time

from rpaclone.model import MetaProcess
from rpaclone.similarity import _backend, find_matches_repeats


def synthetic_corpus(processes, tokens, alphabet=40, seed=1):
    rng = random.Random(seed)
    vocab = [f"Act{i}" for i in range(alphabet)]
    return [
        MetaProcess(f"P{i}", [vocab[rng.randrange(alphabet)] for _ in range(tokens)])
        for i in range(processes)
    ]


def time_backend(name, metas, repeat=3):
    kernels = _backend._load(name)
    saved = _backend._kernels
    _backend._kernels = kernels
    try:
        find_matches_repeats(metas[:2], 3)  # warm up (jit compile)
        best = min(
            _timed(lambda: find_matches_repeats(metas, 3)) for _ in range(repeat)
        )
    finally:
        _backend._kernels = saved
    return best


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--processes", type=int, default=200)
    parser.add_argument("--tokens", type=int, default=500)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    metas = synthetic_corpus(args.processes, args.tokens)
    total = args.processes * args.tokens
    print(f"corpus: {args.processes} processes x {args.tokens} tokens = {total} tokens")
    print(f"{'backend':<10} {'best of ' + str(args.repeat):>12}")
    results = {}
    for name in ("numpy", "numba"):
        try:
            results[name] = time_backend(name, metas, args.repeat)
        except ImportError:
            print(f"{name:<10} {'unavailable':>12}")
            continue
        print(f"{name:<10} {results[name]:>11.3f}s")
    if len(results) == 2:
        print(f"speedup (numba vs numpy): {results['numpy'] / results['numba']:.2f}x")


if __name__ == "__main__":
    main()
