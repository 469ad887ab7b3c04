#!/usr/bin/env python3
"""Compare the compiled and pure-Python exact rank backends.

Two workload shapes, both integer matrices handled by fraction-free
elimination:

* commutant systems A (x) I - I (x) A^T for block-diagonal A built from
  quarter-turn rotations and sign blocks -- the shape the matrix oracle
  solves;
* pseudo-random sparse and dense integer matrices (fixed seed).
"""

import argparse
import random
import time

from liecheck._exact import BACKEND, rank


def rotation_block():
    return [[0, -1], [1, 0]]


def commutant_system(n):
    """Rows of A (x) I - I (x) A^T for a structured n x n matrix A."""
    a = [[0] * n for _ in range(n)]
    i = 0
    while i + 1 < n and i < 2 * (n // 3):
        block = rotation_block()
        for r in range(2):
            for c in range(2):
                a[i + r][i + c] = block[r][c]
        i += 2
    sign = -1
    while i < n:
        a[i][i] = sign
        sign = -sign
        i += 1
    rows = []
    for p in range(n):
        for q in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + q] += a[p][k]
                row[p * n + k] -= a[k][q]
            rows.append(row)
    return rows


def random_matrix(rng, nrows, ncols, density):
    return [
        [rng.randint(-3, 3) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ]


def bench(label, rows, repeat):
    results = {}
    for backend in ("pure", "fast"):
        best = None
        value = None
        for _ in range(repeat):
            start = time.perf_counter()
            value = rank(rows, backend=backend)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        results[backend] = (best, value)
    pure_t, pure_rank = results["pure"]
    fast_t, fast_rank = results["fast"]
    if pure_rank != fast_rank:
        raise SystemExit(
            "backend disagreement on %s: pure=%d fast=%d" % (label, pure_rank, fast_rank)
        )
    speedup = pure_t / fast_t if fast_t else float("inf")
    print(
        "%-28s rank %4d   pure %8.2f ms   fast %8.2f ms   speedup %5.2fx"
        % (label, pure_rank, 1e3 * pure_t, 1e3 * fast_t, speedup)
    )
    return pure_t, fast_t


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions, best kept")
    parser.add_argument("--max-block", type=int, default=12, help="largest commutant block size")
    args = parser.parse_args()

    print("active default backend: %s" % BACKEND)
    if BACKEND != "compiled":
        print("note: the compiled extension is not importable; 'fast' falls back to pure")
    rng = random.Random(20260814)

    totals = [0.0, 0.0]
    for n in range(6, args.max_block + 1, 2):
        p, f = bench("commutant %dx%d" % (n * n, n * n), commutant_system(n), args.repeat)
        totals[0] += p
        totals[1] += f
    for nrows, ncols, density in ((60, 96, 0.3), (90, 144, 0.3), (80, 120, 1.0)):
        rows = random_matrix(rng, nrows, ncols, density)
        p, f = bench(
            "random %dx%d d=%.1f" % (nrows, ncols, density), rows, args.repeat
        )
        totals[0] += p
        totals[1] += f
    print(
        "total: pure %.2f ms, fast %.2f ms, overall speedup %.2fx"
        % (1e3 * totals[0], 1e3 * totals[1], totals[0] / totals[1])
    )


if __name__ == "__main__":
    main()
