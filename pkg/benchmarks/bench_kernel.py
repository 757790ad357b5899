"""Compare the compiled dense kernels against the pure-Python twins.

Runs each kernel on identical inputs under both backends and reports the
best wall time over --repeat runs.  The factor search row exercises the
whole pipeline (divisor enumeration, interpolation, verification) through
the public factor_pairs entry point.

Usage: python3 benchmarks/bench_kernel.py [--size N] [--repeat R]
"""

import argparse
import random
import time

from bigraphpoly import Poly1, factor_pairs, mul
from bigraphpoly import kernel


def best_time(fn, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def workloads(size, seed):
    rng = random.Random(seed)
    a = [rng.randrange(100) for _ in range(size)]
    b = [rng.randrange(100) for _ in range(size - 1)] + [rng.randrange(1, 100)]
    prod = kernel.mul_dense(a, b)
    # Degree 16 at t <= 6 stays inside 64 bits, so the compiled path engages.
    short = prod[:17]
    evals = size * 10

    half = max(size // 2, 2)
    qa = [rng.randrange(50) for _ in range(half - 1)] + [rng.randrange(1, 50)]
    qb = [rng.randrange(50) for _ in range(half - 1)] + [rng.randrange(1, 50)]
    qprod = kernel.mul_dense(qa, qb)

    # Products of small random factors keep the divisor searches honest:
    # every polynomial here really splits, so the search cannot bail early.
    factorables = []
    for _ in range(10):
        f = Poly1({i: rng.randint(1, 3) for i in range(4)})
        g = Poly1({i: rng.randint(1, 3) for i in range(4)})
        factorables.append(mul(f, g))

    return [
        (f"mul_dense (n={size})",
         lambda: kernel.mul_dense(a, b)),
        (f"eval_dense (deg 16, {evals} points)",
         lambda: [kernel.eval_dense(short, t % 5 + 2) for t in range(evals)]),
        (f"div_exact_dense (n={2 * half})",
         lambda: kernel.div_exact_dense(qprod, qb)),
        ("factor_pairs (10 degree-6 products)",
         lambda: [factor_pairs(p) for p in factorables]),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=400,
                        help="dense length for the kernel rows (default 400)")
    parser.add_argument("--repeat", type=int, default=5,
                        help="runs per measurement, best one counts (default 5)")
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args()

    print(f"extension backend: {kernel.BACKEND}")
    if kernel.BACKEND != "compiled":
        print("compiled kernel unavailable; timing pure Python only")

    rows = []
    for label, fn in workloads(args.size, args.seed):
        with kernel.backend_override("python"):
            t_py = best_time(fn, args.repeat)
        if kernel.BACKEND == "compiled":
            with kernel.backend_override("compiled"):
                t_cy = best_time(fn, args.repeat)
            rows.append((label, t_py, t_cy, t_py / t_cy))
        else:
            rows.append((label, t_py, None, None))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, t_py, t_cy, gain in rows:
        py = f"{t_py * 1e3:8.2f}ms"
        if t_cy is None:
            print(f"{label:{width}}  {py:>10}  {'-':>10}  {'-':>8}")
        else:
            cy = f"{t_cy * 1e3:8.2f}ms"
            print(f"{label:{width}}  {py:>10}  {cy:>10}  {gain:7.1f}x")


if __name__ == "__main__":
    main()
