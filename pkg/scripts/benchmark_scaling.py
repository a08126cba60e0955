#!/usr/bin/env python3
"""Wall-time scaling of the decision and construction algorithms on the
worst-case mesh family (k copies of Z2, n-k singleton fibers).

Usage:
    python scripts/benchmark_scaling.py [--max-n 64] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

from quandles.cover import (
    build_cover,
    is_homim_of_affine,
    optimized_multitransversal,
    simple_multitransversal,
)
from quandles.mesh import generate_max_mesh, mesh_sum


def best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=64)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"{'n':>4} {'k':>2} {'|Q|':>4} {'decide':>10} {'|T|':>6} "
          f"{'|A|':>7} {'build':>10}")
    n, k = 8, 2
    while n <= args.max_n:
        q = mesh_sum(generate_max_mesh(n, k))
        t_decide = best_time(lambda: is_homim_of_affine(q), args.repeats)
        t = simple_multitransversal(q)
        if n <= 32:
            t0 = time.perf_counter()
            r = build_cover(q, t)
            t_build = time.perf_counter() - t0
            build_col = f"{t_build * 1e3:9.1f}ms"
            a_order = r.group.order
        else:
            build_col, a_order = "skipped", 2 ** k * t.size
        print(f"{n:>4} {k:>2} {q.n:>4} {t_decide * 1e3:9.3f}ms "
              f"{t.size:>6} {a_order:>7} {build_col:>10}")
        # Optimized transversal for comparison at small sizes.
        if n <= 16:
            topt = optimized_multitransversal(q)
            print(f"{'':>11} optimized transversal: |T|={topt.size} "
                  f"kappa={topt.kappa}")
        n, k = n * 2, k + 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
