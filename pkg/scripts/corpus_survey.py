#!/usr/bin/env python3
"""Survey mesh sums at desk scale: how often is the sum a homomorphic
image of an affine quandle, and how large do the covers get?

Usage:
    python scripts/corpus_survey.py [--max-indices 2] [--max-order 4]
"""

from __future__ import annotations

import argparse
import collections
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import corpus  # noqa: E402
from quandles.cover import build_cover, optimized_multitransversal  # noqa: E402
from quandles.cover import is_homim_of_affine  # noqa: E402
from quandles.mesh import coset_criterion, mesh_sum  # noqa: E402
from quandles.perms import displacement_group, is_semiregular  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-indices", type=int, default=2)
    ap.add_argument("--max-order", type=int, default=4)
    args = ap.parse_args()

    moduli = tuple(
        m for m in corpus.GROUP_MODULI
        if corpus.group_for(m).order <= args.max_order
    )
    counts = collections.Counter()
    ratio_hist = collections.Counter()  # |A| / |Q| for positive verdicts
    start = time.perf_counter()
    for raw in corpus.enumerate_meshes(args.max_indices, moduli):
        mesh = corpus.build_mesh(raw)
        q = mesh_sum(mesh)
        counts["meshes"] += 1
        positive = coset_criterion(mesh)
        assert positive == is_homim_of_affine(q)
        if not positive:
            counts["negative"] += 1
            continue
        counts["positive"] += 1
        if is_semiregular(displacement_group(q)):
            counts["embeds"] += 1
        r = build_cover(q, optimized_multitransversal(q))
        ratio_hist[r.group.order // q.n if r.group.order % q.n == 0 else -1] += 1
        if r.psi_bijective:
            counts["bijective_cover"] += 1
    elapsed = time.perf_counter() - start

    print(f"meshes={counts['meshes']} elapsed={elapsed:.1f}s")
    print(f"positive={counts['positive']} negative={counts['negative']}")
    print(f"embeds={counts['embeds']} bijective_cover={counts['bijective_cover']}")
    print("cover-size ratio |A|/|Q| histogram (-1 = non-integer):")
    for ratio in sorted(ratio_hist):
        print(f"  {ratio}: {ratio_hist[ratio]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
