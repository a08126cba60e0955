"""Affine quandles Aff(A,f): a*b = (1-f)(a) + f(b) over an abelian group."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Quandle, left_divide, unchecked_quandle
from .groups import AbelianGroup, GroupAutomorphism


@dataclass(frozen=True, eq=False)
class AffineQuandle:
    group: AbelianGroup
    f: GroupAutomorphism
    quandle: Quandle


def one_minus_f_images(group: AbelianGroup, f: GroupAutomorphism) -> np.ndarray:
    """Image array of g = 1 - f, i.e. g(a) = a - f(a)."""
    rng = np.arange(group.order)
    return group.add[rng, group.neg[f.images]]


def make_affine(group: AbelianGroup, f: GroupAutomorphism) -> AffineQuandle:
    """Build Aff(A,f) under the group's element indexing."""
    if f.group is not group and not np.array_equal(f.group.add, group.add):
        raise ValueError("automorphism belongs to a different group")
    g = one_minus_f_images(group, f)
    table = group.add[np.ix_(g, f.images)]
    return AffineQuandle(group, f, unchecked_quandle(table))


def image_of_one_minus_f(group: AbelianGroup, f: GroupAutomorphism) -> tuple[int, ...]:
    """The subgroup {a - f(a) : a in A}, as a sorted element tuple."""
    return tuple(sorted(set(int(x) for x in one_minus_f_images(group, f))))


def subquandle_closure(q: Quandle, subset) -> tuple[int, ...]:
    """Smallest superset of the subset closed under * and left division."""
    elems = set(int(x) for x in subset)
    if not elems:
        raise ValueError("subset must be nonempty")
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in list(elems):
            for b in list(elems):
                for c in (q.table[a][b], left_divide(q, a, b)):
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
        frontier = nxt
    return tuple(sorted(elems))
