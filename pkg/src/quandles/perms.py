"""Permutations, group closure, and the quandle-theoretic group invariants.

Permutations are image tuples: p[i] is the image of i, maps act on the left,
so compose(p, q) is "p after q".  Groups are materialized as full element
sets; everything here is desk scale by design (no stabilizer chains).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import Partition, Quandle
from .errors import DegreeMismatch

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group given by its full element set.

    Elements are listed in discovery order of the BFS closure, identity
    first; the ordering is part of the contract (cover construction
    indexes into it).
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    def __contains__(self, p: Perm) -> bool:
        return p in self.index


def closure(generators, degree: int | None = None) -> PermGroup:
    """BFS multiplication closure from the identity, generators in order."""
    gens = tuple(tuple(g) for g in generators)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise DegreeMismatch(degree, len(g))
    ident = identity_perm(degree)
    elements = [ident]
    seen = {ident}
    queue = [ident]
    while queue:
        p = queue.pop(0)
        for g in gens:
            r = compose(g, p)
            if r not in seen:
                seen.add(r)
                elements.append(r)
                queue.append(r)
    return PermGroup(degree, gens, tuple(elements))


def multiplication_group(q: Quandle) -> PermGroup:
    """LMlt(Q), generated by all left translations."""
    return closure([q.row(a) for a in range(q.n)], q.n)


def displacement_generators(q: Quandle, e: int = 0) -> list[Perm]:
    le_inv = inverse(q.row(e))
    return [compose(q.row(a), le_inv) for a in range(q.n)]


def displacement_group(q: Quandle, e: int = 0) -> PermGroup:
    """Dis(Q) = <L_a L_e^{-1} : a in Q>, for any fixed e."""
    return closure(displacement_generators(q, e), q.n)


def _orbit_partition(degree: int, gens) -> Partition:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(degree):
            rx, ry = find(x), find(g[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(degree):
        groups.setdefault(find(x), []).append(x)
    return Partition.from_blocks(groups.values())


def orbits(q: Quandle) -> Partition:
    """Orbit partition of the Dis(Q) action (equal to the LMlt(Q) one)."""
    dis_orbits = _orbit_partition(q.n, displacement_generators(q))
    lmlt_orbits = _orbit_partition(q.n, [q.row(a) for a in range(q.n)])
    assert dis_orbits == lmlt_orbits, "Dis and LMlt orbits must coincide"
    return dis_orbits


def cayley_kernel(q: Quandle) -> Partition:
    """Partition identifying elements with equal left translations."""
    by_row: dict[Perm, list[int]] = {}
    for a in range(q.n):
        by_row.setdefault(q.row(a), []).append(a)
    return Partition.from_blocks(by_row.values())


def is_abelian(g: PermGroup) -> bool:
    gens = g.generators
    return all(
        compose(a, b) == compose(b, a)
        for i, a in enumerate(gens)
        for b in gens[i + 1:]
    )


def is_semiregular(g: PermGroup) -> bool:
    """No non-identity element fixes a point."""
    ident = identity_perm(g.degree)
    for p in g.elements:
        if p != ident and any(p[x] == x for x in range(g.degree)):
            return False
    return True


def translation_set(q: Quandle, e: int = 0) -> list[Perm]:
    """The set {L_x L_e^{-1} : x in Q}, deduplicated in order of x."""
    seen: set[Perm] = set()
    out: list[Perm] = []
    for p in displacement_generators(q, e):
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def is_tiny(q: Quandle, e: int = 0) -> bool:
    """Does Dis(Q) equal the plain set {L_x L_e^{-1} : x in Q}?

    The set always sits inside Dis(Q), so equality amounts to the set
    being closed under composition and inverses (the latter follows from
    finiteness but is checked anyway, it is cheap).
    """
    lam = translation_set(q, e)
    lam_set = set(lam)
    for a in lam:
        if inverse(a) not in lam_set:
            return False
        for b in lam:
            if compose(a, b) not in lam_set:
                return False
    return True


def is_medial(q: Quandle) -> bool:
    """(x*y)*(u*v) == (x*u)*(y*v) for all quadruples.

    Cross-checked against abelianness of the displacement group, which is
    an equivalent condition.
    """
    t = q.array
    uv = t[None, :, :]                      # (u,v)
    verdict = True
    for x in range(q.n):                    # keep memory at O(n^3)
        lhs = t[t[x][:, None, None], uv]    # (y,u,v)
        rhs = t[t[x][None, :, None], t[:, None, :]]
        if not np.array_equal(lhs, rhs):
            verdict = False
            break
    assert verdict == is_abelian(displacement_group(q)), (
        "mediality must match abelianness of the displacement group"
    )
    return verdict
