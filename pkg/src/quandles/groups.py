"""Finite abelian groups with integer-indexed elements.

Every group is stored as a full addition table (desk scale), so groups
arising from cyclic products and groups built element-wise (the cover
construction) share one representation.  Index 0 is always the zero.

Group axioms are verified at construction: commutativity, identity and
inverses exhaustively, associativity by Light's test over a generating
set (equivalent to the exhaustive cubic scan, but quadratic).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import EmptyModuli, NotAdditive, NotAGroup, NotBijective


def _first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple[int, ...]:
    return tuple(int(x) for x in np.argwhere(a != b)[0])


def _close_under(add: np.ndarray, seed: set[int]) -> set[int]:
    closed = set(seed) | {0}
    while True:
        cur = np.fromiter(closed, dtype=np.int64)
        new = set(np.unique(add[np.ix_(cur, cur)]).tolist()) - closed
        if not new:
            return closed
        closed |= new


def generating_indices(add: np.ndarray) -> list[int]:
    """Greedy generating set under the operation table (0 excluded)."""
    n = len(add)
    closed = {0}
    gens: list[int] = []
    for x in range(n):
        if x in closed:
            continue
        gens.append(x)
        closed = _close_under(add, closed | {x})
        if len(closed) == n:
            break
    return gens


def check_abelian_table(add: np.ndarray, neg: np.ndarray) -> str | None:
    """Return a description of the first axiom failure, or None."""
    n = len(add)
    rng = np.arange(n, dtype=add.dtype)
    if add.shape != (n, n) or neg.shape != (n,):
        return "shape mismatch"
    if add.min() < 0 or add.max() >= n:
        return "entry out of range"
    if not np.array_equal(add, add.T):
        a, b = _first_mismatch(add, add.T)
        return f"not commutative at ({a},{b})"
    if not np.array_equal(add[0], rng):
        return "index 0 is not a neutral element"
    if not np.array_equal(add[rng, neg], np.zeros(n, dtype=add.dtype)):
        a = int(np.argwhere(add[rng, neg] != 0)[0][0])
        return f"neg({a}) is not an inverse"
    # Light's associativity test: checking a+(g+c) == (a+g)+c for g in a
    # generating set suffices for full associativity.
    for g in generating_indices(add):
        left = add[add[:, g], :]
        right = add[:, add[g, :]]
        if not np.array_equal(left, right):
            a, c = _first_mismatch(left, right)
            return f"not associative at ({a},{g},{c})"
    return None


@dataclass(frozen=True, eq=False)
class AbelianGroup:
    """Finite abelian group on elements 0..order-1, zero at index 0."""

    add: np.ndarray
    neg: np.ndarray
    moduli: tuple[int, ...] | None = None
    name: str = ""

    def __post_init__(self):
        witness = check_abelian_table(self.add, self.neg)
        if witness is not None:
            raise NotAGroup(witness)
        self.add.setflags(write=False)
        self.neg.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def zero(self) -> int:
        return 0

    def add_el(self, a: int, b: int) -> int:
        return int(self.add[a][b])

    def neg_el(self, a: int) -> int:
        return int(self.neg[a])

    def sub_el(self, a: int, b: int) -> int:
        return int(self.add[a][self.neg[b]])

    def element_tuple(self, i: int) -> tuple[int, ...]:
        """Mixed-radix coordinates (cyclic products only)."""
        if self.moduli is None:
            raise ValueError("group has no modulus coordinates")
        out = []
        for m in reversed(self.moduli):
            out.append(i % m)
            i //= m
        return tuple(reversed(out))

    def __repr__(self) -> str:
        label = self.name or (
            "Z" + "xZ".join(map(str, self.moduli)) if self.moduli else "group"
        )
        return f"AbelianGroup({label}, order={self.order})"


def make_cyclic_product(moduli) -> AbelianGroup:
    """Z_{m1} x ... x Z_{mr}, elements in mixed-radix order, zero first."""
    moduli = tuple(int(m) for m in moduli)
    if not moduli:
        raise EmptyModuli()
    if any(m < 1 for m in moduli):
        raise ValueError("moduli must be positive")
    n = math.prod(moduli)
    coords = np.stack(
        np.unravel_index(np.arange(n), moduli), axis=1
    ).astype(np.int64)
    weights = np.ones(len(moduli), dtype=np.int64)
    for i in range(len(moduli) - 2, -1, -1):
        weights[i] = weights[i + 1] * moduli[i + 1]
    mods = np.asarray(moduli, dtype=np.int64)
    summed = (coords[:, None, :] + coords[None, :, :]) % mods
    add = (summed @ weights).astype(np.int32)
    neg = (((-coords) % mods) @ weights).astype(np.int32)
    return AbelianGroup(add, neg, moduli=moduli)


def direct_product(g1: AbelianGroup, g2: AbelianGroup, name: str = "") -> AbelianGroup:
    """Direct product; element (a,b) has index a*|G2| + b."""
    n2 = np.int32(g2.order)
    add = (
        g1.add[:, None, :, None].astype(np.int32) * n2
        + g2.add[None, :, None, :]
    ).reshape(g1.order * g2.order, g1.order * g2.order)
    neg = (g1.neg[:, None].astype(np.int32) * n2 + g2.neg[None, :]).reshape(-1)
    moduli = None
    if g1.moduli is not None and g2.moduli is not None:
        moduli = g1.moduli + g2.moduli
    return AbelianGroup(add, neg, moduli=moduli, name=name)


@dataclass(frozen=True, eq=False)
class GroupAutomorphism:
    """A validated automorphism, stored as an explicit element map."""

    group: AbelianGroup
    images: np.ndarray

    def __post_init__(self):
        self.images.setflags(write=False)

    def __call__(self, a: int) -> int:
        return int(self.images[a])

    @cached_property
    def inverse_images(self) -> np.ndarray:
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(len(self.images), dtype=self.images.dtype)
        inv.setflags(write=False)
        return inv


def validate_automorphism(group: AbelianGroup, images) -> GroupAutomorphism:
    """Check bijectivity and additivity (first witness each)."""
    im = np.asarray(images, dtype=np.int32)
    n = group.order
    if im.shape != (n,):
        raise ValueError(f"map has {im.shape} images, expected {n}")
    if not np.array_equal(np.sort(im), np.arange(n)):
        raise NotBijective()
    mapped_sum = im[group.add]
    sum_mapped = group.add[np.ix_(im, im)]
    if not np.array_equal(mapped_sum, sum_mapped):
        a, b = _first_mismatch(mapped_sum, sum_mapped)
        raise NotAdditive(a, b)
    return GroupAutomorphism(group, im)


def multiplication_automorphism(group: AbelianGroup, u: int) -> GroupAutomorphism:
    """x -> u*x on a single cyclic group Z_m."""
    if group.moduli is None or len(group.moduli) != 1:
        raise ValueError("multiplication shorthand needs a single cyclic factor")
    m = group.moduli[0]
    return validate_automorphism(group, [(u * x) % m for x in range(m)])


def identity_automorphism(group: AbelianGroup) -> GroupAutomorphism:
    return GroupAutomorphism(group, np.arange(group.order, dtype=np.int32))


def enumerate_homomorphism_images(src: AbelianGroup, dst: AbelianGroup) -> list[np.ndarray]:
    """All additive maps src -> dst, as image arrays (brute force, tiny sizes)."""
    gens = generating_indices(src.add)
    if not gens:
        return [np.zeros(src.order, dtype=np.int32)]
    out = []
    choices = [range(dst.order)] * len(gens)
    for picks in itertools.product(*choices):
        im = np.full(src.order, -1, dtype=np.int32)
        im[0] = 0
        ok = True
        # close the partial map under addition
        frontier = [0]
        assigned = {0}
        for g, v in zip(gens, picks):
            if im[g] not in (-1, v):
                ok = False
                break
            im[g] = v
            assigned.add(g)
        if not ok:
            continue
        changed = True
        while changed and ok:
            changed = False
            for a in list(assigned):
                for b in list(assigned):
                    s = src.add_el(a, b)
                    v = dst.add_el(int(im[a]), int(im[b]))
                    if im[s] == -1:
                        im[s] = v
                        assigned.add(s)
                        changed = True
                    elif im[s] != v:
                        ok = False
                        break
                if not ok:
                    break
        if not ok or -1 in im:
            continue
        if np.array_equal(im[src.add], dst.add[np.ix_(im, im)]):
            out.append(im)
    # dedupe (different generator picks can induce the same map)
    seen = set()
    uniq = []
    for im in out:
        key = im.tobytes()
        if key not in seen:
            seen.add(key)
            uniq.append(im)
    return uniq
