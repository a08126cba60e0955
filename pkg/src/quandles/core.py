"""Finite quandles as multiplication tables over elements 0..n-1.

A quandle is an idempotent binary structure in which every left translation
L_a : b -> a*b is an automorphism.  Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    NotACongruence,
    NotIdempotent,
    NotLeftDistributive,
    RowNotBijective,
)

# Full cubic self-distributivity scan is skipped above this size for tables
# that are correct by construction (affine tables); validate_quandle itself
# always runs the complete scan.
FULL_VALIDATE_LIMIT = 512


@dataclass(frozen=True, eq=True)
class Quandle:
    """A validated finite quandle.  Construct via :func:`validate_quandle`."""

    table: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.table, dtype=np.int32)
        arr.setflags(write=False)
        return arr

    @cached_property
    def ldiv_table(self) -> tuple[tuple[int, ...], ...]:
        """ldiv_table[a][c] = the unique b with a*b = c."""
        out = []
        for row in self.table:
            inv = [0] * self.n
            for b, c in enumerate(row):
                inv[c] = b
            out.append(tuple(inv))
        return tuple(out)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def row(self, a: int) -> tuple[int, ...]:
        """The left translation L_a as an image sequence."""
        return self.table[a]

    def elements(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering 0..n-1, canonically ordered.

    Blocks are sorted ascending internally and listed in order of their
    minimum element.
    """

    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_blocks(blocks) -> "Partition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("empty block")
            if seen & set(b):
                raise ValueError("blocks are not disjoint")
            seen |= set(b)
        if seen != set(range(len(seen))) or not seen:
            raise ValueError("blocks do not cover 0..n-1")
        return Partition(canon)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x] = i
        return tuple(out)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def singleton_partition(n: int) -> Partition:
    return Partition(tuple((i,) for i in range(n)))


def validate_quandle(table) -> Quandle:
    """Check idempotence, row bijectivity and left self-distributivity.

    Scans in lexicographic order and reports the first witness found.
    """
    rows = tuple(tuple(int(x) for x in row) for row in table)
    n = len(rows)
    if n == 0:
        raise ValueError("empty table")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {a} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise ValueError(f"entry {x} in row {a} out of range 0..{n - 1}")
    for a in range(n):
        if rows[a][a] != a:
            raise NotIdempotent(a)
    for a in range(n):
        if len(set(rows[a])) != n:
            raise RowNotBijective(a)
    arr = np.asarray(rows, dtype=np.int32)
    for a in range(n):
        # a*(b*c) == (a*b)*(a*c), vectorized over (b,c)
        lhs = arr[a][arr]
        lrow = arr[a]
        rhs = arr[np.ix_(lrow, lrow)]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise NotLeftDistributive(a, b, c)
    return Quandle(rows)


def unchecked_quandle(table: np.ndarray) -> Quandle:
    """Wrap a table that is a quandle by construction.

    Idempotence and row bijectivity are still asserted (they are cheap);
    the cubic distributivity scan runs only below FULL_VALIDATE_LIMIT.
    """
    n = len(table)
    if n <= FULL_VALIDATE_LIMIT:
        return validate_quandle(table)
    arr = np.asarray(table, dtype=np.int32)
    assert np.array_equal(np.diagonal(arr), np.arange(n))
    assert np.array_equal(np.sort(arr, axis=1), np.tile(np.arange(n), (n, 1)))
    return Quandle(tuple(tuple(int(x) for x in row) for row in arr))


def left_divide(q: Quandle, a: int, c: int) -> int:
    """The unique b with a*b = c."""
    return q.ldiv_table[a][c]


def quotient(q: Quandle, p: Partition) -> Quandle:
    """Quandle on the blocks of a congruence, labeled by block order."""
    block_of = p.block_of
    # congruence check, lexicographic first witness
    for bi in p.blocks:
        for a in bi:
            for a2 in bi:
                for bj in p.blocks:
                    for b in bj:
                        for b2 in bj:
                            if block_of[q.table[a][b]] != block_of[q.table[a2][b2]]:
                                raise NotACongruence(a, a2, b, b2)
    k = len(p.blocks)
    table = [[0] * k for _ in range(k)]
    for i, bi in enumerate(p.blocks):
        for j, bj in enumerate(p.blocks):
            table[i][j] = block_of[q.table[bi[0]][bj[0]]]
    return validate_quandle(table)


def induced_subquandle(q: Quandle, subset) -> Quandle:
    """Restrict to a subset closed under * (relabeled in ascending order)."""
    elems = sorted(set(subset))
    index = {x: i for i, x in enumerate(elems)}
    table = [[0] * len(elems) for _ in elems]
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            z = q.table[x][y]
            if z not in index:
                raise ValueError(f"subset not closed: {x}*{y} = {z}")
            table[i][j] = index[z]
    return validate_quandle(table)


def connectivity_orbits(q: Quandle) -> Partition:
    """Orbit partition via union-find over x ~ a*x (the translation action)."""
    parent = list(range(q.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(q.n):
        for x in range(q.n):
            rx, ry = find(x), find(q.table[a][x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(q.n):
        groups.setdefault(find(x), []).append(x)
    return Partition.from_blocks(groups.values())


def _cycle_type(images: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _profiles(q: Quandle) -> list[tuple]:
    orb = connectivity_orbits(q)
    sizes = orb.sizes()
    return [
        (_cycle_type(q.table[a]), sizes[orb.block_of[a]])
        for a in range(q.n)
    ]


def is_isomorphic(q1: Quandle, q2: Quandle) -> tuple[int, ...] | None:
    """Search for an element bijection preserving *, or return None.

    Plain backtracking, pruned by orbit sizes and translation cycle types.
    """
    if q1.n != q2.n:
        return None
    n = q1.n
    prof1, prof2 = _profiles(q1), _profiles(q2)
    if sorted(prof1) != sorted(prof2):
        return None
    candidates = [
        [b for b in range(n) if prof2[b] == prof1[a]] for a in range(n)
    ]
    order = sorted(range(n), key=lambda a: len(candidates[a]))
    sigma = [-1] * n
    used = [False] * n
    t1, t2 = q1.table, q2.table

    def extend(pos: int) -> bool:
        if pos == n:
            # pairwise pruning does not see products landing on elements
            # mapped later, so confirm the full table once at the leaf
            return all(
                sigma[t1[x][y]] == t2[sigma[x]][sigma[y]]
                for x in range(n)
                for y in range(n)
            )
        a = order[pos]
        for b in candidates[a]:
            if used[b]:
                continue
            ok = True
            for c in range(n):
                sc = sigma[c]
                if sc < 0:
                    continue
                im = sigma[t1[a][c]]
                if im >= 0 and im != t2[b][sc]:
                    ok = False
                    break
                im = sigma[t1[c][a]]
                if im >= 0 and im != t2[sc][b]:
                    ok = False
                    break
            if not ok:
                continue
            sigma[a] = b
            used[b] = True
            if extend(pos + 1):
                return True
            sigma[a] = -1
            used[b] = False
        return False

    if extend(0):
        return tuple(sigma)
    return None
