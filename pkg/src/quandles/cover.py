"""Recognition of homomorphic images of affine quandles and explicit
construction of a covering affine quandle with a verified surjection.

The verdict: Q is a homomorphic image of an affine quandle iff its
displacement group is abelian and tiny, checked directly on the set
D = {L_x L_e^{-1}} without computing any group closure.

The construction: pick a multitransversal T of the Cayley kernel that
meets every orbit, endow T with an abelian operation indexed by D and a
cyclic tag group Z_kappa, and return A = Dis(Q) x (T,+) together with an
automorphism f and a surjective quandle homomorphism psi: Aff(A,f) -> Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import cycle

import numpy as np

from . import perms
from .affine import AffineQuandle, make_affine
from .core import Quandle
from .errors import (
    InternalAssertionFailure,
    NotAGroup,
    NotHomImage,
    OplusUndefined,
)
from .groups import (
    AbelianGroup,
    GroupAutomorphism,
    check_abelian_table,
    direct_product,
    validate_automorphism,
)
from .perms import Perm, compose, inverse, translation_set


def is_homim_of_affine(q: Quandle, e: int = 0) -> bool:
    """Is Q a homomorphic image of an affine quandle?

    Builds D = {L_x L_e^{-1} : x in Q} and fails on the first pair that
    does not commute or whose product escapes D.
    """
    d = translation_set(q, e)
    d_set = set(d)
    for a in d:
        for b in d:
            ab = compose(a, b)
            if ab != compose(b, a) or ab not in d_set:
                return False
    return True


def translation_blocks(q: Quandle, e: int = 0) -> tuple[list[Perm], list[list[int]]]:
    """D in discovery order (identity first for e=0) and, aligned with it,
    the Cayley-kernel blocks: block i = all x with L_x L_e^{-1} = D[i],
    ascending, except the designated zero e is moved to the front of its
    block."""
    le_inv = inverse(q.row(e))
    d: list[Perm] = []
    index: dict[Perm, int] = {}
    blocks: list[list[int]] = []
    for x in range(q.n):
        p = compose(q.row(x), le_inv)
        if p not in index:
            index[p] = len(d)
            d.append(p)
            blocks.append([])
        blocks[index[p]].append(x)
    be = blocks[index[perms.identity_perm(q.n)]]
    be.remove(e)
    be.insert(0, e)
    return d, blocks


@dataclass(frozen=True)
class Multitransversal:
    """kappa entries from each Cayley-kernel block, at least one per orbit.

    Entries are stored block-major: entry i*kappa + j is the j-th pick
    from block i (blocks follow the discovery order of D); entries are
    formally distinct even when the underlying element repeats, and the
    within-block position j is the tag valued in Z_kappa.  Entry 0 is the
    designated zero e.
    """

    elements: tuple[int, ...]
    kappa: int
    m: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def block_index(self, entry: int) -> int:
        return entry // self.kappa

    @property
    def e(self) -> int:
        return self.elements[0]


def simple_multitransversal(q: Quandle) -> Multitransversal:
    """All of Q, cycled per block up to the largest block size."""
    if not is_homim_of_affine(q):
        raise NotHomImage()
    _, blocks = translation_blocks(q)
    kappa = max(len(b) for b in blocks)
    elems: list[int] = []
    for b in blocks:
        elems.extend(b[j % len(b)] for j in range(kappa))
    return Multitransversal(tuple(elems), kappa, len(blocks))


def optimized_multitransversal(q: Quandle) -> Multitransversal:
    """Greedy transversal keeping the per-block multiplicity low.

    Picks one element per orbit: the orbit of e goes first and takes e;
    the rest are processed most-constrained first (fewest candidate
    blocks) and each takes the smallest element of its currently
    least-loaded block.  Blocks are then padded to the maximum load.
    """
    if not is_homim_of_affine(q):
        raise NotHomImage()
    _, blocks = translation_blocks(q)
    m = len(blocks)
    block_of = [0] * q.n
    for i, b in enumerate(blocks):
        for x in b:
            block_of[x] = i
    orbit_list = [list(b) for b in perms.orbits(q).blocks]
    loads = [0] * m
    chosen: list[list[int]] = [[] for _ in range(m)]

    def take(orbit: list[int], forced: int | None = None) -> None:
        if forced is not None:
            b = block_of[forced]
            chosen[b].append(forced)
            loads[b] += 1
            return
        cands = sorted({block_of[x] for x in orbit})
        b = min(cands, key=lambda i: (loads[i], i))
        x = min(x for x in orbit if block_of[x] == b)
        chosen[b].append(x)
        loads[b] += 1

    e = 0
    rest = []
    for orbit in orbit_list:
        if e in orbit:
            take(orbit, forced=e)
        else:
            rest.append(orbit)
    rest.sort(key=lambda orbit: (len({block_of[x] for x in orbit}), min(orbit)))
    for orbit in rest:
        take(orbit)

    kappa = max(loads)
    elems: list[int] = []
    for i, b in enumerate(blocks):
        entries = sorted(chosen[i])
        if i == 0:
            entries.remove(e)
            entries.insert(0, e)
        unused = [x for x in b if x not in entries]
        filler = cycle(b)
        while len(entries) < kappa:
            entries.append(unused.pop(0) if unused else next(filler))
        elems.extend(entries)
    return Multitransversal(tuple(elems), kappa, m)


def build_oplus(q: Quandle, t: Multitransversal) -> AbelianGroup:
    """The abelian group (T,+): D-part by composition, tag part mod kappa."""
    d, blocks = translation_blocks(q)
    m, kappa = len(d), t.kappa
    if t.m != m or t.size != m * kappa:
        raise OplusUndefined("transversal does not match the block structure")
    index = {p: i for i, p in enumerate(d)}
    prod = np.empty((m, m), dtype=np.int32)
    dneg = np.empty(m, dtype=np.int32)
    for i, a in enumerate(d):
        inv = inverse(a)
        if inv not in index:
            raise OplusUndefined("translation set is not closed under inverses")
        dneg[i] = index[inv]
        for j, b in enumerate(d):
            ab = compose(a, b)
            if ab not in index:
                raise OplusUndefined(
                    "translation set is not closed under composition"
                )
            prod[i][j] = index[ab]
    tags = (np.arange(kappa, dtype=np.int32)[:, None]
            + np.arange(kappa, dtype=np.int32)[None, :]) % kappa
    add = (
        prod[:, None, :, None] * np.int32(kappa) + tags[None, :, None, :]
    ).reshape(t.size, t.size)
    neg = (
        dneg[:, None] * np.int32(kappa)
        + (-np.arange(kappa, dtype=np.int32)[None, :]) % kappa
    ).reshape(-1)
    try:
        return AbelianGroup(add, neg, name="(T,+)")
    except NotAGroup as exc:  # pragma: no cover - signals violated precondition
        raise OplusUndefined(str(exc)) from exc


@dataclass(frozen=True, eq=False)
class CoverResult:
    """A = Dis(Q) x (T,+) with elements (alpha, t) indexed alpha-major."""

    group: AbelianGroup
    f: GroupAutomorphism
    psi: np.ndarray
    cover: AffineQuandle
    transversal: Multitransversal
    dis: tuple[Perm, ...]

    @property
    def psi_bijective(self) -> bool:
        return len(set(self.psi.tolist())) == len(self.psi)

    def pair_of(self, u: int) -> tuple[int, int]:
        """(index in D, index in T) of the A-element u."""
        return divmod(u, self.transversal.size)


def dis_as_group(q: Quandle) -> AbelianGroup:
    """Dis(Q), abelian and tiny, as a table-backed abelian group over D."""
    d, _ = translation_blocks(q)
    index = {p: i for i, p in enumerate(d)}
    m = len(d)
    add = np.empty((m, m), dtype=np.int32)
    neg = np.empty(m, dtype=np.int32)
    for i, a in enumerate(d):
        neg[i] = index[inverse(a)]
        for j, b in enumerate(d):
            add[i][j] = index[compose(a, b)]
    return AbelianGroup(add, neg, name="Dis(Q)")


def build_cover(q: Quandle, t: Multitransversal) -> CoverResult:
    """Construct Aff(A,f) and the surjection psi onto Q, and verify them."""
    if not is_homim_of_affine(q):
        raise NotHomImage()
    d, _ = translation_blocks(q)
    index = {p: i for i, p in enumerate(d)}
    group_t = build_oplus(q, t)
    group_d = dis_as_group(q)
    a = direct_product(group_d, group_t, name="Dis(Q) x (T,+)")
    nt = t.size
    le = q.row(0)
    inv_lx = {x: inverse(q.row(x)) for x in set(t.elements)}
    f_im = np.empty(a.order, dtype=np.int32)
    psi = np.empty(a.order, dtype=np.int32)
    for di, alpha in enumerate(d):
        le_alpha = compose(le, alpha)
        for ti, x in enumerate(t.elements):
            p = compose(le_alpha, inv_lx[x])
            d2 = index.get(p)
            if d2 is None:
                raise InternalAssertionFailure(
                    "f image escapes D; displacement group is not tiny"
                )
            f_im[di * nt + ti] = d2 * nt + ti
            psi[di * nt + ti] = alpha[x]
    try:
        f = validate_automorphism(a, f_im)
    except Exception as exc:
        raise InternalAssertionFailure(f"f is not an automorphism: {exc}") from exc
    cover = make_affine(a, f)
    result = CoverResult(a, f, psi, cover, t, tuple(d))
    if a.order != len(d) * nt:
        raise InternalAssertionFailure("|A| != |Dis(Q)| * |T|")
    report = verify_cover(result, q)
    if not report.ok:
        raise InternalAssertionFailure(
            "cover verification failed: " + "; ".join(report.failures)
        )
    return result


@dataclass(frozen=True)
class VerifyReport:
    failures: tuple[str, ...]
    a_order: int
    psi_bijective: bool

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_cover(result: CoverResult, q: Quandle) -> VerifyReport:
    """Independent exhaustive check of the cover.

    Confirms that A is an abelian group, f an automorphism, psi a
    surjective quandle homomorphism Aff(A,f) -> Q.  Reports the first
    witness per failed property instead of raising.
    """
    failures: list[str] = []
    a = result.group
    witness = check_abelian_table(a.add, a.neg)
    if witness is not None:
        failures.append(f"A is not an abelian group: {witness}")
    im = result.f.images
    n = a.order
    if not np.array_equal(np.sort(im), np.arange(n)):
        failures.append("f is not bijective")
    else:
        lhs = im[a.add]
        rhs = a.add[np.ix_(im, im)]
        if not np.array_equal(lhs, rhs):
            u, v = map(int, np.argwhere(lhs != rhs)[0])
            failures.append(f"f is not additive at ({u},{v})")
    psi = result.psi
    ct = result.cover.quandle.array
    qt = q.array
    if psi.shape != (n,) or psi.min() < 0 or psi.max() >= q.n:
        failures.append("psi is not a map into Q")
    else:
        lhs = psi[ct]
        rhs = qt[np.ix_(psi, psi)]
        if not np.array_equal(lhs, rhs):
            u, v = map(int, np.argwhere(lhs != rhs)[0])
            failures.append(
                f"psi is not a homomorphism at ({u},{v}): "
                f"psi(u*v)={int(lhs[u][v])} but psi(u)*psi(v)={int(rhs[u][v])}"
            )
        if set(psi.tolist()) != set(range(q.n)):
            failures.append("psi is not surjective")
    return VerifyReport(
        tuple(failures),
        a_order=n,
        psi_bijective=result.psi_bijective,
    )
