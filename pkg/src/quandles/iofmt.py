"""Text formats: quandle tables, partitions, mesh files, affine specs.

All formats are line oriented; comment lines start with '#'.
"""

from __future__ import annotations

import numpy as np

from .core import Partition, Quandle, validate_quandle
from .errors import ParseError
from .groups import (
    AbelianGroup,
    GroupAutomorphism,
    make_cyclic_product,
    multiplication_automorphism,
    validate_automorphism,
)
from .mesh import AffineMesh, validate_mesh


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _ints(line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {line!r}") from exc


def parse_quandle(text: str) -> Quandle:
    """Line 1: n; then n rows of n entries (row a = a*b for b = 0..n-1)."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty quandle file")
    header = _ints(lines[0])
    if len(header) != 1 or header[0] < 1:
        raise ParseError(f"bad size line {lines[0]!r}")
    n = header[0]
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} table rows, got {len(lines) - 1}")
    table = []
    for line in lines[1:]:
        row = _ints(line)
        if len(row) != n:
            raise ParseError(f"row {line!r} has {len(row)} entries, expected {n}")
        table.append(row)
    return validate_quandle(table)


def format_quandle(q: Quandle) -> str:
    lines = [str(q.n)]
    lines.extend(" ".join(map(str, row)) for row in q.table)
    return "\n".join(lines) + "\n"


def parse_partition(text: str, n: int | None = None) -> Partition:
    """One block per line, space-separated elements."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty partition file")
    blocks = [_ints(line) for line in lines]
    try:
        p = Partition.from_blocks(blocks)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if n is not None and p.n != n:
        raise ParseError(f"partition covers {p.n} elements, quandle has {n}")
    return p


def parse_moduli(token: str) -> tuple[int, ...]:
    try:
        moduli = tuple(int(t) for t in token.split("x"))
    except ValueError as exc:
        raise ParseError(f"bad moduli spec {token!r}") from exc
    if not moduli or any(m < 1 for m in moduli):
        raise ParseError(f"bad moduli spec {token!r}")
    return moduli


def parse_affine_spec(spec: str) -> tuple[AbelianGroup, GroupAutomorphism]:
    """'<m1>x<m2>x...:<automorphism>' where the automorphism is either
    'mul:<u>' (single cyclic factor) or a comma-separated image list."""
    head, sep, rest = spec.partition(":")
    if not sep:
        raise ParseError("affine spec needs '<moduli>:<automorphism>'")
    group = make_cyclic_product(parse_moduli(head))
    if rest.startswith("mul:"):
        try:
            u = int(rest[4:])
        except ValueError as exc:
            raise ParseError(f"bad multiplier {rest!r}") from exc
        if group.moduli is None or len(group.moduli) != 1:
            raise ParseError("'mul:' needs a single cyclic factor")
        return group, multiplication_automorphism(group, u)
    try:
        images = [int(t) for t in rest.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad image list {rest!r}") from exc
    if len(images) != group.order:
        raise ParseError(
            f"image list has {len(images)} entries, group has order {group.order}"
        )
    return group, validate_automorphism(group, images)


def parse_mesh(text: str) -> AffineMesh:
    """Mesh file: 'mesh <k>'; 'group <i> <moduli>'; optional 'phi <i> <j>
    <images...>' (default zero map); optional 'c <i> <j> <element>'."""
    lines = _data_lines(text)
    if not lines or not lines[0].startswith("mesh"):
        raise ParseError("mesh file must start with 'mesh <k>'")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"bad mesh header {lines[0]!r}")
    try:
        k = int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad mesh header {lines[0]!r}") from exc
    if k < 1:
        raise ParseError("mesh needs at least one index")
    groups: list[AbelianGroup | None] = [None] * k
    phi_entries: dict[tuple[int, int], list[int]] = {}
    c_entries: dict[tuple[int, int], int] = {}
    for line in lines[1:]:
        toks = line.split()
        kind = toks[0]
        if kind == "group":
            if len(toks) != 3:
                raise ParseError(f"bad group line {line!r}")
            i = _index(toks[1], k)
            groups[i] = make_cyclic_product(parse_moduli(toks[2]))
        elif kind == "phi":
            if len(toks) < 4:
                raise ParseError(f"bad phi line {line!r}")
            i, j = _index(toks[1], k), _index(toks[2], k)
            phi_entries[(i, j)] = _ints(" ".join(toks[3:]))
        elif kind == "c":
            if len(toks) != 4:
                raise ParseError(f"bad c line {line!r}")
            i, j = _index(toks[1], k), _index(toks[2], k)
            c_entries[(i, j)] = _ints(toks[3])[0]
        else:
            raise ParseError(f"unknown mesh line {line!r}")
    for i, g in enumerate(groups):
        if g is None:
            raise ParseError(f"missing 'group {i}' line")
    phi = [
        [
            np.asarray(
                phi_entries.get((i, j), [0] * groups[i].order), dtype=np.int32
            )
            for j in range(k)
        ]
        for i in range(k)
    ]
    c = [[c_entries.get((i, j), 0) for j in range(k)] for i in range(k)]
    return validate_mesh(groups, phi, c)


def _index(tok: str, k: int) -> int:
    try:
        i = int(tok)
    except ValueError as exc:
        raise ParseError(f"bad index {tok!r}") from exc
    if not 0 <= i < k:
        raise ParseError(f"index {i} out of range 0..{k - 1}")
    return i


def format_mesh(mesh: AffineMesh) -> str:
    lines = [f"mesh {mesh.k}"]
    for i, g in enumerate(mesh.groups):
        moduli = g.moduli or (g.order,)
        lines.append(f"group {i} " + "x".join(map(str, moduli)))
    for i in range(mesh.k):
        for j in range(mesh.k):
            images = mesh.phi[i][j]
            if images.any():
                lines.append(
                    f"phi {i} {j} " + " ".join(str(int(x)) for x in images)
                )
    for i in range(mesh.k):
        for j in range(mesh.k):
            if mesh.c[i][j]:
                lines.append(f"c {i} {j} {mesh.c[i][j]}")
    return "\n".join(lines) + "\n"


def format_cover_sidecar(result) -> str:
    """Per A-element: index, (alpha-index, T-index), f image, psi image."""
    lines = [
        "# columns: element alpha_index t_index f_image psi_image",
        f"# |A|={result.group.order} |T|={result.transversal.size} "
        f"kappa={result.transversal.kappa}",
    ]
    for u in range(result.group.order):
        di, ti = result.pair_of(u)
        lines.append(f"{u} {di} {ti} {int(result.f.images[u])} {int(result.psi[u])}")
    return "\n".join(lines) + "\n"
