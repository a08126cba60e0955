"""Batch command-line front end.

Commands: analyze, cover, mesh {validate,sum,coset,semireg,genmax},
quotient, iso, affine.  Machine-readable output is line oriented
key=value.  Exit codes: 0 ok, 2 parse error, 3 invalid algebra,
4 negative verdict where a construction was requested.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import affine as affine_mod
from . import cover as cover_mod
from . import iofmt, mesh as mesh_mod, perms
from .core import Quandle, is_isomorphic, quotient
from .errors import NotHomImage, ParseError, QuandleError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_NEGATIVE = 4


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def _emit(pairs) -> None:
    for key, value in pairs:
        print(f"{key}={_fmt(value)}")


def analysis_report(q: Quandle) -> list[tuple[str, object]]:
    orbit_partition = perms.orbits(q)
    dis = perms.displacement_group(q)
    lmlt = perms.multiplication_group(q)
    kernel = perms.cayley_kernel(q)
    abelian = perms.is_abelian(dis)
    semiregular = perms.is_semiregular(dis)
    tiny = perms.is_tiny(q)
    return [
        ("n", q.n),
        ("orbits", len(orbit_partition.blocks)),
        ("orbit_sizes", orbit_partition.sizes()),
        ("lmlt_order", lmlt.order),
        ("dis_order", dis.order),
        ("cayley_blocks", len(kernel.blocks)),
        ("medial", perms.is_medial(q)),
        ("dis_abelian", abelian),
        ("dis_semiregular", semiregular),
        ("dis_tiny", tiny),
        ("embeds_into_affine", abelian and semiregular),
        ("homim_of_affine", abelian and tiny),
    ]


def _read_quandle(path: str) -> Quandle:
    return iofmt.parse_quandle(Path(path).read_text())


def cmd_analyze(args) -> int:
    q = _read_quandle(args.path)
    report = analysis_report(q)
    assert dict(report)["homim_of_affine"] == cover_mod.is_homim_of_affine(q)
    _emit(report)
    return EXIT_OK


def cmd_cover(args) -> int:
    q = _read_quandle(args.path)
    if args.transversal == "simple":
        t = cover_mod.simple_multitransversal(q)
    else:
        t = cover_mod.optimized_multitransversal(q)
    result = cover_mod.build_cover(q, t)
    report = cover_mod.verify_cover(result, q)
    if not report.ok:
        for line in report.failures:
            print(f"error={line}", file=sys.stderr)
        return EXIT_INVALID
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(args.path).stem
    table_path = out / f"{stem}.cover.quandle"
    sidecar_path = out / f"{stem}.cover.sidecar"
    table_path.write_text(iofmt.format_quandle(result.cover.quandle))
    sidecar_path.write_text(iofmt.format_cover_sidecar(result))
    _emit([
        ("A_order", result.group.order),
        ("T_size", result.transversal.size),
        ("kappa", result.transversal.kappa),
        ("psi_bijective", result.psi_bijective),
        ("table_file", table_path),
        ("sidecar_file", sidecar_path),
    ])
    return EXIT_OK


def _read_mesh(path: str) -> mesh_mod.AffineMesh:
    return iofmt.parse_mesh(Path(path).read_text())


def cmd_mesh(args) -> int:
    if args.mesh_cmd == "genmax":
        m = mesh_mod.generate_max_mesh(args.n, args.k)
        text = iofmt.format_mesh(m)
        if args.out:
            Path(args.out).write_text(text)
            _emit([("sum_size", m.total_size), ("file", args.out)])
        else:
            print(text, end="")
        return EXIT_OK
    m = _read_mesh(args.path)
    if args.mesh_cmd == "validate":
        _emit([
            ("valid", True),
            ("indices", m.k),
            ("sum_size", m.total_size),
            ("indecomposable", mesh_mod.is_indecomposable(m)),
        ])
    elif args.mesh_cmd == "sum":
        q = mesh_mod.mesh_sum(m)
        text = iofmt.format_quandle(q)
        if args.out:
            Path(args.out).write_text(text)
            _emit([("n", q.n), ("file", args.out)])
        else:
            print(text, end="")
    elif args.mesh_cmd == "coset":
        _emit([("coset", mesh_mod.coset_criterion(m))])
    elif args.mesh_cmd == "semireg":
        _emit([("semireg_form", mesh_mod.semiregular_extension_form(m))])
    return EXIT_OK


def cmd_quotient(args) -> int:
    q = _read_quandle(args.path)
    p = iofmt.parse_partition(Path(args.partition).read_text(), q.n)
    print(iofmt.format_quandle(quotient(q, p)), end="")
    return EXIT_OK


def cmd_iso(args) -> int:
    q1 = _read_quandle(args.path1)
    q2 = _read_quandle(args.path2)
    sigma = is_isomorphic(q1, q2)
    if sigma is None:
        print("not isomorphic")
    else:
        print("isomorphic " + " ".join(map(str, sigma)))
    return EXIT_OK


def cmd_affine(args) -> int:
    group, f = iofmt.parse_affine_spec(args.spec)
    aq = affine_mod.make_affine(group, f)
    text = iofmt.format_quandle(aq.quandle)
    if args.out:
        Path(args.out).write_text(text)
        _emit([("n", aq.quandle.n), ("file", args.out)])
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="Finite quandle analysis and affine cover construction.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", help="invariants and affinity verdicts")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cover", help="construct the covering affine quandle")
    p.add_argument("path")
    p.add_argument(
        "--transversal", choices=["simple", "optimized"], default="optimized"
    )
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("mesh", help="affine mesh operations")
    msub = p.add_subparsers(dest="mesh_cmd", required=True)
    for name in ("validate", "sum", "coset", "semireg"):
        mp = msub.add_parser(name)
        mp.add_argument("path")
        if name == "sum":
            mp.add_argument("--out")
        mp.set_defaults(func=cmd_mesh)
    mp = msub.add_parser("genmax")
    mp.add_argument("n", type=int)
    mp.add_argument("k", type=int)
    mp.add_argument("--out")
    mp.set_defaults(func=cmd_mesh)

    p = sub.add_parser("quotient", help="quandle modulo a congruence file")
    p.add_argument("path")
    p.add_argument("partition")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("iso", help="isomorphism test for two table files")
    p.add_argument("path1")
    p.add_argument("path2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("affine", help="build Aff(A,f) from a spec string")
    p.add_argument("spec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_affine)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotHomImage as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ParseError, OSError) as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_PARSE
    except QuandleError as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
