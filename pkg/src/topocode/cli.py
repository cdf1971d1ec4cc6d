"""Command-line front end: ``topocode <subcommand> ...``.

Exit status 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, _backend
from .code import (
    distance_report,
    export_check_matrix,
    from_embedding,
    is_detectable,
    syndrome,
)
from .errors import DimensionError, TopocodeError
from .families import complete_selfdual, kitaev_toric, optimal_toric, planar_holed
from .homology import (
    homology_summary,
    min_nontrivial_cocycle_oracle,
    min_nontrivial_cycle_oracle,
)
from .pauli import PauliElement
from .rates import bound_curve_csv, default_table, figure1_table, rows_to_csv
from .surface import connected_sum, format_embedding, parse_embedding


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise TopocodeError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return parse_embedding(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_family(args) -> int:
    kind = args.kind
    if kind == "kitaev-toric":
        c = kitaev_toric(_need(args, "d"))
    elif kind == "optimal-toric":
        c = optimal_toric(_need(args, "d"))
    elif kind == "complete":
        c = complete_selfdual(_need(args, "s"))
    else:
        c = planar_holed(_need(args, "holes"), _need(args, "d"))
    _emit(format_embedding(c), args.out)
    return 0


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        args.parser.error(f"family {args.kind} requires --{name}")
    return value


def cmd_inspect(args) -> int:
    c = _load(args.path)
    info = c.info()
    code = from_embedding(c)
    print(f"surface: {info.name()}")
    print(f"chi: {info.chi}")
    print(f"genus: {info.genus}")
    print(f"orientable: {'yes' if info.orientable else 'no'}")
    print(f"boundary components: {info.boundary_components}")
    print(f"V E F: {c.V} {c.E} {c.F - len(c.open_faces)}")
    hint = dict(c.metadata).get("d")
    if code.k == 0:
        d = "undefined (k=0)"
    elif args.distance:
        d = str(distance_report(code).d)
    elif hint is not None:
        got = distance_report(code).d
        d = f"{hint} (formula→verified)" if str(got) == hint else f"{got} (formula said {hint})"
    else:
        d = "?"
    print(f"code: [[{code.n},{code.k},{d}]]")
    print(f"connectivity c: {code.connectivity_c}")
    print(f"ground degeneracy: {2 ** code.k}")
    return 0


def cmd_distance(args) -> int:
    c = _load(args.path)
    code = from_embedding(c)
    rep = distance_report(code)
    print(f"d: {rep.d}")
    print(f"z-distance (cycles): {rep.z_distance}")
    print(f"x-distance (cocycles): {rep.x_distance}")
    print(f"witness: {' '.join(map(str, rep.witness.support()))} ({'Z' if rep.witness.is_z_type() else 'X'}-type)")
    if args.oracle:
        hs = homology_summary(c)
        print(f"oracle: enumerating cycle space (dim {hs.z1_dim}) and cocycle space (dim {hs.z1co_dim})")
        oz = min_nontrivial_cycle_oracle(c)
        ox = min_nontrivial_cocycle_oracle(c)
        agree = (oz, ox) == (rep.z_distance, rep.x_distance)
        print(f"oracle: z-distance {oz}, x-distance {ox}: {'agree' if agree else 'DISAGREE'}")
        if not agree:
            return 1
    return 0


def cmd_export(args) -> int:
    sys.stdout.write(export_check_matrix(from_embedding(_load(args.path))))
    return 0


def cmd_connect_sum(args) -> int:
    if args.path1 == "-" and args.path2 == "-":
        raise TopocodeError("only one input may be read from stdin")
    c = connected_sum(_load(args.path1), args.edge1, _load(args.path2), args.edge2)
    _emit(format_embedding(c), args.out)
    return 0


def cmd_rates(args) -> int:
    rows = figure1_table() if args.figure1 else default_table()
    sys.stdout.write(rows_to_csv(rows))
    return 0


def cmd_hamming(args) -> int:
    sys.stdout.write(bound_curve_csv(args.start, args.stop, args.samples))
    return 0


def cmd_detect(args) -> int:
    code = from_embedding(_load(args.path))
    err = PauliElement.from_string(args.pauli)
    if err.n != code.n:
        raise DimensionError(f"Pauli string has {err.n} letters, code has n={code.n}")
    print(f"syndrome: {syndrome(code, err)}")
    print(f"weight: {err.weight()}")
    print(f"detectable: {'yes' if is_detectable(code, err) else 'no'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topocode", description="Topological codes from graph embeddings.")
    p.add_argument("--version", action="version", version=f"topocode {__version__} ({_backend.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", help="write a family embedding")
    f.add_argument("kind", choices=["kitaev-toric", "optimal-toric", "complete", "planar"])
    f.add_argument("--d", type=int)
    f.add_argument("--s", type=int)
    f.add_argument("--holes", type=int)
    f.add_argument("--out")
    f.set_defaults(func=cmd_family, parser=f)

    i = sub.add_parser("inspect", help="surface and code parameters")
    i.add_argument("path")
    i.add_argument("--distance", action="store_true")
    i.set_defaults(func=cmd_inspect)

    d = sub.add_parser("distance", help="exact code distance")
    d.add_argument("path")
    d.add_argument("--oracle", action="store_true", help="cross-check by full enumeration")
    d.set_defaults(func=cmd_distance)

    e = sub.add_parser("export-check", help="parity-check matrix text")
    e.add_argument("path")
    e.set_defaults(func=cmd_export)

    c = sub.add_parser("connect-sum", help="connected sum of two embeddings")
    c.add_argument("path1")
    c.add_argument("edge1", type=int)
    c.add_argument("path2")
    c.add_argument("edge2", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_connect_sum)

    r = sub.add_parser("rates", help="CSV of rate rows")
    r.add_argument("--figure1", action="store_true")
    r.set_defaults(func=cmd_rates)

    h = sub.add_parser("hamming-bound", help="CSV of the asymptotic quantum Hamming bound")
    h.add_argument("--from", dest="start", type=float, required=True)
    h.add_argument("--to", dest="stop", type=float, required=True)
    h.add_argument("--samples", type=int, required=True)
    h.set_defaults(func=cmd_hamming)

    t = sub.add_parser("detect", help="syndrome of a Pauli error")
    t.add_argument("path")
    t.add_argument("--pauli", required=True)
    t.set_defaults(func=cmd_detect)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TopocodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
