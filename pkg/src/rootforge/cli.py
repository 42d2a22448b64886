"""Command-line front end; deterministic, file-based outputs.

Exit codes: 0 success, 1 domain error, 2 usage error.  Repeated runs with
identical inputs produce byte-identical output (no timestamps unless
--stamp is given).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import affine, cover, hamilton, induce, mckay, polyhedra, reptheory, roots
from .errors import RootforgeError
from .scalars import FLOAT, GoldenNumber, format_golden


def _fmt(value):
    """JSON-safe rendering: exact scalars as 'p/q+r/s t', floats at 12 digits."""
    if isinstance(value, GoldenNumber):
        return format_golden(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return float(f"{value:.12g}")
    return value


def _vec(v):
    return [_fmt(c) for c in v]


def _emit(args, payload: dict, text: str | None = None) -> None:
    if getattr(args, "stamp", False):
        import datetime

        payload["generated"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    body = text if text is not None else json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _write(path: str, body: str) -> None:
    with open(path, "w") as fh:
        fh.write(body)


def cmd_roots(args) -> None:
    simples, backend = roots.catalog(args.type)
    if args.backend == "float":
        backend = FLOAT
        simples = tuple(tuple(float(c) for c in s) for s in simples)
    rs = roots.close(simples, backend, name=args.type)
    payload = {
        "type": args.type,
        "backend": backend.kind,
        "count": len(rs),
        "simples": [_vec(s) for s in rs.simples],
        "roots": [_vec(r) for r in rs.roots],
    }
    if args.diagram_out:
        _write(args.diagram_out, roots.diagram_dot(rs.simples, args.type.replace("(", "_").replace(")", "")))
    _emit(args, payload)


def cmd_exponents(args) -> None:
    simples, _ = roots.catalog(args.type)
    report = roots.exponents(simples)
    _emit(args, {"h": report.order, "exponents": list(report.exponents)})


def cmd_induce(args) -> None:
    simples, backend = roots.catalog(getattr(args, "from"))
    rs3 = roots.close(simples, backend, name=getattr(args, "from"))
    rs4 = induce.induce_4d(rs3)
    payload = {
        "from": getattr(args, "from"),
        "to": rs4.name,
        "count": len(rs4),
        "roots": [_vec(r) for r in rs4.roots],
    }
    _emit(args, payload)


def cmd_e8(args) -> None:
    report = induce.e8_from_h3()
    rs = report.system
    simples = rs.simples
    cartan_ok = roots._label_match(
        roots.coxeter_label_matrix(simples),
        roots.coxeter_label_matrix(list(roots.catalog("E8")[0])),
    )
    payload = {
        "count": len(rs),
        "recognized": rs.name,
        "unreduced_copies": [report.even_copy.name, report.odd_copy.name],
        "cartan_matches_E8": cartan_ok,
    }
    if args.verify and not (len(rs) == 240 and rs.name == "E8" and cartan_ok):
        raise RootforgeError("E8 verification failed")
    if args.gram_csv:
        lines = []
        for a in simples:
            lines.append(",".join(str(_fmt(rs.inner(a, b))) for b in simples))
        _write(args.gram_csv, "\n".join(lines) + "\n")
    if not args.verify:
        payload["roots"] = [_vec(r) for r in rs.roots]
    _emit(args, payload)


def cmd_affine(args) -> None:
    if args.project:
        folding = affine.project_affine_root(args.project)
        payload = {
            "source": folding.source,
            "target": folding.target,
            "pairing": [list(p) if not isinstance(p[2], GoldenNumber) else [p[0], p[1], _fmt(p[2])] for p in folding.pairing],
            "affine_coefficients": [_fmt(c) for c in folding.affine_coefficients],
        }
        if folding.translation is not None:
            payload["translation"] = _vec(folding.translation)
            payload["axis_class"] = affine.axis_class(folding.translation)
        _emit(args, payload)
        return
    seeds = {
        "5fold": polyhedra.ICOSAHEDRON_SEED,
        "3fold": polyhedra.DODECAHEDRON_SEED,
        "2fold": polyhedra.ICOSIDODECAHEDRON_SEED,
    }
    if args.axis not in seeds:
        raise RootforgeError(f"unknown axis {args.axis!r}")
    seed_orbit = polyhedra.orbit(seeds[args.axis])
    direction = seeds[args.axis]
    norm = float(sum(float(c) ** 2 for c in direction)) ** 0.5
    scale = GoldenNumber(Fraction(args.len).limit_denominator(10**6))
    translation = tuple(c * scale for c in direction)
    array = affine.extend(seed_orbit, translation)
    payload = {
        "group": array.group,
        "axis": args.axis,
        "length_units_of_axis_vector": args.len,
        "axis_vector_norm": _fmt(norm),
        "seed_size": array.seed_size,
        "cardinality": len(array),
        "degenerate": array.degenerate,
    }
    if args.csv:
        lines = ["x,y,z"]
        for p in array.points:
            lines.append(",".join(f"{float(c):.12g}" for c in p))
        _write(args.csv, "\n".join(lines) + "\n")
    _emit(args, payload)


def cmd_fullerene(args) -> None:
    shells = affine.fullerene_onion(args.start, args.shells)
    payload = {
        "start": args.start,
        "shells": [
            {
                "atoms": s.atom_count,
                "T": s.t_number,
                "translation": _fmt(s.translation) if s.translation is not None else None,
                "bond_length": _fmt(s.bond_length),
                "bond_spread": _fmt(s.bond_spread),
            }
            for s in shells
        ],
    }
    if args.off_prefix:
        for s in shells:
            lines = ["OFF", f"{s.atom_count} 0 {len(s.bonds)}"]
            for a in s.atoms:
                lines.append(" ".join(f"{c:.12g}" for c in a))
            _write(f"{args.off_prefix}_{s.atom_count}.off", "\n".join(lines) + "\n")
    _emit(args, payload)


def cmd_solids(args) -> None:
    solid = polyhedra.catalog_solid(args.name)
    payload = polyhedra.orbit_metadata(solid)
    if args.off:
        _write(args.off, polyhedra.off_export(solid))
    if args.dual_off:
        _write(args.dual_off, polyhedra.off_export(polyhedra.dual(solid)))
    _emit(args, payload)


def cmd_chars(args) -> None:
    if args.classes:
        sources = {"2T": "A3", "2O": "B3", "2I": "H3"}
        if args.classes not in sources:
            raise RootforgeError(f"class data is available for {sorted(sources)}")
        pin = cover.pin_group_of(sources[args.classes])
        spin = cover.spin_group(pin)
        table = cover.conjugacy_classes(spin)
        _emit(args, {}, text=cover.pinor_class_csv(spin, table))
        return
    if args.table:
        table = reptheory.character_table(args.table)
        _emit(args, {}, text=reptheory.character_table_csv(table))
        return
    dec = reptheory.solid_decomposition(args.solid)
    names = {"G1": "Γ1", "G3": "Γ3", "G3p": "Γ3p", "G4": "Γ4", "G5": "Γ5"}
    payload = {names[k]: v for k, v in dec.multiplicities.items()}
    _emit(args, payload)


def cmd_mckay(args) -> None:
    graph = mckay.mckay_graph(args.group)
    payload = {
        "group": args.group,
        "nodes": [[n, d] for n, d in graph.nodes],
        "adjacency": [list(r) for r in graph.adjacency],
        "affine_match": mckay.match_affine(graph),
        "marks_are_kernel": mckay.marks_kernel_check(graph),
    }
    if args.dot:
        _write(args.dot, mckay.mckay_dot(graph))
    _emit(args, payload)


def cmd_hamilton(args) -> None:
    if args.graph_file:
        with open(args.graph_file) as fh:
            body = fh.read()
        try:
            data = json.loads(body)
            g = hamilton.PolyGraph.from_edges(data["n"], data["edges"])
        except json.JSONDecodeError:
            # plain edge-list text: one "a b" pair per line
            edges = [tuple(int(x) for x in line.split()) for line in body.splitlines() if line.strip()]
            n = max(max(e) for e in edges) + 1
            g = hamilton.PolyGraph.from_edges(n, edges)
    else:
        g = hamilton.named_graph(args.graph)
    if args.paths:
        count = hamilton.enumerate_hamiltonian_paths(g, args.start, args.end)
        _emit(args, {"graph": args.graph or args.graph_file, "paths": count,
                     "start": args.start, "end": args.end})
        return
    count, reps = hamilton.enumerate_hamiltonian_cycles(g, quotient_symmetry=args.quotient)
    payload = {
        "graph": args.graph or args.graph_file,
        "cycles": count,
        "quotient": args.quotient,
        "representatives": [list(r) for r in reps[: args.max_reps]],
    }
    _emit(args, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootforge",
        description="Root systems, Clifford double covers and icosahedral point arrays",
    )
    parser.add_argument("--stamp", action="store_true", help="include a timestamp in the output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="catalog simple roots and their reflection closure")
    p.add_argument("--type", required=True)
    p.add_argument("--backend", choices=["exact", "float"], default="exact")
    p.add_argument("--out")
    p.add_argument("--diagram-out", dest="diagram_out")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("exponents", help="Coxeter number and exponents")
    p.add_argument("--type", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exponents)

    p = sub.add_parser("induce", help="3D to 4D spinor induction")
    p.add_argument("--from", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("e8", help="E8 from the H3 pinors")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--gram-csv", dest="gram_csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_e8)

    p = sub.add_parser("affine", help="point arrays and projected affine roots")
    p.add_argument("--group", default="H3")
    p.add_argument("--axis", default="5fold")
    p.add_argument("--len", type=float, default=1.0)
    p.add_argument("--project", choices=["A4", "D6", "E8"])
    p.add_argument("--csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_affine)

    p = sub.add_parser("fullerene", help="carbon onion shells")
    p.add_argument("--start", choices=list(affine.FULLERENE_STARTS), required=True)
    p.add_argument("--shells", type=int, default=2)
    p.add_argument("--off-prefix", dest="off_prefix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fullerene)

    p = sub.add_parser("solids", help="icosahedral solid catalog")
    p.add_argument("--name", required=True)
    p.add_argument("--off")
    p.add_argument("--dual-off", dest="dual_off")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solids)

    p = sub.add_parser("chars", help="character tables, classes and decompositions")
    p.add_argument("--solid")
    p.add_argument("--table", choices=["A5", "2I"])
    p.add_argument("--classes", choices=["2T", "2O", "2I"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("mckay", help="McKay graphs and ADE matching")
    p.add_argument("--group", required=True)
    p.add_argument("--dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mckay)

    p = sub.add_parser("hamilton", help="Hamiltonian cycle/path enumeration")
    p.add_argument("--graph")
    p.add_argument("--graph-file", dest="graph_file")
    p.add_argument("--paths", action="store_true")
    p.add_argument("--start", type=int)
    p.add_argument("--end", type=int)
    p.add_argument("--quotient", action="store_true")
    p.add_argument("--max-reps", dest="max_reps", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hamilton)

    return parser


def main(argv=None) -> int:
    threads = os.environ.get("ROOTFORGE_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"rootforge: invalid ROOTFORGE_THREADS={threads!r}", file=sys.stderr)
            return 2
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "hamilton" and not (args.graph or args.graph_file):
        parser.error("hamilton needs --graph or --graph-file")
    if args.command == "chars" and not (args.solid or args.table or args.classes):
        parser.error("chars needs --solid, --table or --classes")
    try:
        args.func(args)
    except RootforgeError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
