"""Command-line front end: ``netcurv {generate,compute,table1,stats}``.

Exit codes: 0 success, 1 input error, 2 domain error, 3 internal invariant
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compute import MEASURES, ComputeConfig, fmt, render
from .cycles import MODES, CellAdmission
from .errors import DomainError, InputError, InvariantError
from .generators import KINDS, LatticeSpec, figure3_graph, generate_lattice
from .graph import load_graph, to_json
from .haantjes import FACE_MODES, FaceWeightScheme
from .menger import GEOMETRIES, GeometryModel
from .table1 import report
from .triangles import global_triangle_stats

MENGER_ONLY = ("geometry", "drop_constants", "inverse_radius")


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _face_scheme(args):
    table = {}
    if args.face_table:
        with open(args.face_table, encoding="utf-8") as fh:
            raw = json.load(fh)
        # {"a-b-c": 2.0, ...} keyed by canonical cell ids joined with '-'
        table = {tuple(k.split("-")): float(v) for k, v in raw.items()}
    return FaceWeightScheme(args.face_scheme, table)


def _config(args):
    menger_measure = args.measure.startswith("menger")
    for name in MENGER_ONLY:
        if getattr(args, name) not in (None, False) and not menger_measure:
            raise InputError(f"--{name.replace('_', '-')} only applies to Menger measures")
    if args.idleness is not None and args.measure != "ollivier":
        raise InputError("--idleness only applies to the ollivier measure")
    if args.edge_sum and args.measure != "menger-scalar":
        raise InputError("--edge-sum only applies to menger-scalar")
    pairs = tuple(tuple(p) for p in (args.pair or ()))
    return ComputeConfig(
        measure=args.measure,
        geometry=GeometryModel(
            args.geometry or "euclidean", not args.drop_constants, bool(args.inverse_radius)
        ),
        admission=CellAdmission(args.admission, args.max_length),
        face_scheme=_face_scheme(args),
        reverse_sign=args.reverse_sign,
        literal_face_sign=args.literal_face_sign,
        edge_sum=args.edge_sum,
        idleness=args.idleness if args.idleness is not None else 0.0,
        bound=args.bound,
        weighted_bound=args.weighted_bound,
        output_format=args.format,
        components=args.components,
        pairs=pairs,
    )


def cmd_compute(args):
    g = load_graph(args.graph, directed=args.directed, vertex_weights=args.vertex_weights)
    cfg = _config(args)
    _write(render(g, cfg, workers=args.workers, source=args.graph), args.output)


def cmd_generate(args):
    if args.figure3:
        g = figure3_graph(args.figure3)
    elif args.lattice:
        if not args.dims:
            raise InputError("--lattice needs --dims")
        g = generate_lattice(
            LatticeSpec(args.lattice, tuple(args.dims), not args.open, args.max_length)
        )
    else:
        raise InputError("choose --lattice or --figure3")
    _write(to_json(g) + "\n", args.output)


def cmd_table1(args):
    _write(report(), args.output)


def cmd_stats(args):
    g = load_graph(args.graph, directed=args.directed)
    st = global_triangle_stats(g)
    if st.empty:
        text = "triangles=0\nmax_excess=\nmin_aspect_ratio=\n"
    else:
        text = (
            f"triangles={st.count}\n"
            f"max_excess={fmt(st.max_excess)} witness={'-'.join(st.argmax_excess)}\n"
            f"min_aspect_ratio={fmt(st.min_aspect_ratio)} witness={'-'.join(st.argmin_aspect_ratio)}\n"
        )
    _write(text, args.output)


def build_parser():
    p = argparse.ArgumentParser(prog="netcurv", description="Metric curvatures of networks.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a lattice or example graph as JSON")
    gen.add_argument("--lattice", choices=KINDS)
    gen.add_argument("--dims", type=int, nargs="+")
    gen.add_argument("--open", action="store_true", help="open patch instead of a torus")
    gen.add_argument("--max-length", type=int, default=None, help="wrap-safety cycle length")
    gen.add_argument("--figure3", choices=("a", "b", "c"))
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    comp = sub.add_parser("compute", help="compute a curvature field")
    comp.add_argument("graph", help="graph file (.json document or CSV edge list)")
    comp.add_argument("--measure", choices=MEASURES, default="haantjes-ricci")
    comp.add_argument("--directed", action="store_true", help="orient CSV edges source -> target")
    comp.add_argument("--vertex-weights", help="CSV table 'vertex,weight'")
    comp.add_argument("--geometry", choices=GEOMETRIES)
    comp.add_argument("--drop-constants", action="store_true")
    comp.add_argument("--inverse-radius", action="store_true")
    comp.add_argument("--admission", choices=MODES, default="chordless")
    comp.add_argument("--max-length", type=int, default=5)
    comp.add_argument("--face-scheme", choices=FACE_MODES, default="unit")
    comp.add_argument("--face-table", help="JSON object of custom face weights")
    comp.add_argument("--reverse-sign", action="store_true", help="swap the +1/-1 orientation signs")
    comp.add_argument("--literal-face-sign", action="store_true", help="negate weighted sectional curvatures")
    comp.add_argument("--edge-sum", action="store_true", help="menger-scalar as a sum over edges")
    comp.add_argument("--idleness", type=float)
    comp.add_argument("--bound", type=float, default=5, help="cycle-length bound for directional-ricci")
    comp.add_argument("--weighted-bound", action="store_true")
    comp.add_argument("--pair", nargs=2, action="append", metavar=("U", "V"))
    comp.add_argument("--format", choices=("csv", "json"), default="csv")
    comp.add_argument("--components", action="store_true")
    comp.add_argument("--workers", type=int, default=1)
    comp.add_argument("-o", "--output")
    comp.set_defaults(func=cmd_compute)

    t1 = sub.add_parser("table1", help="curvature comparison on the regular tessellations")
    t1.add_argument("-o", "--output")
    t1.set_defaults(func=cmd_table1)

    st = sub.add_parser("stats", help="global maximal excess / minimal aspect ratio")
    st.add_argument("graph")
    st.add_argument("--directed", action="store_true")
    st.add_argument("-o", "--output")
    st.set_defaults(func=cmd_stats)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DomainError as exc:
        print(f"netcurv: domain error: {exc}", file=sys.stderr)
        return 2
    except (InputError, OSError) as exc:
        print(f"netcurv: input error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"netcurv: internal invariant failed: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
