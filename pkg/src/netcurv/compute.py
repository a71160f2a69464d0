"""Whole-graph curvature fields: configuration, evaluation and output.

Elements (edges, vertices, vertex pairs or triangles) are evaluated by an
order-preserving parallel map, and every row is formatted inside the worker,
so the output does not depend on the number of workers.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import asdict, dataclass, field

from . import baselines, haantjes, menger, triangles
from .cycles import CellAdmission, all_triangles, cells_at
from .errors import InputError, InvariantError
from .graph import Graph
from .haantjes import FaceWeightScheme, HaantjesOptions
from .menger import GeometryModel

EDGE_MEASURES = (
    "menger-ricci",
    "haantjes-ricci",
    "haantjes-sectional",
    "forman-reduced",
    "forman-augmented",
    "ollivier",
)
VERTEX_MEASURES = ("menger-scalar", "haantjes-scalar")
PAIR_MEASURES = ("directional-ricci",)
TRIANGLE_MEASURES = ("excess", "aspect-ratio")
MEASURES = EDGE_MEASURES + VERTEX_MEASURES + PAIR_MEASURES + TRIANGLE_MEASURES
FORMATS = ("csv", "json")


def fmt(x):
    """12 significant digits, with negative zero folded to zero."""
    s = format(x, ".12g")
    return "0" if s == "-0" else s


@dataclass(frozen=True)
class ComputeConfig:
    measure: str = "haantjes-ricci"
    geometry: GeometryModel = GeometryModel()
    admission: CellAdmission = CellAdmission()
    face_scheme: FaceWeightScheme = FaceWeightScheme()
    reverse_sign: bool = False
    literal_face_sign: bool = False
    edge_sum: bool = False
    idleness: float = 0.0
    bound: float = 5
    weighted_bound: bool = False
    output_format: str = "csv"
    components: bool = False
    pairs: tuple = field(default=())

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise InputError(f"unknown measure {self.measure!r}; expected one of {MEASURES}")
        if self.output_format not in FORMATS:
            raise InputError(f"unknown output format {self.output_format!r}")
        if not 0.0 <= self.idleness <= 1.0:
            raise InputError("idleness must lie in [0, 1]")
        if self.pairs and self.measure not in PAIR_MEASURES:
            raise InputError("explicit pairs only apply to directional-ricci")

    def header(self):
        """Every knob as ``key=value`` lines, in a fixed order."""
        lines = [
            f"measure={self.measure}",
            f"geometry={self.geometry.kind}",
            f"keep_classical_constants={str(self.geometry.keep_classical_constants).lower()}",
            f"inverse_radius={str(self.geometry.inverse_radius).lower()}",
            f"admission={self.admission.mode}",
            f"max_length={self.admission.max_length}",
            f"face_scheme={self.face_scheme.mode}",
            f"face_table_entries={len(self.face_scheme.table)}",
            f"reverse_sign={str(self.reverse_sign).lower()}",
            f"literal_face_sign={str(self.literal_face_sign).lower()}",
            f"edge_sum={str(self.edge_sum).lower()}",
            f"idleness={fmt(self.idleness)}",
            f"bound={fmt(self.bound)}",
            f"weighted_bound={str(self.weighted_bound).lower()}",
            f"components={str(self.components).lower()}",
            f"pairs={';'.join('-'.join(p) for p in self.pairs) or 'all-edges'}",
        ]
        return lines

    def as_dict(self):
        d = asdict(self)
        d["face_scheme"] = {"mode": self.face_scheme.mode, "entries": len(self.face_scheme.table)}
        d["pairs"] = [list(p) for p in self.pairs]
        return d


def elements(g: Graph, cfg: ComputeConfig):
    """Index tuples of the elements a measure is evaluated on, in output order."""
    if cfg.measure in EDGE_MEASURES:
        return [g.oriented(i, j) for i, j in g.edges()]
    if cfg.measure in VERTEX_MEASURES:
        return [(i,) for i in range(g.n)]
    if cfg.measure in TRIANGLE_MEASURES:
        return all_triangles(g)
    if cfg.pairs:
        out = []
        for u, v in cfg.pairs:
            s, t = g.index(u), g.index(v)
            if s == t:
                raise InputError(f"pair {u}-{v} needs two distinct vertices")
            out.append((s, t))
        return out
    return [g.oriented(i, j) for i, j in g.edges()]


def key_columns(cfg: ComputeConfig):
    if cfg.measure in VERTEX_MEASURES:
        return ["vertex"]
    if cfg.measure in TRIANGLE_MEASURES:
        return ["u", "v", "w"]
    if cfg.measure == "haantjes-sectional":
        return ["source", "target", "cell"]
    return ["source", "target"]


def _components(sc):
    return [
        {
            "cell": list(c.cell),
            "kappa": fmt(c.kappa),
            "sign": c.sign,
            "weight": fmt(c.weight),
            "value": fmt(c.value),
        }
        for c in sc.components
    ]


def _signed(sc):
    if not sc.check():
        raise InvariantError("curvature value differs from the sum of its components")
    return sc.value, _components(sc)


def evaluate(g: Graph, cfg: ComputeConfig, el):
    """Rows ``(keys, value, components)`` for one element."""
    names = [g.label(i) for i in el]
    m = cfg.measure
    opts = HaantjesOptions(cfg.admission, cfg.face_scheme, cfg.literal_face_sign, cfg.reverse_sign)
    if m == "haantjes-ricci":
        return [(names, *_signed(haantjes.ricci_idx(g, el[0], el[1], opts)))]
    if m == "haantjes-sectional":
        rows = []
        for c in cells_at(g, el[0], el[1], cfg.admission):
            comp = haantjes._contribution(
                g, c, cfg.face_scheme, cfg.literal_face_sign, cfg.reverse_sign
            )
            rows.append((names + ["-".join(comp.cell)], comp.value, []))
        return rows
    if m == "menger-ricci":
        return [(names, menger.menger_ricci_edge(g, names, cfg.geometry, reverse_sign=cfg.reverse_sign), [])]
    if m == "forman-reduced":
        return [(names, baselines._forman_reduced_idx(g, *el), [])]
    if m == "forman-augmented":
        return [(names, baselines._forman_augmented_idx(g, el[0], el[1], cfg.admission), [])]
    if m == "ollivier":
        return [(names, baselines._ollivier_idx(g, el[0], el[1], cfg.idleness), [])]
    if m == "menger-scalar":
        v = menger.menger_scalar_vertex(
            g, names[0], cfg.geometry, edge_sum=cfg.edge_sum, reverse_sign=cfg.reverse_sign
        )
        return [(names, v, [])]
    if m == "haantjes-scalar":
        sc = haantjes.haantjes_scalar_vertex(
            g,
            names[0],
            cfg.admission,
            cfg.face_scheme,
            literal_sign=cfg.literal_face_sign,
            reverse_sign=cfg.reverse_sign,
        )
        return [(names, *_signed(sc))]
    if m == "directional-ricci":
        sc = haantjes.directional_idx(
            g, el[0], el[1], cfg.bound, weighted=cfg.weighted_bound, reverse_sign=cfg.reverse_sign
        )
        return [(names, *_signed(sc))]
    sides = (g.weight(el[0], el[1]), g.weight(el[1], el[2]), g.weight(el[0], el[2]))
    if m == "excess":
        return [(names, triangles.excess(*sides), [])]
    return [(names, triangles.aspect_ratio(*sides), [])]


def _render(rows, cfg):
    out = []
    for keys, value, comps in rows:
        if cfg.output_format == "json":
            rec = {"element": keys, "value": fmt(value)}
            if cfg.components:
                rec["components"] = comps
            out.append(json.dumps(rec, sort_keys=True))
        else:
            cells = keys + [fmt(value)]
            if cfg.components:
                cells.append(";".join(f"{'-'.join(c['cell'])}:{c['kappa']}:{c['sign']}:{c['value']}" for c in comps))
            out.append(",".join(cells))
    return out


_STATE = {}


def _work(el):
    g, cfg = _STATE["graph"], _STATE["config"]
    return _render(evaluate(g, cfg, el), cfg)


def parallel_map(func, items, workers=1, chunksize=256):
    """Order-preserving map; forks ``workers`` processes when ``workers > 1``."""
    if workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        return list(pool.imap(func, items, chunksize))


def compute_rows(g: Graph, cfg: ComputeConfig, workers=1):
    """Rendered output lines for every element, in element order."""
    els = elements(g, cfg)
    _STATE["graph"], _STATE["config"] = g, cfg
    try:
        chunks = parallel_map(_work, els, workers)
    finally:
        _STATE.clear()
    return [line for chunk in chunks for line in chunk]


def render(g: Graph, cfg: ComputeConfig, workers=1, source="<graph>"):
    """Full output document (header + rows) as a single string."""
    rows = compute_rows(g, cfg, workers)
    if cfg.output_format == "json":
        doc_head = json.dumps(
            {"graph": {"source": source, "n": g.n, "m": g.m}, "config": cfg.as_dict()},
            sort_keys=True,
        )
        return "{\"header\":" + doc_head + ",\"rows\":[\n" + ",\n".join(rows) + "\n]}\n"
    head = ["# netcurv compute", f"# graph={source} n={g.n} m={g.m}"]
    head += [f"# {line}" for line in cfg.header()]
    cols = key_columns(cfg) + ["value"] + (["components"] if cfg.components else [])
    return "\n".join(head + [",".join(cols)] + rows) + "\n"
