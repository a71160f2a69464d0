"""Periodic tessellation graphs and small directed example graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph

KINDS = ("triangular", "square", "hexagonal", "cubic")
FACE_LENGTH = {"triangular": 3, "square": 4, "hexagonal": 6, "cubic": 4}
DEGREE = {"triangular": 6, "square": 4, "hexagonal": 3, "cubic": 6}


@dataclass(frozen=True)
class LatticeSpec:
    """A torus (or open patch) of one of the regular tessellations.

    ``max_cell_length`` is the longest cycle the caller intends to enumerate;
    every periodic dimension must exceed it so no short cycle wraps around the
    torus. It defaults to the face length of the lattice.
    """

    kind: str
    dims: tuple
    periodic: bool = True
    max_cell_length: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown lattice {self.kind!r}; expected one of {KINDS}")
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        want = 3 if self.kind == "cubic" else 2
        if len(dims) != want:
            raise InputError(f"{self.kind} lattice needs {want} dimensions, got {len(dims)}")
        if min(dims) < 1:
            raise InputError("lattice dimensions must be positive")
        if self.periodic:
            L = self.cell_length
            if min(dims) < L + 1:
                raise InputError(
                    f"periodic {self.kind} lattice needs every dimension >= {L + 1} "
                    f"for cycles up to length {L}; got {dims}"
                )
            if self.kind == "hexagonal" and any(d % 2 for d in dims):
                raise InputError("periodic hexagonal lattice needs even dimensions")

    @property
    def cell_length(self):
        return self.max_cell_length or FACE_LENGTH[self.kind]


def _name(*xs):
    return "_".join(f"{x:03d}" for x in xs)


def _lattice_edges(spec):
    dims = spec.dims
    per = spec.periodic

    def step(coord, delta):
        out = []
        for x, dx, n in zip(coord, delta, dims):
            y = x + dx
            if per:
                y %= n
            elif not 0 <= y < n:
                return None
            out.append(y)
        return tuple(out)

    if spec.kind == "triangular":
        deltas = [(1, 0), (0, 1), (1, -1)]
    elif spec.kind == "square":
        deltas = [(1, 0), (0, 1)]
    elif spec.kind == "cubic":
        deltas = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    else:
        deltas = None

    coords = [(i, j) for i in range(dims[0]) for j in range(dims[1])]
    if spec.kind == "cubic":
        coords = [(i, j, k) for i in range(dims[0]) for j in range(dims[1]) for k in range(dims[2])]

    edges = set()
    for c in coords:
        if deltas is not None:
            steps = deltas
        else:
            # brick-wall honeycomb: horizontal bonds everywhere, vertical bond
            # upward from sites with even i + j
            steps = [(1, 0)] + ([(0, 1)] if (c[0] + c[1]) % 2 == 0 else [])
        for d in steps:
            t = step(c, d)
            if t is None or t == c:
                continue
            edges.add((c, t) if c < t else (t, c))
    return coords, sorted(edges)


def generate_lattice(spec: LatticeSpec) -> Graph:
    """Unit-weight undirected graph of the tessellation described by ``spec``.

    Vertices are named by zero-padded coordinates (``"003_011"``). Open
    patches record their boundary edges (edges with an endpoint of reduced
    degree) in ``graph.meta["boundary_edges"]``.
    """
    coords, edges = _lattice_edges(spec)
    meta = {"lattice": spec.kind, "dims": list(spec.dims), "periodic": spec.periodic}
    g = Graph([_name(*c) for c in coords], [(_name(*a), _name(*b)) for a, b in edges])
    if not spec.periodic:
        full = DEGREE[spec.kind]
        meta["boundary_edges"] = [
            [g.label(i), g.label(j)]
            for i, j in g.edges()
            if g.degree(i) < full or g.degree(j) < full
        ]
    g.meta = meta
    return g


FIGURE3 = {
    # one edge u->v shared by three coherent triangles
    "a": [("u", "v"), ("v", "w1"), ("w1", "u"), ("v", "w2"), ("w2", "u"), ("v", "w3"), ("w3", "u")],
    # one coherent triangle
    "b": [("u", "v"), ("v", "w"), ("w", "u")],
    # one edge u->v shared by two coherent triangles and one coherent quadrilateral
    "c": [
        ("u", "v"),
        ("v", "w1"),
        ("w1", "u"),
        ("v", "w2"),
        ("w2", "u"),
        ("v", "x"),
        ("x", "y"),
        ("y", "u"),
    ],
}


def figure3_graph(which: str) -> Graph:
    """Directed unit-weight example graphs; the shared edge is ``u -> v``."""
    try:
        edges = FIGURE3[which]
    except KeyError:
        raise InputError(f"unknown example {which!r}; expected a, b or c") from None
    g = Graph((), [(a, b, 1.0, True) for a, b in edges])
    g.meta = {"example": which, "anchor": ["u", "v"]}
    return g


def erdos_renyi(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform random simple graph with ``n`` vertices and ``m`` edges."""
    if m > n * (n - 1) // 2:
        raise InputError("too many edges for a simple graph")
    rng = random.Random(seed)
    width = len(str(n - 1))
    edges = set()
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    names = [f"v{i:0{width}d}" for i in range(n)]
    g = Graph(names, [(names[a], names[b]) for a, b in sorted(edges)])
    g.meta = {"model": "gnm", "n": n, "m": m, "seed": seed}
    return g
