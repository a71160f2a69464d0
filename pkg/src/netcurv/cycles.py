"""Triangles, 2-cells through an edge, and alternative paths.

Every curvature in the package is a sum over cycles that pass through an
edge (or vertex). Enumeration is always local: cycles through an anchor edge
are found by joining short simple paths grown from both anchor endpoints,
never by enumerating all cycles of the graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, dijkstra, hop_distances, path_weight, _shortest_indices

MODES = ("chordless", "all-simple", "triangles-only")


@dataclass(frozen=True)
class CellAdmission:
    """Which cycles count as 2-cells.

    ``chordless`` keeps induced cycles only, ``all-simple`` keeps every simple
    cycle, ``triangles-only`` keeps 3-cycles. ``max_length`` bounds the number
    of boundary edges.
    """

    mode: str = "chordless"
    max_length: int = 5

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown admission mode {self.mode!r}; expected one of {MODES}")
        if int(self.max_length) != self.max_length or self.max_length < 3:
            raise InputError(f"max_length must be an integer >= 3, got {self.max_length!r}")

    @property
    def effective_length(self):
        return 3 if self.mode == "triangles-only" else self.max_length


@dataclass(frozen=True)
class Cycle:
    """A simple cycle of vertex indices.

    For an anchored cycle ``anchor == (vertices[0], vertices[-1])`` is the
    chord edge, traversed tail to head, and ``vertices`` is the path that the
    chord subtends. Unanchored cycles are stored in canonical rotation.
    """

    vertices: tuple
    anchor: tuple | None = None
    perimeter: float = 0.0
    chord_weight: float | None = None

    @property
    def length(self):
        """Number of boundary edges (equal to the number of vertices)."""
        return len(self.vertices)

    @property
    def path_weight(self):
        if self.chord_weight is None:
            raise ValueError("unanchored cycle has no chord")
        return self.perimeter - self.chord_weight

    def edges(self):
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def canonical(self):
        """Vertex tuple rotated to the smallest index, heading to its smaller neighbor."""
        return canonical_cycle(self.vertices)

    def named(self, g: Graph):
        return tuple(g.label(i) for i in self.vertices)


def canonical_cycle(vs):
    vs = tuple(vs)
    k = vs.index(min(vs))
    rot = vs[k:] + vs[:k]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def is_cycle_of(g: Graph, vs) -> bool:
    """True if ``vs`` is a simple cycle (length >= 3) of ``g``."""
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    return all(g.has_edge(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs)))


def is_chordless(g: Graph, vs) -> bool:
    members = set(vs)
    return all(len(g.neighbor_set(x) & members) == 2 for x in vs)


def _anchored(g, path):
    chord = g.weight(path[0], path[-1])
    return Cycle(tuple(path), (path[0], path[-1]), path_weight(g, path) + chord, chord)


def _half_paths(g, start, avoid, depth):
    """Simple paths leaving ``start`` grouped as ``levels[k][end] -> [paths]``."""
    levels = [None]
    frontier = [(start,)]
    for _ in range(depth):
        byend = {}
        nxt = []
        for p in frontier:
            for j in g.neighbors(p[-1]):
                if j == avoid or j in p:
                    continue
                q = p + (j,)
                nxt.append(q)
                byend.setdefault(j, []).append(q)
        levels.append(byend)
        frontier = nxt
    return levels


def paths_through(g: Graph, a: int, b: int, max_hops: int):
    """All simple ``a``-``b`` paths with 2..``max_hops`` edges.

    Meet in the middle: a path of ``k`` edges is split at position
    ``ceil(k/2)`` from ``a``, so each path is produced exactly once.
    """
    if max_hops < 2:
        return []
    da = (max_hops + 1) // 2
    db = max_hops // 2
    left = _half_paths(g, a, b, da)
    right = _half_paths(g, b, a, db)
    out = []
    for k in range(2, max_hops + 1):
        ka = (k + 1) // 2
        kb = k - ka
        lk, rk = left[ka], right[kb]
        if len(rk) < len(lk):
            ends = [x for x in rk if x in lk]
        else:
            ends = [x for x in lk if x in rk]
        for x in ends:
            for p in lk[x]:
                for q in rk[x]:
                    if any(y in p for y in q[:-1]):
                        continue
                    out.append(p + q[-2::-1])
    return out


def cells_at(g: Graph, a: int, b: int, admission: CellAdmission):
    """Index-level worker behind :func:`two_cells_at_edge`.

    ``(a, b)`` is the anchor in traversal order.
    """
    if not g.has_edge(a, b):
        raise InputError(f"no edge {g.label(a)}-{g.label(b)}")
    L = admission.effective_length
    if L == 3:
        paths = [(a, w, b) for w in sorted(g.neighbor_set(a) & g.neighbor_set(b))]
    else:
        paths = paths_through(g, a, b, L - 1)
        if admission.mode == "chordless":
            paths = [p for p in paths if len(p) == 3 or is_chordless(g, p)]
        paths.sort(key=lambda p: (len(p), p))
    return [_anchored(g, p) for p in paths]


def _anchor_of(g, e):
    u, v = e
    i, j = g.edge_index(u, v)
    return g.oriented(i, j)


def triangles_at_edge(g: Graph, e) -> list:
    """Triangles containing edge ``e = (u, v)``, anchored at ``e``.

    The anchor is traversed tail to head for a directed edge, smaller id
    first otherwise.
    """
    a, b = _anchor_of(g, e)
    return cells_at(g, a, b, CellAdmission("triangles-only", 3))


def triangles_at_vertex(g: Graph, v) -> list:
    """Triangles containing vertex ``v``, each once, in canonical form."""
    i = g.index(v)
    out = []
    nb = g.neighbors(i)
    for x_pos, x in enumerate(nb):
        nx_ = g.neighbor_set(x)
        for y in nb[x_pos + 1:]:
            if y in nx_:
                vs = tuple(sorted((i, x, y)))
                per = g.weight(i, x) + g.weight(x, y) + g.weight(i, y)
                out.append(Cycle(vs, None, per, None))
    out.sort(key=lambda c: c.vertices)
    return out


def all_triangles(g: Graph):
    """Every triangle of ``g`` as a sorted index triple, in sorted order."""
    out = []
    for i in range(g.n):
        nb = [x for x in g.neighbors(i) if x > i]
        for p, x in enumerate(nb):
            nx_ = g.neighbor_set(x)
            for y in nb[p + 1:]:
                if y in nx_:
                    out.append((i, x, y))
    return out


def two_cells_at_edge(g: Graph, e, admission: CellAdmission = CellAdmission()) -> list:
    """Admitted 2-cells through ``e``, each once, anchored at ``e``."""
    a, b = _anchor_of(g, e)
    return cells_at(g, a, b, admission)


def alternatives_idx(g: Graph, s: int, t: int, bound, *, weighted=False, pi0=None):
    """Index-level worker behind :func:`alternative_paths`; returns ``(pi0, paths)``."""
    if pi0 is None:
        pi0 = _shortest_indices(g, s, t)
        if pi0 is None:
            raise InputError(f"{g.label(s)} and {g.label(t)} are not connected")
    blocked = frozenset(pi0[1:-1])
    if weighted:
        budget = bound - path_weight(g, pi0)
        to_t = dijkstra(g, t, cutoff=budget, blocked=blocked)
    else:
        budget = bound - (len(pi0) - 1)
        to_t = hop_distances(g, t, int(budget), blocked)
    out = []
    if budget <= 0 or s not in to_t:
        return pi0, out

    def step_cost(i, j):
        return g.weight(i, j) if weighted else 1

    tol = 1e-12 * max(abs(bound), 1.0)
    stack = [((s,), 0)]
    while stack:
        path, used = stack.pop()
        cur = path[-1]
        if cur == t:
            if path != pi0:
                out.append(path)
            continue
        for j in g.neighbors(cur):
            if j in blocked or j in path:
                continue
            c = used + step_cost(cur, j)
            rest = to_t.get(j)
            if rest is None or c + rest > budget + tol:
                continue
            stack.append((path + (j,), c))
    out.sort(key=lambda p: (len(p), p))
    return pi0, out


def alternative_paths(g: Graph, u, v, bound=5, *, weighted=False) -> list:
    """Simple ``u``-``v`` paths internally disjoint from the shortest path.

    Each returned path closes an elementary cycle with the shortest path
    ``pi_0``. ``bound`` limits the length of that cycle: a hop count by
    default, total edge weight with ``weighted=True``. ``pi_0`` itself is
    not returned.
    """
    s, t = g.index(u), g.index(v)
    if s == t:
        raise InputError("alternative_paths needs two distinct vertices")
    _, paths = alternatives_idx(g, s, t, bound, weighted=weighted)
    return [tuple(g.label(i) for i in p) for p in paths]
