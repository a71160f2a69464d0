"""Graph model, ingestion/serialization and the path metric.

A :class:`Graph` is a simple undirected graph whose edges may additionally
carry a direction. Direction never changes which cycles exist; it only
contributes a sign to directed curvatures. Vertex ids are strings, mapped to
dense integer indices in sorted order, so every index-based tie-break is also
a lexicographic tie-break on the ids.
"""

from __future__ import annotations

import csv
import heapq
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InputError, ParseError

_TRUE = {"1", "true", "t", "yes", "y"}
_FALSE = {"0", "false", "f", "no", "n", ""}


def _check_weight(w, what):
    try:
        w = float(w)
    except (TypeError, ValueError):
        raise InputError(f"{what}: weight {w!r} is not a number") from None
    if not math.isfinite(w) or w <= 0:
        raise InputError(f"{what}: nonpositive weight {w!r}")
    return w


class Graph:
    """Immutable simple graph with positive edge/vertex weights.

    Parameters
    ----------
    vertices : iterable of str
        Vertex ids. Endpoints of ``edges`` are added automatically.
    edges : iterable of tuples
        ``(u, v)``, ``(u, v, weight)`` or ``(u, v, weight, directed)``. A
        directed edge is oriented ``u -> v``.
    vertex_weights : mapping, optional
        Vertex id -> positive weight. Missing vertices get weight 1.
    meta : mapping, optional
        Free-form JSON-serializable metadata (generators record their
        parameters here).
    """

    def __init__(self, vertices=(), edges=(), vertex_weights=None, meta=None):
        raw = []
        names = {str(v) for v in vertices}
        for item in edges:
            if len(item) < 2 or len(item) > 4:
                raise InputError(f"edge {item!r} must have 2 to 4 fields")
            u, v = str(item[0]), str(item[1])
            w = item[2] if len(item) > 2 and item[2] is not None else 1.0
            d = bool(item[3]) if len(item) > 3 else False
            raw.append((u, v, _check_weight(w, f"edge {u}-{v}"), d))
            names.add(u)
            names.add(v)

        self._labels = tuple(sorted(names))
        self._index = {name: i for i, name in enumerate(self._labels)}
        n = len(self._labels)
        nbrs = [set() for _ in range(n)]
        self._w = {}
        self._dir = {}
        for u, v, w, d in raw:
            if u == v:
                raise InputError(f"self-loop at {u!r}")
            i, j = self._index[u], self._index[v]
            key = (i, j) if i < j else (j, i)
            if key in self._w:
                raise InputError(f"duplicate edge {u}-{v}")
            self._w[key] = w
            self._dir[key] = 0 if not d else (1 if i < j else -1)
            nbrs[i].add(j)
            nbrs[j].add(i)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr = tuple(frozenset(s) for s in nbrs)
        self._edges = tuple(sorted(self._w))

        vw = dict(vertex_weights or {})
        self._vw = [1.0] * n
        for name, w in vw.items():
            name = str(name)
            if name not in self._index:
                raise InputError(f"vertex weight for unknown vertex {name!r}")
            self._vw[self._index[name]] = _check_weight(w, f"vertex {name}")
        self._vw = tuple(self._vw)
        self.meta = dict(meta or {})

    # -- basic queries -----------------------------------------------------

    @property
    def n(self):
        return len(self._labels)

    @property
    def m(self):
        return len(self._edges)

    @property
    def directed(self):
        return any(self._dir.values())

    @property
    def labels(self):
        return self._labels

    def index(self, v):
        """Index of vertex id ``v``; raises :class:`InputError` if unknown."""
        try:
            return self._index[str(v)]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def label(self, i):
        return self._labels[i]

    def edges(self):
        """All edges as ``(i, j)`` index pairs with ``i < j``, sorted."""
        return self._edges

    def neighbors(self, i):
        """Sorted neighbor indices of ``i`` in the underlying undirected graph."""
        return self._adj[i]

    def neighbor_set(self, i):
        return self._nbr[i]

    def degree(self, i):
        return len(self._adj[i])

    def has_edge(self, i, j):
        return j in self._nbr[i]

    def weight(self, i, j):
        return self._w[(i, j) if i < j else (j, i)]

    def vertex_weight(self, i):
        return self._vw[i]

    def direction(self, i, j):
        """+1 if the edge is oriented ``i -> j``, -1 if ``j -> i``, 0 if undirected."""
        d = self._dir[(i, j) if i < j else (j, i)]
        return d if i < j else -d

    def edge_index(self, u, v):
        """Index pair ``(i, j)``, ``i < j``, of the edge between ids ``u`` and ``v``."""
        i, j = self.index(u), self.index(v)
        if not self.has_edge(i, j):
            raise InputError(f"no edge {u}-{v}")
        return (i, j) if i < j else (j, i)

    def oriented(self, i, j):
        """The edge ``{i, j}`` in its traversal order: tail first if directed."""
        return (j, i) if self.direction(i, j) < 0 else (i, j)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._labels == other._labels
            and self._w == other._w
            and self._dir == other._dir
            and self._vw == other._vw
            and self.meta == other.meta
        )

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"<Graph {kind} n={self.n} m={self.m}>"


@dataclass(frozen=True)
class PathMetricResult:
    """Length and realizing vertex sequence of a shortest path.

    An unreachable pair is represented by ``length = inf`` and an empty path.
    """

    length: float
    path: tuple = field(default=())

    @property
    def reachable(self):
        return math.isfinite(self.length)

    @property
    def hops(self):
        return max(len(self.path) - 1, 0)


UNREACHABLE = PathMetricResult(math.inf, ())


# -- ingestion ---------------------------------------------------------------


def _parse_bool(text, line):
    t = text.strip().lower()
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise ParseError(f"bad directed marker {text!r}", line)


def parse_vertex_weights(text):
    """Parse a ``vertex,weight`` CSV table into a dict."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header[:2]] != ["vertex", "weight"]:
        raise ParseError("vertex-weight table needs header 'vertex,weight'", 1)
    out = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(f"expected 2 columns, got {len(row)}", lineno)
        name = row[0].strip()
        try:
            out[name] = _check_weight(row[1].strip(), f"vertex {name}")
        except InputError as exc:
            raise ParseError(str(exc), lineno) from None
    return out


def parse_edge_list(text, *, directed=False, vertex_weights=None, header=True):
    """Build a :class:`Graph` from CSV text.

    The header is ``source,target[,weight][,directed]``. If the text has no
    header row (``header=False``, or the first row is not a recognised
    header), columns are taken positionally as source, target, weight.
    With ``directed=True`` every edge is oriented source -> target unless its
    ``directed`` column says otherwise.

    Errors carry the offending line number.
    """
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    cols = ["source", "target", "weight"]
    start = 0
    if rows and header:
        first = [c.strip().lower() for c in rows[0]]
        if first[:2] == ["source", "target"]:
            cols = first
            start = 1
            unknown = set(cols) - {"source", "target", "weight", "directed"}
            if unknown:
                raise ParseError(f"unknown columns {sorted(unknown)}", 1)
    edges = []
    seen = set()
    vertices = set()
    for k, row in enumerate(rows[start:], start=start + 1):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) < 2 or len(row) > len(cols):
            raise ParseError(f"expected 2 to {len(cols)} columns, got {len(row)}", k)
        rec = dict(zip(cols, (c.strip() for c in row)))
        u, v = rec["source"], rec["target"]
        if not u or not v:
            raise ParseError("empty vertex id", k)
        if u == v:
            raise ParseError(f"self-loop at {u!r}", k)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {u}-{v}", k)
        seen.add(key)
        w = rec.get("weight", "")
        try:
            w = _check_weight(w, f"edge {u}-{v}") if w != "" else 1.0
        except InputError as exc:
            raise ParseError(str(exc).split(": ", 1)[-1], k) from None
        d = _parse_bool(rec["directed"], k) if rec.get("directed", "") != "" else directed
        vertices.update((u, v))
        edges.append((u, v, w, d))
    if isinstance(vertex_weights, str):
        vertex_weights = parse_vertex_weights(vertex_weights)
    return Graph(vertices, edges, vertex_weights)


def graph_from_dict(doc: Mapping) -> Graph:
    """Build a graph from the JSON document structure."""
    if not isinstance(doc, Mapping) or "edges" not in doc:
        raise InputError("graph document needs an 'edges' list")
    edges = []
    for k, e in enumerate(doc["edges"]):
        try:
            edges.append((e["u"], e["v"], e.get("w", 1.0), bool(e.get("dir", False))))
        except (KeyError, TypeError, AttributeError):
            raise InputError(f"edge #{k} must be an object with 'u' and 'v'") from None
    return Graph(doc.get("vertices", ()), edges, doc.get("vertex_weights"), doc.get("meta"))


def parse_json(text) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return graph_from_dict(doc)


def graph_to_dict(g: Graph) -> dict:
    edges = []
    for i, j in g.edges():
        a, b = g.oriented(i, j)
        edges.append(
            {"u": g.label(a), "v": g.label(b), "w": g.weight(i, j), "dir": g.direction(i, j) != 0}
        )
    doc = {
        "vertices": list(g.labels),
        "edges": edges,
        "vertex_weights": {
            g.label(i): g.vertex_weight(i) for i in range(g.n) if g.vertex_weight(i) != 1.0
        },
    }
    if g.meta:
        doc["meta"] = g.meta
    return doc


def to_json(g: Graph) -> str:
    """Canonical JSON: sorted keys, sorted vertices and edges."""
    return json.dumps(graph_to_dict(g), sort_keys=True, separators=(",", ":"))


def load_graph(path, *, directed=False, vertex_weights=None) -> Graph:
    """Read a ``.json`` graph document or a CSV edge list from disk."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).lower().endswith(".json"):
        return parse_json(text)
    vw = None
    if vertex_weights is not None:
        with open(vertex_weights, encoding="utf-8") as fh:
            vw = parse_vertex_weights(fh.read())
    return parse_edge_list(text, directed=directed, vertex_weights=vw)


# -- path metric -------------------------------------------------------------


def _arcs(g, i, respect, reverse):
    for j in g.neighbors(i):
        if respect:
            d = g.direction(i, j)
            # forward search may only leave i along i->j; reverse search follows j->i
            if (d < 0 and not reverse) or (d > 0 and reverse):
                continue
        yield j, g.weight(i, j)


def dijkstra(
    g: Graph, source: int, *, cutoff=None, respect_direction=False, reverse=False, blocked=frozenset()
):
    """Distances from index ``source`` to every reachable index (dict).

    ``cutoff`` stops the search beyond that distance; vertices in ``blocked``
    are never entered.
    """
    dist = {source: 0.0}
    done = set()
    heap = [(0.0, source)]
    while heap:
        d, i = heapq.heappop(heap)
        if i in done:
            continue
        done.add(i)
        for j, w in _arcs(g, i, respect_direction, reverse):
            if j in blocked:
                continue
            nd = d + w
            if cutoff is not None and nd > cutoff:
                continue
            if nd < dist.get(j, math.inf):
                dist[j] = nd
                heapq.heappush(heap, (nd, j))
    return dist


def hop_distances(g: Graph, source: int, radius: int, blocked=frozenset()):
    """BFS hop distances from ``source`` up to ``radius``, avoiding ``blocked``."""
    dist = {source: 0}
    frontier = [source]
    for r in range(1, radius + 1):
        nxt = []
        for i in frontier:
            for j in g.neighbors(i):
                if j not in dist and j not in blocked:
                    dist[j] = r
                    nxt.append(j)
        frontier = nxt
        if not frontier:
            break
    return dist


def _shortest_indices(g, s, t, respect_direction=False):
    to_t = dijkstra(g, t, respect_direction=respect_direction, reverse=True)
    if s not in to_t:
        return None
    total = to_t[s]
    tol = 1e-12 * max(total, 1.0)
    path = [s]
    cur = s
    while cur != t:
        for j, w in _arcs(g, cur, respect_direction, False):
            if j in to_t and abs(w + to_t[j] - to_t[cur]) <= tol:
                path.append(j)
                cur = j
                break
        else:  # pragma: no cover - guarded by the Dijkstra invariant
            raise RuntimeError("shortest path reconstruction failed")
    return tuple(path)


def path_weight(g: Graph, path) -> float:
    return sum(g.weight(a, b) for a, b in zip(path, path[1:]))


def shortest_path(g: Graph, u, v, *, respect_direction=False) -> PathMetricResult:
    """Minimum-weight path between vertex ids ``u`` and ``v``.

    Ties are broken toward the lexicographically smallest vertex sequence.
    The search runs on the underlying undirected graph unless
    ``respect_direction`` is set. Unreachable pairs yield ``UNREACHABLE``.
    """
    s, t = g.index(u), g.index(v)
    if s == t:
        raise InputError("shortest_path needs two distinct vertices")
    path = _shortest_indices(g, s, t, respect_direction)
    if path is None:
        return UNREACHABLE
    return PathMetricResult(path_weight(g, path), tuple(g.label(i) for i in path))
