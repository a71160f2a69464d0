"""Menger curvature of metric triangles and the derived edge/vertex sums.

The Euclidean value is the Heron-type quotient ``abc / (4 sqrt(p(p-a)(p-b)(p-c)))``
as written in the usual network formulation, which is the circumradius of the
triangle. The hyperbolic and spherical quotients are used in the matching
orientation (``tanh R`` and ``tan R``), so all three agree for small triangles
and order as hyperbolic < Euclidean < spherical. ``inverse_radius=True``
switches all three to the reciprocal orientation (``1/R``, ``1/tanh R``,
``1/tan R``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycles import Cycle, triangles_at_edge, triangles_at_vertex
from .errors import DomainError, InputError
from .graph import Graph

GEOMETRIES = ("euclidean", "hyperbolic", "spherical")


@dataclass(frozen=True)
class TriangleGeom:
    """Side lengths of a metric triangle; the strict triangle inequality must hold."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) <= 0:
            raise DomainError(f"side lengths must be positive: {(a, b, c)}")
        if not (a < b + c and b < a + c and c < a + b):
            raise DomainError(f"triangle inequality violated: {(a, b, c)}")

    @property
    def p(self):
        return (self.a + self.b + self.c) / 2


@dataclass(frozen=True)
class GeometryModel:
    kind: str = "euclidean"
    keep_classical_constants: bool = True
    inverse_radius: bool = False

    def __post_init__(self):
        if self.kind not in GEOMETRIES:
            raise InputError(f"unknown geometry {self.kind!r}; expected one of {GEOMETRIES}")


def _heron(f, t):
    p = t.p
    return f(p) * f(p - t.a) * f(p - t.b) * f(p - t.c)


def menger_curvature(t: TriangleGeom, m: GeometryModel = GeometryModel()) -> float:
    """Menger curvature of ``t`` in background geometry ``m``.

    With ``keep_classical_constants=False`` the factor 4 (Euclidean) or 2
    (hyperbolic, spherical) is dropped from the printed denominators.
    """
    if m.kind == "euclidean":
        const = 4.0 if m.keep_classical_constants else 1.0
        area_term = math.sqrt(_heron(lambda x: x, t))
        value = t.a * t.b * t.c / (const * area_term)
        return 1.0 / value if m.inverse_radius else value

    const = 2.0 if m.keep_classical_constants else 1.0
    if m.kind == "hyperbolic":
        f = math.sinh
    else:
        f = math.sin
        args = (t.p, t.p - t.a, t.p - t.b, t.p - t.c, t.a / 2, t.b / 2, t.c / 2)
        if not all(0 < x < math.pi for x in args):
            raise DomainError(
                f"spherical triangle {(t.a, t.b, t.c)} outside the validity domain p < pi"
            )
    printed = math.sqrt(_heron(f, t)) / (const * f(t.a / 2) * f(t.b / 2) * f(t.c / 2))
    return printed if m.inverse_radius else 1.0 / printed


def directed_sign(g: Graph, c: Cycle) -> int:
    """Orientation sign of an anchored cycle on a (possibly) directed graph.

    The boundary is walked with the anchor traversed tail -> head and then
    back along the subtended path. Returns +1 if every directed edge agrees
    with this walk, -1 if every one disagrees, 0 otherwise. Undirected edges
    are neutral, so an undirected cycle gets +1.
    """
    if c.anchor is None:
        raise ValueError("directed sign needs an anchored cycle")
    vs = c.vertices
    walk = [(vs[0], vs[-1])] + [(vs[k], vs[k - 1]) for k in range(len(vs) - 1, 0, -1)]
    dirs = {g.direction(x, y) for x, y in walk}
    if 1 in dirs and -1 in dirs:
        return 0
    return -1 if -1 in dirs else 1


def directed_sign_triangle(g: Graph, t: Cycle) -> int:
    if t.length != 3:
        raise ValueError("expected a triangle")
    return directed_sign(g, t)


def _triangle_curvature(g, vs, m):
    a = g.weight(vs[0], vs[1])
    b = g.weight(vs[1], vs[2])
    c = g.weight(vs[0], vs[2])
    try:
        return menger_curvature(TriangleGeom(a, b, c), m)
    except DomainError as exc:
        names = "-".join(g.label(i) for i in vs)
        raise DomainError(f"triangle {names}: {exc}") from None


def menger_ricci_edge(g: Graph, e, m: GeometryModel = GeometryModel(), *, reverse_sign=False):
    """Signed sum of Menger curvatures of the triangles on edge ``e``."""
    flip = -1 if reverse_sign else 1
    total = 0.0
    for t in triangles_at_edge(g, e):
        total += flip * directed_sign(g, t) * _triangle_curvature(g, t.vertices, m)
    return total


def _vertex_anchor(g, i, vs):
    # the triangle's edge at i toward its smaller other vertex
    j = min(x for x in vs if x != i)
    a, b = g.oriented(i, j)
    w = next(x for x in vs if x not in (a, b))
    chord = g.weight(a, b)
    return Cycle((a, w, b), (a, b), chord + g.weight(a, w) + g.weight(w, b), chord)


def menger_scalar_vertex(
    g: Graph, v, m: GeometryModel = GeometryModel(), *, edge_sum=False, reverse_sign=False
):
    """Scalar Menger curvature at ``v``.

    By default the sum of signed triangle curvatures over the triangles at
    ``v``. ``edge_sum=True`` instead sums the edge values over the edges at
    ``v``, which counts every triangle twice.
    """
    i = g.index(v)
    if edge_sum:
        return sum(
            menger_ricci_edge(g, (g.label(i), g.label(j)), m, reverse_sign=reverse_sign)
            for j in g.neighbors(i)
        )
    flip = -1 if reverse_sign else 1
    total = 0.0
    for t in triangles_at_vertex(g, v):
        s = flip * directed_sign(g, _vertex_anchor(g, i, t.vertices))
        total += s * _triangle_curvature(g, t.vertices, m)
    return total
