"""Per-triangle Haantjes curvature, excess and aspect ratio, plus global extremes."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycles import all_triangles
from .errors import DomainError, InputError
from .graph import Graph


def _positive(*xs):
    if min(xs) <= 0:
        raise InputError(f"side lengths must be positive: {xs}")


def triangle_haantjes(duv, dvw, duw):
    """Haantjes curvature of the path u-v-w against the chord ``duw``.

    Degenerate triangles (``duv + dvw == duw``) give 0.
    """
    _positive(duv, dvw, duw)
    num = duv + dvw - duw
    if num < 0:
        raise DomainError(f"triangle inequality violated: {(duv, dvw, duw)}")
    return math.sqrt(num / duw**3)


def excess(duv, dvw, duw):
    """Largest value of (sum of two sides - third side) over the three labelings."""
    _positive(duv, dvw, duw)
    return max(duv + dvw - duw, dvw + duw - duv, duw + duv - dvw)


def diameter(duv, dvw, duw):
    return max(duv, dvw, duw)


def aspect_ratio(duv, dvw, duw):
    return excess(duv, dvw, duw) / diameter(duv, dvw, duw)


@dataclass(frozen=True)
class TriangleStats:
    kappa_h: float
    excess: float
    aspect_ratio: float
    diameter: float


def triangle_stats(duv, dvw, duw) -> TriangleStats:
    """All three surrogates, with the Haantjes curvature taken against ``duw``."""
    return TriangleStats(
        triangle_haantjes(duv, dvw, duw),
        excess(duv, dvw, duw),
        aspect_ratio(duv, dvw, duw),
        diameter(duv, dvw, duw),
    )


@dataclass(frozen=True)
class GlobalTriangleStats:
    """Extremes over all triangles; ``None`` fields mean the graph has none."""

    max_excess: float | None = None
    min_aspect_ratio: float | None = None
    argmax_excess: tuple | None = None
    argmin_aspect_ratio: tuple | None = None
    count: int = 0

    @property
    def empty(self):
        return self.count == 0


def _sides(g, t):
    i, j, k = t
    return g.weight(i, j), g.weight(j, k), g.weight(i, k)


def global_triangle_stats(g: Graph) -> GlobalTriangleStats:
    """Maximal excess and minimal aspect ratio over all triangles of ``g``.

    Side lengths are edge weights. Ties go to the smallest canonical
    triangle, so the witnesses are reproducible.
    """
    tris = all_triangles(g)
    if not tris:
        return GlobalTriangleStats()
    best_exc = best_ar = None
    arg_exc = arg_ar = None
    for t in tris:
        s = _sides(g, t)
        ex = excess(*s)
        ar = aspect_ratio(*s)
        if best_exc is None or ex > best_exc:
            best_exc, arg_exc = ex, t
        if best_ar is None or ar < best_ar:
            best_ar, arg_ar = ar, t
    name = lambda t: tuple(g.label(i) for i in t)  # noqa: E731
    return GlobalTriangleStats(best_exc, best_ar, name(arg_exc), name(arg_ar), len(tris))
