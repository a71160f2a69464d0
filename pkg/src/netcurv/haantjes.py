"""Haantjes curvature of paths and the curvatures built from it.

The curvature of a path against the chord it subtends is
``sqrt((l(path) - l(chord)) / l(chord)**3)``. A 2-cell anchored at an edge
gets sectional curvature ``2*pi - kappa`` (a local Gauss-Bonnet balance with
unit cell area), and an edge's Ricci curvature sums this over its cells.

If a path is lighter than its chord the two roles are swapped and the result
is negated, so weighted undirected graphs get a signed curvature too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .cycles import CellAdmission, Cycle, alternatives_idx, canonical_cycle, cells_at
from .errors import InputError
from .graph import Graph, path_weight
from .menger import directed_sign

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class HaantjesPathInput:
    path_weight: float
    chord_weight: float

    def __post_init__(self):
        if not (self.path_weight > 0 and self.chord_weight > 0):
            raise InputError(
                f"path and chord weights must be positive, got {self.path_weight}, {self.chord_weight}"
            )


@dataclass(frozen=True)
class CellContribution:
    cell: tuple
    kappa: float
    sign: int
    weight: float
    value: float


@dataclass(frozen=True)
class SignedCurvature:
    value: float
    components: tuple = ()

    def check(self, rel=1e-12):
        """Verify that the components add up to the value."""
        if self.components:
            s = math.fsum(c.value for c in self.components)
            if not math.isclose(s, self.value, rel_tol=rel, abs_tol=rel):
                return False
        return True


FACE_MODES = ("unit", "perimeter-penalty", "custom")


@dataclass(frozen=True)
class FaceWeightScheme:
    """Geometric weight of a 2-cell.

    ``perimeter-penalty`` assigns ``k - 2`` to a cell with ``k`` boundary
    edges (a triangle weighs 1). ``custom`` looks cells up in ``table`` by
    their canonical vertex-id tuple and falls back to 1.
    """

    mode: str = "unit"
    table: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in FACE_MODES:
            raise InputError(f"unknown face weight scheme {self.mode!r}")
        for key, w in self.table.items():
            if not w > 0:
                raise InputError(f"face weight for {key!r} must be positive")

    def weight(self, g: Graph, c: Cycle) -> float:
        if self.mode == "unit":
            return 1.0
        if self.mode == "perimeter-penalty":
            return float(c.length - 2)
        key = tuple(g.label(i) for i in canonical_cycle(c.vertices))
        return float(self.table.get(key, 1.0))


def haantjes_path(inp) -> float:
    """Signed Haantjes curvature of a path against its chord.

    Accepts a :class:`HaantjesPathInput` or a ``(path_weight, chord_weight)``
    pair.

    >>> haantjes_path((5.0, 1.0))
    2.0
    """
    if not isinstance(inp, HaantjesPathInput):
        inp = HaantjesPathInput(*inp)
    p, c = inp.path_weight, inp.chord_weight
    if p == c:
        return 0.0
    if p > c:
        return math.sqrt((p - c) / c**3)
    return -math.sqrt((c - p) / p**3)


def directed_sign_cycle(g: Graph, c: Cycle) -> int:
    """+1 / -1 if the cycle is coherently oriented with / against its anchor, else 0."""
    return directed_sign(g, c)


def sectional_cell(
    g: Graph,
    c: Cycle,
    scheme: FaceWeightScheme = FaceWeightScheme(),
    *,
    literal_sign=False,
    reverse_sign=False,
) -> float:
    return _contribution(g, c, scheme, literal_sign, reverse_sign).value


def _contribution(g, c, scheme, literal_sign=False, reverse_sign=False):
    if c.anchor is None:
        raise InputError("sectional curvature needs a cell anchored at an edge")
    kappa = haantjes_path((c.perimeter - c.chord_weight, c.chord_weight))
    eps = directed_sign(g, c)
    if reverse_sign:
        eps = -eps
    w = scheme.weight(g, c)
    value = (TWO_PI - eps * kappa) / w
    if literal_sign:
        value = -value
    return CellContribution(c.named(g), kappa, eps, w, value)


@dataclass(frozen=True)
class HaantjesOptions:
    admission: CellAdmission = CellAdmission()
    scheme: FaceWeightScheme = FaceWeightScheme()
    literal_sign: bool = False
    reverse_sign: bool = False


def ricci_idx(g: Graph, a: int, b: int, opts: HaantjesOptions = HaantjesOptions()):
    """Haantjes-Ricci curvature of the edge anchored ``a -> b`` (indices)."""
    comps = tuple(
        _contribution(g, c, opts.scheme, opts.literal_sign, opts.reverse_sign)
        for c in cells_at(g, a, b, opts.admission)
    )
    return SignedCurvature(math.fsum(x.value for x in comps), comps)


def haantjes_ricci_edge(
    g: Graph,
    e,
    admission: CellAdmission = CellAdmission(),
    scheme: FaceWeightScheme = FaceWeightScheme(),
    *,
    literal_sign=False,
    reverse_sign=False,
) -> SignedCurvature:
    """Sum of sectional curvatures of the admitted cells through ``e``."""
    i, j = g.edge_index(*e)
    a, b = g.oriented(i, j)
    return ricci_idx(g, a, b, HaantjesOptions(admission, scheme, literal_sign, reverse_sign))


def cells_at_vertex(g: Graph, i: int, admission: CellAdmission):
    """Admitted cells through vertex ``i``, each once.

    A cell is anchored at its edge from ``i`` to the smaller of ``i``'s two
    cycle neighbors.
    """
    out = []
    for j in g.neighbors(i):
        a, b = g.oriented(i, j)
        for c in cells_at(g, a, b, admission):
            vs = c.vertices
            # the other cycle neighbor of i
            pos = vs.index(i)
            other = vs[1] if pos == 0 else vs[-2]
            if j < other:
                out.append(c)
    return out


def haantjes_scalar_vertex(
    g: Graph,
    v,
    admission: CellAdmission = CellAdmission(),
    scheme: FaceWeightScheme = FaceWeightScheme(),
    *,
    literal_sign=False,
    reverse_sign=False,
) -> SignedCurvature:
    """Sum of sectional curvatures of the admitted cells incident to ``v``."""
    i = g.index(v)
    comps = tuple(
        _contribution(g, c, scheme, literal_sign, reverse_sign)
        for c in cells_at_vertex(g, i, admission)
    )
    return SignedCurvature(math.fsum(x.value for x in comps), comps)


def _path_sign(g, pi0, pi):
    # walk pi0 forward, then pi backward
    walk = list(zip(pi0, pi0[1:])) + list(zip(pi[::-1], pi[-2::-1]))
    dirs = {g.direction(x, y) for x, y in walk}
    if 1 in dirs and -1 in dirs:
        return 0
    return -1 if -1 in dirs else 1


def directional_idx(g: Graph, s: int, t: int, bound=5, *, weighted=False, reverse_sign=False):
    pi0, paths = alternatives_idx(g, s, t, bound, weighted=weighted)
    l0 = path_weight(g, pi0)
    comps = []
    for pi in paths:
        kappa = haantjes_path((path_weight(g, pi), l0))
        eps = _path_sign(g, pi0, pi)
        if reverse_sign:
            eps = -eps
        cell = tuple(g.label(x) for x in pi0 + pi[-2:0:-1])
        comps.append(CellContribution(cell, kappa, eps, 1.0, TWO_PI - eps * kappa))
    comps = tuple(comps)
    return SignedCurvature(math.fsum(x.value for x in comps), comps)


def directional_ricci(g: Graph, u, v, bound=5, *, weighted=False, reverse_sign=False):
    """Haantjes-Ricci curvature in the direction from ``u`` to ``v``.

    Each alternative path ``pi_i`` (see :func:`netcurv.cycles.alternative_paths`)
    closes a cell with the shortest path ``pi_0`` and contributes
    ``2*pi - kappa(pi_i)``, where ``kappa`` compares ``l(pi_i)`` against
    ``l(pi_0)``.
    """
    s, t = g.index(u), g.index(v)
    if s == t:
        raise InputError("directional curvature needs two distinct vertices")
    return directional_idx(g, s, t, bound, weighted=weighted, reverse_sign=reverse_sign)


def is_strong_local_metric(g: Graph, admission: CellAdmission = CellAdmission()) -> bool:
    """True if every admitted cell's path is strictly heavier than its chord.

    Diagnostic only: on such weights no cell gets the negative branch of
    :func:`haantjes_path`.
    """
    for i, j in g.edges():
        for c in cells_at(g, i, j, admission):
            if not c.path_weight > c.chord_weight:
                return False
    return True
