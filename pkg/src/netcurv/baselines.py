"""Forman and Ollivier-Ricci baselines.

Forman's edge curvature uses the weighted formula

    F(e) = w_e * ( sum_{cells f > e} w_e / w_f + sum_{v < e} w_v / w_e
                   - sum_{e' || e} | sum_{f > e, e'} sqrt(w_e w_e') / w_f
                                     - sum_{v < e, e'} w_v / sqrt(w_e w_e') | )

with unit cell weights. The reduced variant drops the cells. Ollivier's
curvature is ``1 - W1(mu_u, mu_v) / d(u, v)`` with the 1-Wasserstein distance
solved exactly as a transportation linear program.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .cycles import CellAdmission, cells_at
from .errors import InputError, InvariantError
from .graph import Graph, dijkstra

MASS_TOL = 1e-12
PLAN_TOL = 1e-9


@dataclass(frozen=True)
class ProbabilityMeasure:
    support: tuple
    mass: tuple

    def __post_init__(self):
        if len(self.support) != len(self.mass):
            raise InputError("support and mass must have the same length")
        if len(set(self.support)) != len(self.support):
            raise InputError("support entries must be distinct")
        if any(m < 0 for m in self.mass):
            raise InputError("masses must be nonnegative")
        if abs(math.fsum(self.mass) - 1.0) > MASS_TOL:
            raise InputError(f"masses sum to {math.fsum(self.mass)!r}, not 1")


@dataclass(frozen=True)
class TransportPlan:
    flow: np.ndarray
    cost: float


def forman_reduced(g: Graph, e) -> float:
    """Forman curvature of ``e`` without 2-cells; ``4 - deg(u) - deg(v)`` when unweighted."""
    i, j = g.edge_index(*e)
    return _forman_reduced_idx(g, i, j)


def _forman_reduced_idx(g, i, j):
    we = g.weight(i, j)
    wi, wj = g.vertex_weight(i), g.vertex_weight(j)
    total = wi / we + wj / we
    for x, wx in ((i, wi), (j, wj)):
        other = j if x == i else i
        for y in g.neighbors(x):
            if y != other:
                total -= wx / math.sqrt(we * g.weight(x, y))
    return we * total


def forman_augmented(g: Graph, e, admission: CellAdmission = CellAdmission()) -> float:
    """Forman curvature of ``e`` including the admitted 2-cells through it.

    On unweighted graphs this is ``#cells + 2 - #parallel`` where an edge is
    parallel to ``e`` when it shares a vertex or a cell with ``e`` but not
    exactly one of each.
    """
    i, j = g.edge_index(*e)
    return _forman_augmented_idx(g, i, j, admission)


def _forman_augmented_idx(g, i, j, admission):
    a, b = g.oriented(i, j)
    cells = cells_at(g, a, b, admission)
    we = g.weight(i, j)
    key = lambda x, y: (x, y) if x < y else (y, x)  # noqa: E731
    shared_cells = {}
    for c in cells:
        for x, y in c.edges():
            k = key(x, y)
            if k != (i, j):
                shared_cells[k] = shared_cells.get(k, 0) + 1
    shared_vertex = {}
    for x in (i, j):
        for y in g.neighbors(x):
            k = key(x, y)
            if k != (i, j):
                shared_vertex[k] = x
    total = len(cells) * we / 1.0 + g.vertex_weight(i) / we + g.vertex_weight(j) / we
    for k in sorted(set(shared_cells) | set(shared_vertex)):
        root = math.sqrt(we * g.weight(*k))
        cell_term = shared_cells.get(k, 0) * root / 1.0
        vert_term = g.vertex_weight(shared_vertex[k]) / root if k in shared_vertex else 0.0
        total -= abs(cell_term - vert_term)
    return we * total


def exact_w1(mu: ProbabilityMeasure, nu: ProbabilityMeasure, dist) -> TransportPlan:
    """Exact 1-Wasserstein transport between two finite measures.

    ``dist`` is an array-like ``len(mu.support) x len(nu.support)`` cost table
    (or a callable ``dist(x, y)`` on support points). Solved as the
    transportation LP with HiGHS; the returned plan is checked against the
    marginals.
    """
    a = np.asarray(mu.mass, dtype=float)
    b = np.asarray(nu.mass, dtype=float)
    if abs(a.sum() - b.sum()) > MASS_TOL:
        raise InputError("infeasible transport: total masses differ")
    if callable(dist):
        C = np.array([[dist(x, y) for y in nu.support] for x in mu.support], dtype=float)
    else:
        C = np.asarray(dist, dtype=float)
    m, n = len(a), len(b)
    if C.shape != (m, n):
        raise InputError(f"cost table has shape {C.shape}, expected {(m, n)}")
    if (C < 0).any():
        raise InputError("costs must be nonnegative")
    if m == 1 or n == 1:
        flow = np.outer(a, b)
    else:
        A_eq = np.zeros((m + n, m * n))
        for r in range(m):
            A_eq[r, r * n:(r + 1) * n] = 1.0
        for c in range(n):
            A_eq[m + c, c::n] = 1.0
        res = linprog(
            C.ravel(),
            A_eq=A_eq[:-1],
            b_eq=np.concatenate([a, b])[:-1],
            bounds=(0, None),
            method="highs",
        )
        if res.status != 0:
            raise InvariantError(f"transport LP failed: {res.message}")
        flow = np.clip(res.x.reshape(m, n), 0.0, None)
    if np.abs(flow.sum(axis=1) - a).max() > PLAN_TOL or np.abs(flow.sum(axis=0) - b).max() > PLAN_TOL:
        raise InvariantError("transport plan violates the marginals")
    return TransportPlan(flow, float((flow * C).sum()))


def neighbor_measure(g: Graph, x: int, idleness: float) -> ProbabilityMeasure:
    nb = g.neighbors(x)
    if not nb:
        raise InputError(f"vertex {g.label(x)!r} has no neighbors")
    spread = (1.0 - idleness) / len(nb)
    support = [x] + list(nb)
    mass = [idleness] + [spread] * len(nb)
    return ProbabilityMeasure(tuple(support), tuple(mass))


def ollivier_ricci_edge(g: Graph, e, idleness: float = 0.0) -> float:
    """Ollivier-Ricci curvature of ``e`` with lazy uniform neighbor measures."""
    if not 0.0 <= idleness <= 1.0:
        raise InputError("idleness must lie in [0, 1]")
    i, j = g.edge_index(*e)
    return _ollivier_idx(g, i, j, idleness)


def _ollivier_idx(g, i, j, idleness):
    mu = neighbor_measure(g, i, idleness)
    nu = neighbor_measure(g, j, idleness)
    reach = g.weight(i, j) + max(g.weight(i, y) for y in g.neighbors(i)) + max(
        g.weight(j, y) for y in g.neighbors(j)
    )
    dists = {x: dijkstra(g, x, cutoff=reach) for x in mu.support}
    C = [[dists[x].get(y, math.inf) for y in nu.support] for x in mu.support]
    plan = exact_w1(mu, nu, C)
    return 1.0 - plan.cost / dists[i][j]
