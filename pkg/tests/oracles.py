"""Independent brute-force references used by the test-suite.

Nothing here imports the enumeration, path or transport code under test.
"""

import itertools
import math
import random


def adjacency(edges):
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def floyd_warshall(vertices, wedges):
    """All-pairs distances from ``{(u, v): w}``."""
    d = {(a, b): (0.0 if a == b else math.inf) for a in vertices for b in vertices}
    for (u, v), w in wedges.items():
        d[u, v] = d[v, u] = min(d[u, v], w)
    for k in vertices:
        for i in vertices:
            dik = d[i, k]
            if dik == math.inf:
                continue
            for j in vertices:
                if dik + d[k, j] < d[i, j]:
                    d[i, j] = dik + d[k, j]
    return d


def all_simple_paths(adj, a, b, max_edges):
    """Every simple a-b path with at most ``max_edges`` edges, by permutation."""
    others = [x for x in adj if x not in (a, b)]
    out = []
    for k in range(0, max_edges):
        for perm in itertools.permutations(others, k):
            p = (a,) + perm + (b,)
            if all(p[i + 1] in adj[p[i]] for i in range(len(p) - 1)):
                out.append(p)
    return out


def cycles_through_edge(adj, a, b, L, mode):
    """Cycles through edge a-b of length <= L, filtered by admission mode."""
    out = []
    for p in all_simple_paths(adj, a, b, L - 1):
        if len(p) < 3:
            continue
        if mode == "triangles-only" and len(p) != 3:
            continue
        if mode == "chordless":
            k = len(p)
            chord = False
            for i in range(k):
                for j in range(i + 2, k):
                    if i == 0 and j == k - 1:
                        continue
                    if p[j] in adj[p[i]]:
                        chord = True
            if chord:
                continue
        out.append(p)
    return out


def circumradius(a, b, c):
    """Circumradius from explicit planar coordinates of a triangle with sides a, b, c."""
    # A at origin, B on the x-axis at distance c, C from the law of cosines
    ax, ay = 0.0, 0.0
    bx, by = c, 0.0
    cx = (b * b + c * c - a * a) / (2 * c)
    cy = math.sqrt(b * b - cx * cx)
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
    return math.hypot(ux - ax, uy - ay)


def brute_w1(a, b, C):
    """Optimal transport cost by enumerating every basis (spanning tree) of the LP."""
    m, n = len(a), len(b)
    cells = [(i, j) for i in range(m) for j in range(n)]
    best = math.inf
    for basis in itertools.combinations(cells, m + n - 1):
        parent = list(range(m + n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree = True
        for i, j in basis:
            ri, rj = find(i), find(m + j)
            if ri == rj:
                tree = False
                break
            parent[ri] = rj
        if not tree:
            continue
        # peel leaves of the spanning tree to get the unique basic flow
        rows = list(a)
        cols = list(b)
        left = set(basis)
        flow = {}
        while left:
            deg = {}
            for i, j in left:
                deg[("r", i)] = deg.get(("r", i), 0) + 1
                deg[("c", j)] = deg.get(("c", j), 0) + 1
            for i, j in sorted(left):
                if deg[("r", i)] == 1:
                    f = rows[i]
                    break
                if deg[("c", j)] == 1:
                    f = cols[j]
                    break
            flow[i, j] = f
            rows[i] -= f
            cols[j] -= f
            left.discard((i, j))
        if min(flow.values()) < -1e-12:
            continue
        best = min(best, sum(f * C[i][j] for (i, j), f in flow.items()))
    return best


def random_graph(rng: random.Random, n_max=8, p=None):
    n = rng.randint(2, n_max)
    p = rng.uniform(0.2, 0.9) if p is None else p
    names = [f"n{i}" for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return names, edges
