import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from netcurv import (
    CellAdmission,
    Graph,
    InputError,
    LatticeSpec,
    ProbabilityMeasure,
    exact_w1,
    forman_augmented,
    forman_reduced,
    generate_lattice,
    ollivier_ricci_edge,
)
from oracles import brute_w1, random_graph


def torus(kind, dims=(8, 8)):
    return generate_lattice(LatticeSpec(kind, dims))


def uniform_on(xs):
    return ProbabilityMeasure(tuple(xs), tuple([1 / len(xs)] * len(xs)))


def test_forman_reduced_lattices():
    assert forman_reduced(torus("triangular"), ("000_000", "001_000")) == -8
    assert forman_reduced(torus("hexagonal"), ("000_000", "001_000")) == -2
    assert forman_reduced(torus("square"), ("000_000", "001_000")) == -4


def test_forman_augmented_lattices():
    tri = torus("triangular")
    assert forman_augmented(tri, ("000_000", "001_000"), CellAdmission("chordless", 3)) == -2
    sq = torus("square")
    assert forman_augmented(sq, ("000_000", "001_000"), CellAdmission("chordless", 4)) == 0


def test_isolated_edge():
    g = Graph((), [("a", "b")])
    assert forman_augmented(g, ("a", "b")) == 2
    assert forman_reduced(g, ("a", "b")) == 2


@pytest.mark.parametrize("seed", range(15))
def test_forman_identities_on_random_graphs(seed):
    rng = random.Random(seed)
    names, edges = random_graph(rng)
    if not edges:
        return
    g = Graph(names, edges)
    none = CellAdmission("triangles-only", 3)
    for u, v in edges:
        du, dv = g.degree(g.index(u)), g.degree(g.index(v))
        assert forman_reduced(g, (u, v)) == pytest.approx(4 - du - dv, abs=1e-12)
    # triangle-free graphs have no admitted triangles, so only vertex sharing counts
    tf = Graph((), [(f"c{i}", f"c{(i + 1) % 7}") for i in range(7)] + [("c0", "x"), ("x", "y")])
    for u, v in tf.edges():
        e = (tf.label(u), tf.label(v))
        assert forman_augmented(tf, e, none) == 2 - (tf.degree(u) - 1 + tf.degree(v) - 1)


def test_regular_graph_forman():
    for kind, d in (("square", 4), ("hexagonal", 3), ("triangular", 6)):
        g = torus(kind)
        vals = {forman_reduced(g, (g.label(i), g.label(j))) for i, j in g.edges()}
        assert vals == {4 - 2 * d}
    cube = generate_lattice(LatticeSpec("cubic", (6, 6, 6)))
    assert forman_reduced(cube, ("000_000_000", "001_000_000")) == -8


def test_w1_examples():
    mu = uniform_on(["a", "b"])
    assert exact_w1(mu, mu, [[0, 1], [1, 0]]).cost == 0
    assert exact_w1(uniform_on(["u"]), uniform_on(["v"]), [[3.5]]).cost == 3.5
    assert exact_w1(mu, uniform_on(["c"]), [[1], [2]]).cost == pytest.approx(1.5, abs=1e-12)


def test_w1_callable_and_plan():
    mu = uniform_on([0, 1, 2])
    nu = uniform_on([1, 2, 3])
    plan = exact_w1(mu, nu, lambda x, y: abs(x - y))
    assert plan.cost == pytest.approx(1.0, abs=1e-9)
    assert np.allclose(plan.flow.sum(axis=1), 1 / 3, atol=1e-9)
    assert (plan.flow >= 0).all()


def _instance(rng):
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    a = [rng.random() + 0.05 for _ in range(m)]
    b = [rng.random() + 0.05 for _ in range(n)]
    a = [x / sum(a) for x in a]
    b = [x / sum(b) for x in b]
    a[-1] = 1 - math.fsum(a[:-1])
    b[-1] = 1 - math.fsum(b[:-1])
    C = [[rng.choice([0, 1, 2, 3, rng.uniform(0, 5)]) for _ in range(n)] for _ in range(m)]
    return a, b, C


@pytest.mark.parametrize("seed", range(40))
def test_w1_matches_oracle(seed):
    a, b, C = _instance(random.Random(seed))
    mu = ProbabilityMeasure(tuple(range(len(a))), tuple(a))
    nu = ProbabilityMeasure(tuple(range(len(b))), tuple(b))
    assert abs(exact_w1(mu, nu, C).cost - brute_w1(a, b, C)) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_w1_symmetry(seed):
    a, b, C = _instance(random.Random(seed))
    mu = ProbabilityMeasure(tuple(range(len(a))), tuple(a))
    nu = ProbabilityMeasure(tuple(range(len(b))), tuple(b))
    CT = [list(r) for r in zip(*C)]
    assert exact_w1(mu, nu, C).cost == pytest.approx(exact_w1(nu, mu, CT).cost, abs=1e-9)


def test_measure_validation():
    with pytest.raises(InputError):
        ProbabilityMeasure(("a", "b"), (0.5, 0.6))
    with pytest.raises(InputError):
        ProbabilityMeasure(("a", "a"), (0.5, 0.5))
    with pytest.raises(InputError):
        ProbabilityMeasure(("a", "b"), (1.5, -0.5))
    with pytest.raises(InputError):
        exact_w1(uniform_on("ab"), uniform_on("c"), [[1, 2]])


def test_ollivier():
    k2 = Graph((), [("u", "v")])
    assert ollivier_ricci_edge(k2, ("u", "v")) == pytest.approx(0, abs=1e-12)
    with pytest.raises(InputError):
        ollivier_ricci_edge(k2, ("u", "v"), idleness=1.5)
    # complete graph K4: 1 - W1 = 1 - 1/3 with idleness 0
    k4 = Graph((), [(a, b) for a in "abcd" for b in "abcd" if a < b])
    assert ollivier_ricci_edge(k4, ("a", "b")) == pytest.approx(2 / 3, abs=1e-9)
    # on the square grid each neighbor of u pairs with one of v at cost 1
    sq = torus("square")
    r = ollivier_ricci_edge(sq, ("000_000", "001_000"))
    assert r == pytest.approx(0.0, abs=1e-9)
