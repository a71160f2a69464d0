import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from netcurv import Graph, InputError, ParseError, parse_edge_list, parse_json, shortest_path, to_json
from netcurv.graph import parse_vertex_weights

import oracles


def test_parse_headerless_triangle():
    g = parse_edge_list("a,b\nb,c\nc,a")
    assert (g.n, g.m) == (3, 3)
    assert all(g.weight(i, j) == 1.0 for i, j in g.edges())
    assert not g.directed


def test_parse_single_weighted_edge():
    g = parse_edge_list("a,b,2.5")
    assert g.m == 1
    assert g.weight(0, 1) == 2.5


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("a,b,-1", "nonpositive"),
        ("source,target,weight\na,b,0", "line 2"),
        ("source,target\na,b\nb,a", "duplicate"),
        ("source,target\na,a", "self-loop"),
        ("source,target,weight\na,b,x", "not a number"),
        ("source,target\na,b,c,d", "columns"),
        ("source,target,directed\na,b,maybe", "directed marker"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edge_list(text)


def test_parse_error_reports_line_number():
    with pytest.raises(ParseError) as info:
        parse_edge_list("source,target,weight\na,b,1\nb,c,1\nc,d,-3")
    assert info.value.line == 4


def test_directed_column_and_default():
    g = parse_edge_list("source,target,directed\nu,v,1\nv,w,0")
    u, v, w = (g.index(x) for x in "uvw")
    assert g.direction(u, v) == 1 and g.direction(v, u) == -1
    assert g.direction(v, w) == 0
    g2 = parse_edge_list("source,target\nv,u", directed=True)
    assert g2.direction(g2.index("v"), g2.index("u")) == 1


def test_vertex_weights():
    g = parse_edge_list("a,b\nb,c", vertex_weights="vertex,weight\nb,3\n")
    assert g.vertex_weight(g.index("b")) == 3.0
    assert g.vertex_weight(g.index("a")) == 1.0
    with pytest.raises(ParseError):
        parse_vertex_weights("vertex,weight\nb,-2\n")
    with pytest.raises(InputError):
        Graph(["a"], [], {"zz": 1.0})


def test_json_document():
    doc = '{"vertices":["x"],"edges":[{"u":"a","v":"b","w":2,"dir":true}],"vertex_weights":{"a":2}}'
    g = parse_json(doc)
    assert g.n == 3 and g.m == 1
    assert g.direction(g.index("a"), g.index("b")) == 1
    assert g.vertex_weight(g.index("a")) == 2.0
    with pytest.raises(InputError):
        parse_json("{not json")
    with pytest.raises(InputError):
        parse_json('{"edges":[{"u":"a"}]}')


def test_shortest_path_examples():
    g = parse_edge_list("a,b\nb,c")
    r = shortest_path(g, "a", "c")
    assert r.length == 2 and r.path == ("a", "b", "c")

    g = parse_edge_list("a,b,1\nb,c,1\na,c,3")
    r = shortest_path(g, "a", "c")
    assert r.length == 2 and r.path == ("a", "b", "c")

    g = parse_edge_list("a,b\nc,d")
    r = shortest_path(g, "a", "d")
    assert not r.reachable and r.path == ()


def test_shortest_path_lexicographic_ties():
    # two equal routes a-c-d and a-b-d; the smaller sequence wins
    g = parse_edge_list("a,c\nc,d\na,b\nb,d")
    assert shortest_path(g, "a", "d").path == ("a", "b", "d")
    assert shortest_path(g, "d", "a").path == ("d", "b", "a")


def test_shortest_path_respecting_direction():
    g = Graph((), [("a", "b", 1, True), ("c", "b", 1, True), ("a", "c", 5, False)])
    assert shortest_path(g, "a", "c").length == 2
    assert shortest_path(g, "a", "c", respect_direction=True).length == 5
    assert not shortest_path(g, "b", "a", respect_direction=True).reachable


def _random_weighted(seed, n_max=12):
    rng = random.Random(seed)
    names, edges = oracles.random_graph(rng, n_max)
    w = {e: rng.choice([0.5, 1.0, 1.5, 2.0, rng.uniform(0.1, 3)]) for e in edges}
    return names, w, Graph(names, [(u, v, x) for (u, v), x in w.items()])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_shortest_path_matches_floyd_warshall(seed):
    names, w, g = _random_weighted(seed)
    d = oracles.floyd_warshall(names, w)
    for u in names:
        for v in names:
            if u == v:
                continue
            r = shortest_path(g, u, v)
            back = shortest_path(g, v, u)
            assert math.isclose(r.length, d[u, v], rel_tol=1e-12) or r.length == d[u, v]
            assert r.length == back.length or math.isclose(r.length, back.length, rel_tol=1e-12)
            if r.reachable:
                assert len(set(r.path)) == len(r.path)
                total = sum(w.get((a, b), w.get((b, a))) for a, b in zip(r.path, r.path[1:]))
                assert math.isclose(total, r.length, rel_tol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_metric_triangle_inequality(seed):
    names, _, g = _random_weighted(seed, 8)
    d = {(u, v): shortest_path(g, u, v).length for u in names for v in names if u != v}
    for u in names:
        d[u, u] = 0.0
    for u in names:
        for v in names:
            for x in names:
                assert d[u, x] <= d[u, v] + d[v, x] + 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_json_round_trip(seed, directed):
    rng = random.Random(seed)
    names, edges = oracles.random_graph(rng, 9)
    g = Graph(
        names,
        [(u, v, rng.uniform(0.1, 5), directed and rng.random() < 0.5) for u, v in edges],
        {names[0]: 2.5},
    )
    text = to_json(g)
    h = parse_json(text)
    assert h == g
    assert to_json(h) == text


def test_insertion_order_does_not_matter():
    a = Graph((), [("b", "c"), ("a", "b"), ("c", "a", 2.0)])
    b = Graph((), [("a", "c", 2.0), ("b", "a"), ("c", "b")])
    assert a == b and to_json(a) == to_json(b)
