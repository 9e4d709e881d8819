import random

import pytest
from hypothesis import given, settings, strategies as st

from cliquedyn.graph import (
    INFINITY,
    Graph,
    GraphError,
    disjoint_union,
    girth,
    induced,
    is_locally_cyclic,
    is_triangle_free,
    local_girth,
    local_min_degree,
    neighborhood_graph,
    prune_degree_one,
)
from cliquedyn.iso import are_isomorphic
from cliquedyn.named import complete, cycle, icosahedron, octahedron, path, star

from brute import random_graph


def iso(g, h):
    return are_isomorphic(g, h) is not None


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(range(n), chosen)


def test_construction_rejects_self_loops():
    with pytest.raises(GraphError):
        Graph(edges=[(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_adjacency({1: [1]})


def test_from_adjacency_symmetrises():
    g = Graph.from_adjacency({0: [1], 1: [], 2: [1]})
    assert g.has_edge(1, 0) and g.has_edge(1, 2) and g.size() == 2


def test_mixed_vertex_types_sort_deterministically():
    g = Graph(["b", 3, ("x", 1)], [(3, "b")])
    assert g.sorted_vertices() == [3, "b", ("x", 1)]
    assert g.edges() == [(3, "b")]


def test_induced_examples():
    c5 = cycle(5)
    assert iso(induced(c5, [0, 1, 2]), path(3))
    assert iso(induced(complete(4), [1, 3]), complete(2))
    assert len(induced(c5, [])) == 0
    with pytest.raises(GraphError):
        induced(c5, [7])


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(complete(4)) == 3
    assert girth(path(5)) == INFINITY
    assert girth(Graph()) == INFINITY


def test_girth_of_cycles_and_petersen_like():
    for n in range(3, 12):
        assert girth(cycle(n)) == n
    from cliquedyn.named import petersen
    assert girth(petersen()) == 5


def test_neighborhood_graph_examples():
    o = octahedron()
    for v in o:
        assert iso(neighborhood_graph(o, v), cycle(4))
    assert iso(neighborhood_graph(complete(4), 0), complete(3))
    nb = neighborhood_graph(cycle(5), 0)
    assert len(nb) == 2 and nb.size() == 0
    with pytest.raises(GraphError):
        neighborhood_graph(cycle(5), 9)


def test_local_measurements():
    ico = icosahedron()
    for v in ico:
        assert iso(neighborhood_graph(ico, v), cycle(5))
    assert local_girth(ico) == 5
    assert local_girth(octahedron()) == 4
    assert local_girth(cycle(7)) == INFINITY
    assert local_min_degree(ico) == 2
    assert local_min_degree(complete(4)) == 2
    assert local_min_degree(cycle(5)) == 0
    # an isolated vertex has an empty neighbourhood, counted as degree 0
    assert local_min_degree(Graph([0])) == 0
    for f in (local_girth, local_min_degree):
        with pytest.raises(GraphError):
            f(Graph())


def test_locally_cyclic():
    assert is_locally_cyclic(octahedron())
    assert is_locally_cyclic(complete(4))
    assert is_locally_cyclic(icosahedron())
    assert not is_locally_cyclic(cycle(5))
    assert not is_locally_cyclic(complete(5))


def test_prune_degree_one_examples():
    assert iso(prune_degree_one(path(4)), complete(2))
    assert iso(prune_degree_one(star(3)), complete(1))
    assert prune_degree_one(cycle(4)) == cycle(4)
    # no cascading: P5 loses only its two ends
    assert prune_degree_one(path(5)) == induced(path(5), [1, 2, 3])


def test_components_and_union():
    g = disjoint_union(cycle(3), path(2))
    assert len(g.components()) == 2 and not g.is_connected()
    assert Graph().is_connected()


def test_triangle_free():
    assert is_triangle_free(cycle(4)) and not is_triangle_free(complete(3))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_induced_on_everything_is_identity(g):
    assert induced(g, g.vertices) == g


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_girth_infinite_iff_forest(g):
    forest = g.size() == len(g) - len(g.components())
    assert (girth(g) == INFINITY) == forest


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_girth_matches_shortest_cycle_search(g):
    # a shortest cycle through edge uw has length 1 + dist(u, w) in g - uw
    from cliquedyn.graph import distances_from
    best = INFINITY
    for u, w in g.edges():
        h = Graph(g.vertices, [e for e in g.edges() if e != (u, w)])
        d = distances_from(h, u).get(w)
        if d is not None:
            best = min(best, d + 1)
    assert girth(g) == best


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_locally_cyclic_implies_local_min_degree_two(g):
    if len(g) and is_locally_cyclic(g):
        assert local_min_degree(g) == 2


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_prune_keeps_higher_degree_vertices(g):
    p = prune_degree_one(g)
    assert all(v in p for v in g if g.degree(v) != 1)
    assert all(g.degree(v) != 1 for v in p)
    if all(p.degree(v) != 1 for v in p):
        assert prune_degree_one(p) == p


def test_relabel_round_trip():
    rng = random.Random(3)
    g = random_graph(rng, 8, 0.4)
    m = {v: f"v{v}" for v in g}
    back = {f"v{v}": v for v in g}
    assert g.relabel(m).relabel(back) == g
    with pytest.raises(GraphError):
        g.relabel({v: 0 for v in g})
