import itertools
import random

from hypothesis import given, settings, strategies as st

from cliquedyn.graph import Graph
from cliquedyn.iso import are_isomorphic, canonical_form, is_isomorphism
from cliquedyn.named import (
    complete_bipartite,
    cycle,
    kneser,
    path,
    petersen,
    prism,
    star,
)

from brute import brute_isomorphic, random_graph, shuffled


def test_relabelled_cycle_has_same_form():
    rng = random.Random(0)
    c6 = cycle(6)
    assert canonical_form(c6) == canonical_form(shuffled(rng, c6))
    renamed = c6.relabel({i: f"x{i}" for i in range(6)})
    assert canonical_form(c6) == canonical_form(renamed)


def test_distinct_forms():
    assert canonical_form(cycle(4)) != canonical_form(path(4))
    assert canonical_form(Graph([0, 1])) != canonical_form(Graph(edges=[(0, 1)]))


def test_petersen_two_constructions():
    a, b = petersen(), kneser(5, 2)
    assert canonical_form(a) == canonical_form(b)
    w = are_isomorphic(a, b)
    assert w is not None and is_isomorphism(a, b, w)


def test_negative_pairs():
    assert are_isomorphic(cycle(4), star(3)) is None
    k33, pr = complete_bipartite(3, 3), prism(3)
    assert are_isomorphic(k33, pr) is None
    assert not brute_isomorphic(k33, pr)


def test_witness_on_shuffled_copies():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        h = shuffled(rng, g)
        w = are_isomorphic(g, h)
        assert w is not None
        for u, v in itertools.combinations(g.sorted_vertices(), 2):
            assert g.has_edge(u, v) == h.has_edge(w[u], w[v])


def test_disconnected_graphs():
    a = Graph(range(7), [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
    b = Graph(range(7), [(6, 5), (4, 3), (3, 2), (2, 4), (1, 6)])
    assert are_isomorphic(a, b) is not None
    c = Graph(range(7), [(0, 1), (2, 3), (3, 4), (4, 5), (5, 2)])
    assert are_isomorphic(a, c) is None


def test_regular_graphs_with_many_automorphisms():
    # vertex-transitive graphs stress the individualisation search
    from cliquedyn.named import icosahedron, octahedron
    rng = random.Random(2)
    for g in (icosahedron(), octahedron(), petersen(), cycle(20), complete_bipartite(5, 5)):
        assert are_isomorphic(g, shuffled(rng, g)) is not None
    assert are_isomorphic(cycle(12), Graph(range(12), [(i, (i + 1) % 6 + 6 * (i // 6)) for i in range(12)])) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6), st.integers(0, 2 ** 15 - 1), st.integers(0, 2 ** 15 - 1))
def test_forms_equal_iff_isomorphic(n, ma, mb):
    pairs = list(itertools.combinations(range(n), 2))
    g = Graph(range(n), [p for i, p in enumerate(pairs) if ma >> i & 1])
    h = Graph(range(n), [p for i, p in enumerate(pairs) if mb >> i & 1])
    same_form = canonical_form(g) == canonical_form(h)
    w = are_isomorphic(g, h)
    assert same_form == (w is not None) == brute_isomorphic(g, h)
    if w is not None:
        assert is_isomorphism(g, h, w)
