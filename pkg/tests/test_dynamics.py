import random

import pytest

from cliquedyn.cliques import clique_graph, is_clique_helly
from cliquedyn.dynamics import (
    BUDGET_EXCEEDED,
    CONVERGED,
    Budget,
    PreconditionError,
    ShortcutMismatch,
    helly_double_step,
    iterate,
    star_map,
    triangle_free_double_step,
)
from cliquedyn.graph import Graph, disjoint_union, is_triangle_free
from cliquedyn.iso import are_isomorphic, canonical_form
from cliquedyn.named import complete, cycle, octahedron, path, star

from brute import random_connected_graph, random_graph


def iso(g, h):
    return are_isomorphic(g, h) is not None


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(0, 10)
    with pytest.raises(ValueError):
        Budget(10, 0)


def test_iterate_examples():
    r = iterate(cycle(4))
    assert (r.status, r.preperiod, r.period, r.witness) == (CONVERGED, 0, 1, (0, 1))
    r = iterate(path(4), Budget(10, 100))
    assert r.size_sequence == [4, 3, 2, 1, 1] and (r.preperiod, r.period) == (3, 1)
    r = iterate(octahedron(), Budget(10, 1000))
    assert r.status == BUDGET_EXCEEDED and r.size_sequence == [6, 8, 16, 256]
    assert r.preperiod is None and r.period is None


def test_step_budget():
    r = iterate(path(6), Budget(max_steps=2))
    assert r.status == BUDGET_EXCEEDED and r.size_sequence == [6, 5, 4]
    assert iterate(path(6), Budget(max_steps=10)).preperiod == 5


def test_report_dict():
    d = iterate(path(3)).to_dict()
    assert d == {"status": CONVERGED, "size_sequence": [3, 2, 1, 1],
                 "preperiod": 2, "period": 1, "witness": [2, 3]}


def test_empty_graph_is_a_fixed_point():
    r = iterate(Graph())
    assert (r.preperiod, r.period) == (0, 1)


def test_converged_reports_are_minimal_and_rederivable():
    rng = random.Random(21)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        r = iterate(g, Budget(20, 2000), keep_iterates=True)
        if not r.converged:
            continue
        m, p = r.preperiod, r.period
        forms = [canonical_form(h) for h in r.iterates]
        assert forms[m] == forms[m + p]
        seen = set()
        for i, f in enumerate(forms[: m + p]):
            assert f not in seen, "an earlier repeat was missed"
            seen.add(f)
        h = r.iterates[m]
        for _ in range(p):
            h = clique_graph(h).graph
        assert iso(h, r.iterates[m])
        assert r.size_sequence == [len(x) for x in r.iterates]


def test_larger_budget_keeps_verdict():
    rng = random.Random(22)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        small = iterate(g, Budget(4, 200))
        big = iterate(g, Budget(12, 3000))
        if small.converged:
            assert (big.preperiod, big.period) == (small.preperiod, small.period)


def test_disjoint_union_compatibility():
    a, b = path(4), cycle(5)
    u = disjoint_union(a, b)
    assert iso(clique_graph(u).graph, disjoint_union(clique_graph(a).graph, clique_graph(b).graph))
    ra, rb, ru = iterate(a), iterate(b), iterate(u)
    assert ru.preperiod == max(ra.preperiod, rb.preperiod)


def test_helly_double_step_examples():
    assert len(helly_double_step(path(3))) == 1
    assert helly_double_step(cycle(4)) == cycle(4)
    assert helly_double_step(cycle(5)) == cycle(5)
    with pytest.raises(PreconditionError):
        helly_double_step(octahedron())


def test_helly_double_step_matches_direct():
    rng = random.Random(23)
    count = 0
    while count < 200:
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        if not is_clique_helly(g):
            continue
        count += 1
        direct = clique_graph(clique_graph(g).graph).graph
        assert iso(helly_double_step(g), direct)


def test_triangle_free_double_step_examples():
    assert iso(triangle_free_double_step(path(4)), complete(2))
    assert triangle_free_double_step(cycle(4)) == cycle(4)
    assert len(triangle_free_double_step(star(3))) == 1
    for bad in (complete(3), Graph([0]), Graph([0, 1, 2], [(0, 1)])):
        with pytest.raises(PreconditionError):
            triangle_free_double_step(bad)


def test_triangle_free_double_step_scope():
    """Pruning leaves equals k^2 on connected triangle-free graphs, except K2.

    k(K2) = K1 and k(K1) = K1, while pruning K2 deletes both ends.
    """
    with pytest.raises(ShortcutMismatch):
        triangle_free_double_step(complete(2))
    rng = random.Random(24)
    checked = 0
    while checked < 300:
        n = rng.randint(3, 12)
        g = random_connected_graph(rng, n, rng.random() * 0.3)
        if not is_triangle_free(g):
            continue
        triangle_free_double_step(g, validate=True)
        checked += 1


def test_star_map_on_helly_graph_hits_retract():
    g = path(5)
    k1 = clique_graph(g)
    k2 = clique_graph(k1.graph)
    s = star_map(k1, k2)
    # interior vertices have stars that are cliques of kG; the ends do not
    assert set(s) == {1, 2, 3}
    assert len(set(s.values())) == 3
