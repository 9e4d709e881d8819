"""Slow, obviously-correct reference implementations used as test oracles."""

import itertools
import random

from cliquedyn.graph import Graph


def all_cliques(g: Graph) -> list:
    """Every complete vertex subset (including the empty set), by subset extension."""
    order = g.sorted_vertices()
    out = []

    def grow(current, start):
        out.append(frozenset(current))
        for i in range(start, len(order)):
            v = order[i]
            if all(g.has_edge(v, u) for u in current):
                grow(current + [v], i + 1)

    grow([], 0)
    return out


def brute_maximal_cliques(g: Graph) -> set:
    cl = [c for c in all_cliques(g) if c]
    return {c for c in cl if not any(c < d for d in cl if len(d) == len(c) + 1)}


def brute_maximal_cliques_subsets(g: Graph) -> set:
    """Pure subset enumeration (2^n); only for tiny graphs."""
    vs = g.sorted_vertices()
    cl = []
    for r in range(1, len(vs) + 1):
        for s in itertools.combinations(vs, r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                cl.append(frozenset(s))
    return {c for c in cl if not any(c < d for d in cl)}


def brute_clique_graph(g: Graph):
    """(graph on frozenset cliques, list of cliques)."""
    cl = sorted(brute_maximal_cliques(g), key=lambda c: sorted(map(repr, c)))
    edges = [(a, b) for a, b in itertools.combinations(cl, 2) if a & b]
    return Graph(cl, edges), cl


def brute_helly(g: Graph) -> bool:
    cl = list(brute_maximal_cliques(g))
    for r in range(3, len(cl) + 1):
        for fam in itertools.combinations(cl, r):
            if all(a & b for a, b in itertools.combinations(fam, 2)):
                if not frozenset.intersection(*fam):
                    return False
    return True


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if len(g) != len(h) or g.size() != h.size():
        return False
    gv, hv = g.sorted_vertices(), h.sorted_vertices()
    ge = g.edges()
    for perm in itertools.permutations(hv):
        f = dict(zip(gv, perm))
        if all(h.has_edge(f[a], f[b]) for a, b in ge):
            return True
    return False


def brute_dominated_retract_size(g: Graph) -> int:
    """Size of the retract: one vertex per closed-neighbourhood class, minus strictly dominated ones."""
    classes = {g.closed_neighborhood(v) for v in g.vertices}
    return sum(1 for n in classes if not any(n < m for m in classes))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    edges |= {(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p}
    return Graph(range(n), edges)


def shuffled(rng: random.Random, g: Graph) -> Graph:
    vs = g.sorted_vertices()
    perm = vs[:]
    rng.shuffle(perm)
    return g.relabel(dict(zip(vs, perm)))


def bridges(g: Graph) -> set:
    """Edges whose removal disconnects their endpoints (by repeated search)."""
    out = set()
    for u, w in g.edges():
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if (x, y) in ((u, w), (w, u)) or y in seen:
                    continue
                seen.add(y)
                stack.append(y)
        if w not in seen:
            out.add((u, w))
    return out


def cycle_blocks(g: Graph) -> list:
    """Vertex sets of the components left after deleting bridges, excluding single vertices."""
    br = bridges(g)
    adj = {v: {w for w in g.neighbors(v) if (v, w) not in br and (w, v) not in br} for v in g.vertices}
    seen = set()
    out = []
    for v in g.sorted_vertices():
        if v in seen or not adj[v]:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(comp)
    return out
