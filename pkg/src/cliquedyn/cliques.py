"""Maximal cliques, the clique graph operator, domination and clique-Helly tests."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, GraphError, induced, vertex_key


class CliqueLimitExceeded(RuntimeError):
    """More maximal cliques than the caller allowed."""


def clique_key(clique) -> tuple:
    return tuple(sorted(vertex_key(v) for v in clique))


def degeneracy_order(g: Graph) -> list:
    """Repeatedly strip a minimum-degree vertex (ties broken by vertex order)."""
    deg = {v: g.degree(v) for v in g.vertices}
    heap = [(d, vertex_key(v), v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed = set()
    order = []
    while heap:
        d, _, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue
        removed.add(v)
        order.append(v)
        for w in g.neighbors(v):
            if w not in removed:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], vertex_key(w), w))
    return order


def _expand(r: list, p: set, x: set, adj: dict):
    if not p and not x:
        yield frozenset(r)
        return
    pivot = max(p | x, key=lambda u: len(p & adj[u]))
    for v in list(p - adj[pivot]):
        nv = adj[v]
        yield from _expand(r + [v], p & nv, x & nv, adj)
        p.discard(v)
        x.add(v)


def iter_maximal_cliques(g: Graph):
    """Bron-Kerbosch with pivoting; degeneracy order at the outer level."""
    adj = g.adjacency()
    order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {w for w in adj[v] if pos[w] > pos[v]}
        earlier = {w for w in adj[v] if pos[w] < pos[v]}
        yield from _expand([v], later, earlier, adj)


def maximal_cliques(g: Graph, limit: int | None = None) -> list:
    """All maximal cliques as frozensets, sorted lexicographically by members.

    Raises :class:`CliqueLimitExceeded` as soon as more than ``limit`` are found.
    """
    out = []
    for q in iter_maximal_cliques(g):
        out.append(q)
        if limit is not None and len(out) > limit:
            raise CliqueLimitExceeded(f"more than {limit} maximal cliques")
    out.sort(key=clique_key)
    return out


@dataclass(frozen=True)
class CliqueGraphResult:
    graph: Graph
    provenance: dict  # kG vertex (int) -> frozenset of G vertices

    @property
    def cliques(self) -> list:
        return [self.provenance[i] for i in range(len(self.provenance))]

    def index_of(self) -> dict:
        """Inverse provenance: clique (frozenset) -> kG vertex."""
        return {q: i for i, q in self.provenance.items()}


def intersection_graph(sets: list) -> Graph:
    """Graph on ``0..len(sets)-1`` joining indices whose sets meet."""
    containing: dict = {}
    for i, s in enumerate(sets):
        for v in s:
            containing.setdefault(v, []).append(i)
    adj = {i: set() for i in range(len(sets))}
    for idx in containing.values():
        for a in idx:
            adj[a].update(idx)
    for i in adj:
        adj[i].discard(i)
    return Graph.from_adjacency(adj)


def clique_graph(g: Graph, limit: int | None = None) -> CliqueGraphResult:
    """The clique graph kG; vertex ``i`` is the i-th clique in canonical order."""
    cliques = maximal_cliques(g, limit=limit)
    return CliqueGraphResult(intersection_graph(cliques), dict(enumerate(cliques)))


def iterated_clique_graph(g: Graph, n: int) -> Graph:
    for _ in range(n):
        g = clique_graph(g).graph
    return g


# domination -------------------------------------------------------------------

def dominates(g: Graph, u, w) -> bool:
    """True iff N[w] is contained in N[u]."""
    if u == w:
        raise GraphError("domination is only defined for distinct vertices")
    return g.closed_neighborhood(w) <= g.closed_neighborhood(u)


def domination_retract(g: Graph) -> Graph:
    """Drop strictly dominated vertices and keep one vertex per twin class.

    Single simultaneous pass; classes are closed-neighbourhood twins and the
    representative is the least vertex.
    """
    classes: dict = {}
    for v in g.sorted_vertices():
        classes.setdefault(g.closed_neighborhood(v), []).append(v)
    keep = []
    for nbhd, members in classes.items():
        rep = members[0]
        strictly = any(
            nbhd < g.closed_neighborhood(u) for u in g.neighbors(rep)
        )
        if not strictly:
            keep.append(rep)
    return induced(g, keep)


# clique-Helly -----------------------------------------------------------------

def triangles(g: Graph):
    adj = g.adjacency()
    for u in g.sorted_vertices():
        ku = vertex_key(u)
        for w in adj[u]:
            kw = vertex_key(w)
            if kw <= ku:
                continue
            for x in adj[u] & adj[w]:
                if vertex_key(x) > kw:
                    yield (u, w, x)


def is_clique_helly(g: Graph) -> bool:
    """Extended-triangle criterion.

    For each triangle T, the vertices adjacent to at least two members of T
    must contain one vertex adjacent to all the others.
    """
    adj = g.adjacency()
    for t in triangles(g):
        tset = set(t)
        ext = {v for a in t for v in adj[a] if len(adj[v] & tset) >= 2}
        if not any(ext - {u} <= adj[u] for u in ext):
            return False
    return True


def helly_brute(g: Graph, cap: int = 20) -> bool:
    """Definitional check over every pairwise-intersecting family of cliques."""
    cliques = maximal_cliques(g, limit=cap)
    m = len(cliques)
    meets = [[bool(a & b) for b in cliques] for a in cliques]

    def extend(family: list, common: frozenset) -> bool:
        if len(family) >= 3 and not common:
            return False
        for j in range(family[-1] + 1, m):
            if all(meets[i][j] for i in family):
                if not extend(family + [j], common & cliques[j]):
                    return False
        return True

    return all(extend([i], cliques[i]) for i in range(m))

