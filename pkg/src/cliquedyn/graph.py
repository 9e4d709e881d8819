"""Finite simple undirected graphs and local structural measurements.

Vertex identifiers are arbitrary hashables (ints, strings, or nested tuples of
those).  Everything that needs an order uses :func:`vertex_key`, so output is
deterministic even when identifier types are mixed.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Hashable, Iterable, Iterator

Vertex = Hashable

INFINITY = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex references."""


def vertex_key(v):
    """Total order on vertex identifiers: ints < strings < tuples < frozensets."""
    if isinstance(v, bool):
        return (0, int(v))
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    if isinstance(v, frozenset):
        return (3, tuple(sorted(vertex_key(x) for x in v)))
    return (4, repr(v))


def sort_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


class Graph:
    """Immutable simple undirected graph.

    >>> g = Graph(edges=[(0, 1), (1, 2)])
    >>> g.degree(1), len(g), g.size()
    (2, 3, 2)
    """

    __slots__ = ("_adj", "_order")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple] = ()):
        adj: dict = {v: set() for v in vertices}
        for e in edges:
            u, w = e
            if u == w:
                raise GraphError(f"self-loop at {u!r}")
            adj.setdefault(u, set()).add(w)
            adj.setdefault(w, set()).add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._order = None

    @classmethod
    def from_adjacency(cls, adj: dict) -> "Graph":
        """Build from a ``vertex -> neighbours`` mapping; symmetry is enforced."""
        g = cls.__new__(cls)
        sym: dict = {v: set() for v in adj}
        for v, ns in adj.items():
            for w in ns:
                if w == v:
                    raise GraphError(f"self-loop at {v!r}")
                sym[v].add(w)
                sym.setdefault(w, set()).add(v)
        g._adj = {v: frozenset(ns) for v, ns in sym.items()}
        g._order = None
        return g

    # basic queries ---------------------------------------------------------
    @property
    def vertices(self) -> frozenset:
        return frozenset(self._adj)

    def sorted_vertices(self) -> list:
        if self._order is None:
            self._order = sort_vertices(self._adj)
        return list(self._order)

    def neighbors(self, v: Vertex) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def closed_neighborhood(self, v: Vertex) -> frozenset:
        return self.neighbors(v) | {v}

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Vertex, w: Vertex) -> bool:
        return w in self._adj.get(u, ())

    def edges(self) -> list:
        """Edges as ``(u, w)`` pairs with ``u < w``, in canonical order."""
        out = []
        for u in self.sorted_vertices():
            ku = vertex_key(u)
            for w in self._adj[u]:
                if ku < vertex_key(w):
                    out.append((u, w))
        out.sort(key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        return out

    def size(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def adjacency(self) -> dict:
        return dict(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator:
        return iter(self.sorted_vertices())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(frozenset((v, ns) for v, ns in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.size()})"

    def relabel(self, mapping: dict) -> "Graph":
        """Rename vertices through an injective ``mapping``."""
        if len(set(mapping[v] for v in self._adj)) != len(self._adj):
            raise GraphError("relabelling is not injective")
        return Graph.from_adjacency({mapping[v]: [mapping[w] for w in ns] for v, ns in self._adj.items()})

    def components(self) -> list:
        """Vertex sets of connected components, ordered by least vertex."""
        seen = set()
        comps = []
        for s in self.sorted_vertices():
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            seen.add(s)
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def induced(g: Graph, s: Iterable[Vertex]) -> Graph:
    s = set(s)
    for v in s:
        if v not in g:
            raise GraphError(f"unknown vertex {v!r}")
    return Graph.from_adjacency({v: g.neighbors(v) & s for v in s})


def distances_from(g: Graph, source: Vertex, cutoff: float = INFINITY) -> dict:
    """Breadth-first distances from ``source`` up to ``cutoff`` (inclusive)."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if dist[u] >= cutoff:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph):
    """Length of a shortest cycle, or ``INFINITY`` for a forest."""
    best = INFINITY
    for root in g.sorted_vertices():
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # cycles closed from here on have length >= 2*dist[u]
            if 2 * dist[u] >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def neighborhood_graph(g: Graph, v: Vertex) -> Graph:
    return induced(g, g.neighbors(v))


def _require_nonempty(g: Graph) -> None:
    if len(g) == 0:
        raise GraphError("local measurements are undefined on the empty graph")


def local_girth(g: Graph):
    _require_nonempty(g)
    return min(girth(neighborhood_graph(g, v)) for v in g.sorted_vertices())


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the empty graph."""
    return min((g.degree(v) for v in g.vertices), default=0)


def local_min_degree(g: Graph) -> int:
    """Minimum over vertices of the minimum degree inside the open neighbourhood.

    An empty neighbourhood (isolated vertex) counts as degree 0.
    """
    _require_nonempty(g)
    return min(min_degree(neighborhood_graph(g, v)) for v in g.vertices)


def is_cycle(g: Graph) -> bool:
    return len(g) >= 3 and all(g.degree(v) == 2 for v in g.vertices) and g.is_connected()


def is_locally_cyclic(g: Graph) -> bool:
    return all(is_cycle(neighborhood_graph(g, v)) for v in g.vertices)


def prune_degree_one(g: Graph) -> Graph:
    """Delete every vertex of degree exactly one, simultaneously (no cascading)."""
    return induced(g, [v for v in g.vertices if g.degree(v) != 1])


def is_triangle_free(g: Graph) -> bool:
    for u in g.vertices:
        nu = g.neighbors(u)
        for w in nu:
            if nu & g.neighbors(w):
                return False
    return True


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertices tagged ``(index, v)``."""
    adj = {}
    for i, g in enumerate(graphs):
        for v, ns in g.adjacency().items():
            adj[(i, v)] = [(i, w) for w in ns]
    return Graph.from_adjacency(adj)
