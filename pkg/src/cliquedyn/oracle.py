"""Locally finite graphs given by a neighbour function, and finite windows onto them.

A window is a breadth-first ball.  Iterating the clique operator on a ball
gives a finite graph that agrees with the true (possibly infinite) iterate
only near the centre; :func:`trusted_iterate` tracks that region.

Depth of an iterate vertex is the least ball depth reached by its support,
computed level by level as the minimum over clique members.  Adjacent
vertices differ in depth by at most one at every level, so a vertex of the
n-th iterate at depth <= r - n is a genuine clique of the infinite iterate
and its adjacency to the other such vertices is exact.  The trust radius
used here, r - 2n, is the more conservative rule.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .cliques import CliqueGraphResult, clique_graph, maximal_cliques
from .graph import Graph, induced, sort_vertices


class OracleError(RuntimeError):
    pass


class GraphOracle:
    """A locally finite graph presented by ``neighbor_fn(vertex) -> iterable``."""

    def __init__(self, neighbor_fn: Callable, basepoint, name: str = "oracle"):
        self._fn = neighbor_fn
        self.basepoint = basepoint
        self.name = name

    def neighbors(self, v) -> list:
        return sort_vertices(self._fn(v))

    def __repr__(self) -> str:
        return f"GraphOracle({self.name}, basepoint={self.basepoint!r})"

    @classmethod
    def from_graph(cls, g: Graph, basepoint=None, name: str = "finite") -> "GraphOracle":
        if basepoint is None:
            basepoint = g.sorted_vertices()[0]

        def fn(v):
            if v not in g:
                raise OracleError(f"unknown vertex {v!r}")
            return g.neighbors(v)

        return cls(fn, basepoint, name)


@dataclass
class Ball:
    graph: Graph
    center: object
    depths: dict
    radius: int
    closed: bool = False  # True when no extracted vertex has a neighbour outside

    @property
    def boundary(self) -> frozenset:
        return frozenset(v for v, d in self.depths.items() if d == self.radius)

    @property
    def interior(self) -> frozenset:
        return frozenset(v for v, d in self.depths.items() if d < self.radius)


def ball(oracle: GraphOracle, v0=None, r: int = 1) -> Ball:
    """Breadth-first extraction of all vertices within distance ``r`` and all edges among them."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    if v0 is None:
        v0 = oracle.basepoint
    depths = {v0: 0}
    nbrs = {}
    queue = deque([v0])
    while queue:
        u = queue.popleft()
        ns = oracle.neighbors(u)
        if u in ns:
            raise OracleError(f"oracle reports a self-loop at {u!r}")
        nbrs[u] = ns
        if depths[u] < r:
            for w in ns:
                if w not in depths:
                    depths[w] = depths[u] + 1
                    queue.append(w)
    closed = True
    adj = {}
    for u, ns in nbrs.items():
        inside = []
        for w in ns:
            if w in depths:
                if u not in nbrs[w]:
                    raise OracleError(f"asymmetric oracle: {w!r} in N({u!r}) but not conversely")
                inside.append(w)
            else:
                closed = False
        adj[u] = inside
    return Ball(Graph.from_adjacency(adj), v0, depths, r, closed)


def clique_descriptor(clique) -> tuple:
    return tuple(sort_vertices(clique))


def clique_oracle(oracle: GraphOracle) -> GraphOracle:
    """The clique graph of an oracle, computed locally.

    Every clique meeting Q lies in the union of the closed neighbourhoods of
    Q's members, and so does every vertex that could extend it.
    """
    cache: dict = {}

    def local(members: frozenset) -> list:
        region = set(members)
        for x in members:
            region.update(oracle.neighbors(x))
        adj = {u: set(oracle.neighbors(u)) & region for u in region}
        return [q for q in maximal_cliques(Graph.from_adjacency(adj)) if q & members]

    def fn(desc):
        if desc not in cache:
            q = frozenset(desc)
            found = local(q)
            if q not in found:
                raise OracleError(f"{desc!r} is not a maximal clique")
            cache[desc] = [clique_descriptor(c) for c in found if c != q]
        return cache[desc]

    start = clique_descriptor(local(frozenset([oracle.basepoint]))[0])
    return GraphOracle(fn, start, f"k({oracle.name})")


@dataclass
class TrustedIterate:
    graph: Graph
    trusted: frozenset
    trust_radius: float
    depths: dict
    origins: dict = field(repr=False)
    levels: list = field(repr=False, default_factory=list)
    window: Ball | None = field(repr=False, default=None)

    def trusted_graph(self) -> Graph:
        return induced(self.graph, self.trusted)

    def by_origin(self) -> dict:
        return {self.origins[v]: v for v in self.graph.vertices}


def iterate_window(b: Ball, n: int):
    """Apply the clique operator ``n`` times to a ball, tracking depth and origin."""
    g = b.graph
    depth = dict(b.depths)
    origin = {v: v for v in g.vertices}
    levels: list[CliqueGraphResult] = []
    for _ in range(n):
        res = clique_graph(g)
        depth = {i: min(depth[x] for x in q) for i, q in res.provenance.items()}
        origin = {i: frozenset(origin[x] for x in q) for i, q in res.provenance.items()}
        levels.append(res)
        g = res.graph
    return g, depth, origin, levels


def trusted_iterate(oracle: GraphOracle, v0=None, r: int = 3, n: int = 1) -> TrustedIterate:
    """k^n of the radius-``r`` ball, with the region that matches the infinite k^n.

    Vertices at depth <= r - 2n are trusted; if the ball is a whole finite
    component, everything is.
    """
    if r <= 2 * n:
        raise ValueError(f"need r > 2n (got r={r}, n={n})")
    b = ball(oracle, v0, r)
    g, depth, origin, levels = iterate_window(b, n)
    rho = math.inf if b.closed else r - 2 * n
    trusted = frozenset(v for v in g.vertices if depth[v] <= rho)
    return TrustedIterate(g, trusted, rho, depth, origin, levels, b)


def agree_on_trusted(small: TrustedIterate, large: TrustedIterate) -> bool:
    """Trusted vertices of ``small`` exist in ``large`` with identical mutual adjacency."""
    index = large.by_origin()
    image = {}
    for v in small.trusted:
        w = index.get(small.origins[v])
        if w is None:
            return False
        image[v] = w
    targets = set(image.values())
    for v in small.trusted:
        mine = {image[x] for x in small.graph.neighbors(v) if x in small.trusted}
        theirs = {x for x in large.graph.neighbors(image[v]) if x in targets}
        if mine != theirs:
            return False
    return True


def subgraph_from_oracle(oracle: GraphOracle, vertices) -> Graph:
    """Induced subgraph of an oracle on a finite vertex set."""
    vs = set(vertices)
    return Graph.from_adjacency({v: [w for w in oracle.neighbors(v) if w in vs] for v in vs})

