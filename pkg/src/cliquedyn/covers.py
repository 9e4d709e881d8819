"""Graph homomorphisms, triangular covering maps, quotients and universal-cover balls."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .cliques import CliqueGraphResult, clique_graph
from .graph import INFINITY, Graph, GraphError, distances_from, sort_vertices


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class GraphHom:
    source: Graph
    target: Graph
    map: dict

    def __post_init__(self):
        missing = [v for v in self.source.vertices if v not in self.map]
        if missing:
            raise CoverError(f"map is not total: no image for {sort_vertices(missing)[0]!r}")
        for v in self.source.vertices:
            if self.map[v] not in self.target:
                raise CoverError(f"image of {v!r} is not a target vertex")

    def __call__(self, v):
        return self.map[v]

    def fibers(self) -> dict:
        out: dict = {}
        for v in self.source.sorted_vertices():
            out.setdefault(self.map[v], []).append(v)
        return out


def compose(p: GraphHom, q: GraphHom) -> GraphHom:
    """``q`` after ``p``."""
    if p.target != q.source:
        raise CoverError("maps are not composable")
    return GraphHom(p.source, q.target, {v: q.map[p.map[v]] for v in p.source.vertices})


def verify_hom(p: GraphHom) -> bool:
    return all(p.target.has_edge(p.map[u], p.map[w]) for u, w in p.source.edges())


@dataclass
class CoverReport:
    is_hom: bool
    is_triangular_cover: bool
    min_fiber_distance: float
    failing_vertex: object = None
    locally_surjective: bool = False

    @property
    def distance_criterion(self) -> bool:
        """The alternative definition: fibres more than three apart (for onto-neighbourhood homs)."""
        return self.is_hom and self.locally_surjective and self.min_fiber_distance > 3

    @property
    def characterizations_agree(self) -> bool:
        return self.distance_criterion == self.is_triangular_cover

    def describe(self) -> str:
        d = self.min_fiber_distance
        dist = "inf" if d == INFINITY else str(d)
        if self.is_triangular_cover:
            return f"triangular cover, min fiber distance {dist}"
        if not self.is_hom:
            return f"not a homomorphism (edge at {self.failing_vertex!r})"
        return f"not a triangular cover (fails at {self.failing_vertex!r}), min fiber distance {dist}"


def local_isomorphism_at(source: Graph, target: Graph, f: dict, v) -> bool:
    """Does ``f`` restrict to an isomorphism N[v] -> N[f(v)] of induced subgraphs?"""
    dom = source.closed_neighborhood(v)
    img = [f[x] for x in dom]
    if len(set(img)) != len(dom) or set(img) != target.closed_neighborhood(f[v]):
        return False
    dom = list(dom)
    for i, x in enumerate(dom):
        for y in dom[i + 1:]:
            if source.has_edge(x, y) != target.has_edge(f[x], f[y]):
                return False
    return True


def min_fiber_distance(p: GraphHom):
    """Least distance between two distinct vertices with the same image."""
    best = INFINITY
    image = p.map
    for x in p.source.sorted_vertices():
        dist = {x: 0}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            if dist[u] + 1 >= best:
                break
            for w in p.source.neighbors(u):
                if w in dist:
                    continue
                dist[w] = dist[u] + 1
                if image[w] == image[x]:
                    best = dist[w]
                    queue.clear()
                    break
                queue.append(w)
    return best


def is_triangular_cover(p: GraphHom) -> CoverReport:
    """Check the closed-neighbourhood isomorphism condition at every source vertex.

    A map that is not a homomorphism yields a report with ``is_hom=False``.
    """
    mfd = min_fiber_distance(p)
    for u, w in p.source.edges():
        if not p.target.has_edge(p.map[u], p.map[w]):
            return CoverReport(False, False, mfd, failing_vertex=u)
    failing = None
    onto = True
    for v in p.source.sorted_vertices():
        if not {p.map[x] for x in p.source.closed_neighborhood(v)} >= p.target.closed_neighborhood(p.map[v]):
            onto = False
        if failing is None and not local_isomorphism_at(p.source, p.target, p.map, v):
            failing = v
    return CoverReport(True, failing is None, mfd, failing_vertex=failing, locally_surjective=onto)


def quotient(g: Graph, perm: dict):
    """Quotient of ``g`` by the cyclic group generated by a fixed-point-free automorphism.

    Returns ``(quotient graph, projection, cover report)``.  Orbits are named
    by their least member.
    """
    if set(perm) != set(g.vertices) or set(perm.values()) != set(g.vertices):
        raise CoverError("permutation must be a bijection of the vertex set")
    for v in g.vertices:
        if perm[v] == v:
            raise CoverError(f"permutation fixes {v!r}")
        if {perm[w] for w in g.neighbors(v)} != set(g.neighbors(perm[v])):
            raise CoverError("permutation is not an automorphism")
    name = {}
    for v in g.sorted_vertices():
        if v in name:
            continue
        orbit = [v]
        w = perm[v]
        while w != v:
            orbit.append(w)
            w = perm[w]
        for x in orbit:
            name[x] = v
    adj = {o: set() for o in set(name.values())}
    for u, w in g.edges():
        a, b = name[u], name[w]
        if a != b:
            adj[a].add(b)
    q = Graph.from_adjacency(adj)
    hom = GraphHom(g, q, name)
    return q, hom, is_triangular_cover(hom)


def induced_clique_map(
    p: GraphHom,
    source_k: CliqueGraphResult | None = None,
    target_k: CliqueGraphResult | None = None,
) -> GraphHom:
    """The map kS -> kT sending a clique Q to the clique p(Q)."""
    if not is_triangular_cover(p).is_triangular_cover:
        raise CoverError("map is not a triangular cover")
    source_k = source_k or clique_graph(p.source)
    target_k = target_k or clique_graph(p.target)
    index = target_k.index_of()
    out = {}
    for i, q in source_k.provenance.items():
        image = frozenset(p.map[x] for x in q)
        if image not in index:
            raise AssertionError(f"image of clique {sort_vertices(q)} is not a maximal clique")
        out[i] = index[image]
    return GraphHom(source_k.graph, target_k.graph, out)


# universal triangular cover ------------------------------------------------------

@dataclass
class UniversalBall:
    cover: Graph
    projection: GraphHom
    depths: dict
    boundary: frozenset
    basepoint: int = 0
    radius: int = 0

    def non_boundary(self) -> list:
        return [v for v in self.cover.sorted_vertices() if v not in self.boundary]


@dataclass
class _Development:
    base: Graph
    proj: dict = field(default_factory=dict)
    adj: dict = field(default_factory=dict)
    depth: dict = field(default_factory=dict)
    alias: dict = field(default_factory=dict)
    done: set = field(default_factory=set)
    heap: list = field(default_factory=list)
    counter: int = 0

    def find(self, x):
        while x in self.alias:
            x = self.alias[x]
        return x

    def fresh(self, base_vertex, depth):
        c = self.counter
        self.counter += 1
        self.proj[c] = base_vertex
        self.adj[c] = set()
        self.depth[c] = depth
        heapq.heappush(self.heap, (depth, c))
        return c

    def connect(self, a, b):
        self.adj[a].add(b)
        self.adj[b].add(a)

    def fold(self, touched):
        """Merge neighbours with equal projection until the map is locally injective."""
        work = deque(touched)
        while work:
            x = self.find(work.popleft())
            seen = {}
            clash = None
            for z in sorted(self.adj[x]):
                b = self.proj[z]
                if b in seen:
                    clash = (seen[b], z)
                    break
                seen[b] = z
            if clash is None:
                continue
            keep, gone = min(clash), max(clash)
            self.alias[gone] = keep
            for z in self.adj.pop(gone):
                self.adj[z].discard(gone)
                if z != keep:
                    self.connect(z, keep)
                work.append(z)
            self.depth[keep] = min(self.depth[keep], self.depth.pop(gone))
            heapq.heappush(self.heap, (self.depth[keep], keep))
            if gone in self.done:
                self.done.discard(gone)
                self.done.add(keep)
            del self.proj[gone]
            work.append(keep)
            work.append(x)

    def lifts_at(self, c) -> dict:
        return {self.proj[z]: z for z in self.adj[c]}

    def complete(self, c):
        base = self.base
        nbrs = sort_vertices(base.neighbors(self.proj[c]))
        while True:
            c = self.find(c)
            lift = self.lifts_at(c)
            added = False
            for u in nbrs:
                if u in lift:
                    continue
                for w in base.neighbors(u):
                    if w in lift:
                        cand = [y for y in self.adj[lift[w]] if self.proj[y] == u]
                        if cand:
                            self.connect(c, min(cand))
                            self.fold([c, min(cand)])
                            added = True
                            break
                if added:
                    break
            if not added:
                break
        c = self.find(c)
        lift = self.lifts_at(c)
        for u in nbrs:
            if u not in lift:
                lift[u] = self.fresh(u, self.depth[c] + 1)
                self.connect(c, lift[u])
        touched = [c]
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if base.has_edge(u, w):
                    a, b = self.find(lift[u]), self.find(lift[w])
                    self.connect(a, b)
                    touched += [a, b]
        self.fold(touched)
        self.done.add(self.find(c))


def universal_cover_ball(g: Graph, v0, r: int) -> UniversalBall:
    """Radius-``r`` ball of the universal triangular cover of connected ``g`` around a lift of ``v0``.

    Neighbourhoods are completed breadth first.  A lift is reused whenever a
    triangle forces it; otherwise a fresh vertex is created.  Any two
    neighbours of one vertex lying over the same base vertex are merged.
    """
    if v0 not in g:
        raise GraphError(f"unknown vertex {v0!r}")
    if not g.is_connected():
        raise GraphError("universal cover ball needs a connected graph")
    if r < 0:
        raise ValueError("radius must be non-negative")
    dev = _Development(g)
    root = dev.fresh(v0, 0)
    while True:
        while dev.heap:
            d, c = heapq.heappop(dev.heap)
            if c in dev.alias or c in dev.done or dev.depth.get(c) != d or d >= r:
                continue
            dev.complete(c)
        root_now = dev.find(root)
        dist = distances_from(Graph.from_adjacency(dev.adj), root_now)
        late = [c for c in dev.adj if c not in dev.done and dist[c] < r]
        if not late:
            break
        for c in late:
            dev.depth[c] = dist[c]
            heapq.heappush(dev.heap, (dist[c], c))

    order = sorted(dev.adj, key=lambda c: (dist[c], c))
    rename = {c: i for i, c in enumerate(order)}
    cover = Graph.from_adjacency({rename[c]: [rename[z] for z in ns] for c, ns in dev.adj.items()})
    proj = {rename[c]: dev.proj[c] for c in dev.adj}
    depths = {rename[c]: dist[c] for c in dev.adj}
    undone = [rename[c] for c in dev.adj if c not in dev.done]
    boundary = frozenset(v for v in undone if not local_isomorphism_at(cover, g, proj, v))
    return UniversalBall(cover, GraphHom(cover, g, proj), depths, boundary, 0, r)
