"""Canonical labelling and isomorphism testing.

Colour refinement to an equitable ordered partition, then individualisation
of the first non-singleton cell with a depth-first search tree.  Leaves are
compared by their relabelled edge lists; automorphisms discovered at equal
leaves prune sibling branches (orbit pruning on the pointwise stabiliser of
the current path) and let the search jump back to the branching node.
Disconnected graphs are handled component by component.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, vertex_key


@dataclass(frozen=True)
class CanonicalForm:
    """Vertex count followed by the flattened canonical edge list."""

    fingerprint: tuple
    labeling: dict = field(compare=False, hash=False, repr=False)

    @property
    def n(self) -> int:
        return self.fingerprint[0]


def _refine(adj: list, cells: list) -> list:
    n = len(adj)
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict = {}
            for v in c:
                sig = tuple(sorted(cell_of[w] for w in adj[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(c)
        cells = out
        if not changed:
            return cells


def _certificate(adj: list, order: list) -> tuple:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    edges = []
    for u, ns in enumerate(adj):
        pu = pos[u]
        for w in ns:
            pw = pos[w]
            if pu < pw:
                edges.append((pu, pw))
    edges.sort()
    return tuple(edges)


class _Frame:
    __slots__ = ("cells", "path", "target", "candidates", "explored", "orbit_cache")

    def __init__(self, cells, path):
        self.cells = cells
        self.path = path
        self.target = next(i for i, c in enumerate(cells) if len(c) > 1)
        self.candidates = sorted(cells[self.target], reverse=True)
        self.explored = []
        self.orbit_cache = (-1, None)


def _orbit_roots(n: int, gens: list, fixed: list) -> list:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[p] != p for p in fixed):
            continue
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[a] = b
    return [find(x) for x in range(n)]


def _canonical_order(adj: list) -> tuple:
    """Return ``(certificate, order)`` for a graph on ``0..n-1``."""
    n = len(adj)
    if n == 0:
        return (), []
    by_degree: dict = {}
    for v in range(n):
        by_degree.setdefault(len(adj[v]), []).append(v)
    root = _refine(adj, [by_degree[d] for d in sorted(by_degree)])
    if len(root) == n:
        order = [c[0] for c in root]
        return _certificate(adj, order), order

    first = best = None  # (cert, order, path)
    gens: list = []
    stack = [_Frame(root, [])]
    while stack:
        fr = stack[-1]
        v = None
        while fr.candidates:
            cand = fr.candidates.pop()
            if fr.explored:
                if fr.orbit_cache[0] != len(gens):
                    fr.orbit_cache = (len(gens), _orbit_roots(n, gens, fr.path))
                roots = fr.orbit_cache[1]
                if any(roots[cand] == roots[e] for e in fr.explored):
                    continue
            v = cand
            break
        if v is None:
            stack.pop()
            continue
        fr.explored.append(v)
        cells = list(fr.cells)
        rest = [x for x in cells[fr.target] if x != v]
        cells[fr.target:fr.target + 1] = [[v], rest]
        cells = _refine(adj, cells)
        path = fr.path + [v]
        if len(cells) < n:
            stack.append(_Frame(cells, path))
            continue

        order = [c[0] for c in cells]
        cert = _certificate(adj, order)
        jump = None
        if first is None:
            first = best = (cert, order, path)
        else:
            for ref in (first, best):
                if cert == ref[0]:
                    gen = [0] * n
                    for a, b in zip(ref[1], order):
                        gen[a] = b
                    gens.append(gen)
                    jump = 0
                    while jump < len(path) and path[jump] == ref[2][jump]:
                        jump += 1
                    break
            else:
                if cert > best[0]:
                    best = (cert, order, path)
        if jump is not None:
            del stack[jump + 1:]
    return best[0], best[1]


def _component_forms(g: Graph) -> list:
    forms = []
    for comp in g.components():
        verts = sorted(comp, key=vertex_key)
        index = {v: i for i, v in enumerate(verts)}
        adj = [[index[w] for w in g.neighbors(v)] for v in verts]
        cert, order = _canonical_order(adj)
        forms.append((len(verts), cert, [verts[i] for i in order]))
    forms.sort(key=lambda f: (f[0], f[1]))
    return forms


def canonical_form(g: Graph) -> CanonicalForm:
    flat = [len(g)]
    labeling = {}
    offset = 0
    for size, cert, order in _component_forms(g):
        for a, b in cert:
            flat.append(a + offset)
            flat.append(b + offset)
        for i, v in enumerate(order):
            labeling[v] = offset + i
        offset += size
    return CanonicalForm(tuple(flat), labeling)


def quick_invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant: order, size and degree sequence."""
    return (len(g), g.size(), tuple(sorted(g.degree(v) for v in g.vertices)))


def is_isomorphism(g: Graph, h: Graph, mapping: dict) -> bool:
    """True iff ``mapping`` is a bijection V(g) -> V(h) preserving adjacency both ways."""
    if len(g) != len(h) or set(mapping) != set(g.vertices):
        return False
    if set(mapping.values()) != set(h.vertices):
        return False
    for v in g.vertices:
        if {mapping[w] for w in g.neighbors(v)} != set(h.neighbors(mapping[v])):
            return False
    return True


def are_isomorphic(g: Graph, h: Graph):
    """A witness bijection ``V(g) -> V(h)``, or ``None`` if the graphs differ."""
    if quick_invariant(g) != quick_invariant(h):
        return None
    cg, ch = canonical_form(g), canonical_form(h)
    if cg != ch:
        return None
    inverse = {i: v for v, i in ch.labeling.items()}
    witness = {v: inverse[i] for v, i in cg.labeling.items()}
    assert is_isomorphism(g, h, witness)
    return witness
