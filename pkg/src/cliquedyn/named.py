"""Small named graphs used in examples, tests and the CLI."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def empty_graph(n: int = 0) -> Graph:
    return Graph(range(n))


def path(n: int) -> Graph:
    """Path on ``n`` vertices ``0..n-1``."""
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    labels = []
    for p, size in enumerate(parts):
        labels += [(p, i) for i in range(size)]
    index = {lab: k for k, lab in enumerate(labels)}
    edges = [(index[a], index[b]) for a, b in combinations(labels, 2) if a[0] != b[0]]
    return Graph(range(len(labels)), edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def octahedron() -> Graph:
    """K_{2,2,2}; vertices ``2p`` and ``2p+1`` form the non-adjacent pair ``p``."""
    return complete_multipartite(2, 2, 2)


def icosahedron() -> Graph:
    top, bottom = 0, 11
    upper = list(range(1, 6))
    lower = list(range(6, 11))
    edges = []
    for i in range(5):
        edges += [(top, upper[i]), (bottom, lower[i])]
        edges += [(upper[i], upper[(i + 1) % 5]), (lower[i], lower[(i + 1) % 5])]
        edges += [(upper[i], lower[i]), (upper[i], lower[(i + 1) % 5])]
    return Graph(range(12), edges)


def petersen() -> Graph:
    """Outer 5-cycle plus inner pentagram joined by spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(range(10), edges)


def kneser(n: int, k: int) -> Graph:
    subsets = list(combinations(range(n), k))
    edges = [(a, b) for a, b in combinations(subsets, 2) if not set(a) & set(b)]
    return Graph(subsets, edges)


def prism(n: int = 3) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(range(2 * n), edges)


def wheel(n: int) -> Graph:
    """Hub ``0`` joined to a rim cycle ``1..n``."""
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(range(n + 1), edges)
