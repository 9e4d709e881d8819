"""Generators for the infinite graph families and their finite truncations.

The tree-cycle graph T
----------------------
Built from the 3-regular tree: a perfect matching splits the tree into
two-way infinite paths, each path's edges carry consecutive integer labels
(matching edges join equal positions), every labelled edge is subdivided and
gets a pendant path of length max(0, label), and every matching edge becomes
an 8-cycle.

Descriptors treat T as two copies ("sides" 0 and 1) of the half-tree T_1
joined by one central 8-cycle at the position-0 vertices of the two root
paths.  A path inside a side has an address: the tuple of positions at
which each ancestor path branched off.  The path with address ``a`` joins
its parent at position ``a[-1]`` (position 0 for the root path) and has a
child path at every other position.

    ('p', side, addr, i)      path vertex at position i
    ('s', side, addr, i)      subdivision vertex of the edge labelled i (p_i -- p_{i+1})
    ('a', side, addr, i, j)   j-th vertex (1..i) of the pendant path on that edge
    ('c', side, addr, k)      8-cycle joining path ``addr`` to its parent;
                              parent - c0 - c1 - c2 - child and parent - c3 - c4 - c5 - child
    ('x', k)                  central 8-cycle, side-0 root - x0 - x1 - x2 - side-1 root
                              and side-0 root - x3 - x4 - x5 - side-1 root
"""

from __future__ import annotations

from typing import Callable

from .graph import Graph, GraphError
from .oracle import GraphOracle, OracleError, ball

ROOT = ("p", 0, (), 0)


# T --------------------------------------------------------------------------------

def _parent_position(addr: tuple) -> int:
    return addr[-1] if addr else 0


def _valid_address(addr: tuple) -> bool:
    prev = 0
    for x in addr:
        if x == prev:
            return False
        prev = x
    return True


def _path_vertex_neighbors(side: int, addr: tuple, i: int) -> list:
    out = [("s", side, addr, i - 1), ("s", side, addr, i)]
    if i == _parent_position(addr):
        if addr:
            out += [("c", side, addr, 2), ("c", side, addr, 5)]
        elif side == 0:
            out += [("x", 0), ("x", 3)]
        else:
            out += [("x", 2), ("x", 5)]
    else:
        child = addr + (i,)
        out += [("c", side, child, 0), ("c", side, child, 3)]
    return out


def t_neighbors(v) -> list:
    """Neighbours of a vertex of the infinite graph T."""
    kind = v[0]
    if kind == "p":
        _, side, addr, i = v
        return _path_vertex_neighbors(side, addr, i)
    if kind == "s":
        _, side, addr, i = v
        out = [("p", side, addr, i), ("p", side, addr, i + 1)]
        if i >= 1:
            out.append(("a", side, addr, i, 1))
        return out
    if kind == "a":
        _, side, addr, i, j = v
        out = [("s", side, addr, i) if j == 1 else ("a", side, addr, i, j - 1)]
        if j < i:
            out.append(("a", side, addr, i, j + 1))
        return out
    if kind == "c":
        _, side, addr, k = v
        parent = ("p", side, addr[:-1], addr[-1])
        child = ("p", side, addr, addr[-1])
        return {
            0: [parent, ("c", side, addr, 1)],
            1: [("c", side, addr, 0), ("c", side, addr, 2)],
            2: [("c", side, addr, 1), child],
            3: [parent, ("c", side, addr, 4)],
            4: [("c", side, addr, 3), ("c", side, addr, 5)],
            5: [("c", side, addr, 4), child],
        }[k]
    if kind == "x":
        k = v[1]
        left, right = ("p", 0, (), 0), ("p", 1, (), 0)
        return {
            0: [left, ("x", 1)],
            1: [("x", 0), ("x", 2)],
            2: [("x", 1), right],
            3: [left, ("x", 4)],
            4: [("x", 3), ("x", 5)],
            5: [("x", 4), right],
        }[k]
    raise OracleError(f"not a vertex of T: {v!r}")


def check_t_vertex(v) -> None:
    try:
        kind = v[0]
        if kind == "x":
            ok = len(v) == 2 and v[1] in range(6)
        else:
            side, addr = v[1], v[2]
            ok = side in (0, 1) and isinstance(addr, tuple) and _valid_address(addr)
            if kind == "a":
                ok = ok and 1 <= v[4] <= v[3]
            elif kind == "c":
                ok = ok and len(addr) >= 1 and v[3] in range(6)
            elif kind not in ("p", "s"):
                ok = False
    except (TypeError, IndexError):
        ok = False
    if not ok:
        raise OracleError(f"not a vertex of T: {v!r}")


def is_t_leaf(v) -> bool:
    return v[0] == "a" and v[3] == v[4]


def _shift_address(side: int, addr: tuple):
    lowered = tuple(x - 1 for x in addr)
    if side == 0 and addr and addr[0] == 1:
        return 1, lowered[1:]
    if side == 1:
        return 0, (-1,) + lowered
    return 0, lowered


def t_label_shift(v):
    """Isomorphism from T minus its leaves onto T lowering every label by one.

    Lowering labels moves the central 8-cycle from position 0 to position -1,
    so the side-1 half is re-hung below side 0 at position -1 and the side-0
    path branching at position 1 becomes the new side 1.
    """
    kind = v[0]
    if kind == "x":
        return ("c", 0, (-1,), v[1])
    side, addr = v[1], v[2]
    if kind == "c":
        if side == 0 and addr == (1,):
            return ("x", v[3])
        s2, a2 = _shift_address(side, addr)
        return ("c", s2, a2, v[3])
    s2, a2 = _shift_address(side, addr)
    if kind in ("p", "s"):
        return (kind, s2, a2, v[3] - 1)
    if kind == "a":
        _, _, _, i, j = v
        if j >= i:
            raise ValueError(f"{v!r} is a leaf; the shift is defined on T minus its leaves")
        return ("a", s2, a2, i - 1, j)
    raise ValueError(f"not a vertex of T: {v!r}")


def in_t_window(v, L: int, b: int) -> bool:
    """Membership in the truncation: labels in [-L, L], at most ``b`` nested branchings per side."""
    if v[0] == "x":
        return True
    addr = v[2]
    if len(addr) > b or any(not -L <= x <= L + 1 for x in addr):
        return False
    if v[0] == "p":
        return -L <= v[3] <= L + 1
    if v[0] in ("s", "a"):
        return -L <= v[3] <= L
    return True


def _restricted(fn: Callable, keep: Callable) -> Callable:
    def inner(v):
        if not keep(v):
            raise OracleError(f"{v!r} lies outside the window")
        return [w for w in fn(v) if keep(w)]
    return inner


def _finite(oracle: GraphOracle) -> Graph:
    """The whole connected component of the basepoint (oracle must be finite)."""
    b = ball(oracle, oracle.basepoint, 10 ** 9)
    return b.graph


def tree_t_oracle(L: int | None = None, b: int | None = None) -> GraphOracle:
    """T itself (no arguments) or its (L, b) truncation as an oracle."""
    def fn(v):
        check_t_vertex(v)
        return t_neighbors(v)

    if L is None:
        return GraphOracle(fn, ROOT, "T")
    _check_window(L, b)
    return GraphOracle(_restricted(fn, lambda v: in_t_window(v, L, b)), ROOT, f"T[{L},{b}]")


def _check_window(L, b):
    if L is None or b is None or L < 1 or b < 0:
        raise GraphError("truncation needs L >= 1 and b >= 0")


def tree_t(L: int, b: int) -> Graph:
    return _finite(tree_t_oracle(L, b))


# T' = T / phi -----------------------------------------------------------------------

def _side0(v) -> bool:
    return v[0] != "x" and v[1] == 0


def t_prime_neighbors(v) -> list:
    if v[0] == "x":
        k = v[1]
        if k not in (0, 1, 2):
            raise OracleError(f"not a vertex of T': {v!r}")
        return {0: [ROOT, ("x", 1)], 1: [("x", 0), ("x", 2)], 2: [("x", 1), ROOT]}[k]
    check_t_vertex(v)
    if not _side0(v):
        raise OracleError(f"not a vertex of T': {v!r}")
    out = t_neighbors(v)
    if v == ROOT:
        out = [w for w in out if w[0] != "x"] + [("x", 0), ("x", 2)]
    return out


def t_prime_oracle(L: int | None = None, b: int | None = None) -> GraphOracle:
    """One half of T with the central 8-cycle folded to a 4-cycle through its root."""
    if L is None:
        return GraphOracle(t_prime_neighbors, ROOT, "T'")
    _check_window(L, b)
    keep = lambda v: in_t_window(v, L, b)  # noqa: E731
    return GraphOracle(_restricted(t_prime_neighbors, keep), ROOT, f"T'[{L},{b}]")


def t_prime(L: int, b: int) -> Graph:
    return _finite(t_prime_oracle(L, b))


# T'' -------------------------------------------------------------------------------

def _cycle_slot(j: int):
    j %= 16
    return ("K", j // 4, ROOT) if j % 4 == 0 else ("C", j)


def t_double_prime_neighbors(v) -> list:
    if v[0] == "C":
        j = v[1]
        if j % 4 == 0 or not 0 < j < 16:
            raise OracleError(f"not a vertex of T'': {v!r}")
        return [_cycle_slot(j - 1), _cycle_slot(j + 1)]
    if v[0] != "K" or v[1] not in range(4):
        raise OracleError(f"not a vertex of T'': {v!r}")
    _, copy, t = v
    check_t_vertex(t)
    if not _side0(t):
        raise OracleError(f"not a vertex of T'': {v!r}")
    out = [("K", copy, w) for w in t_neighbors(t) if w[0] != "x"]
    if t == ROOT:
        out += [_cycle_slot(4 * copy - 1), _cycle_slot(4 * copy + 1)]
    return out


T2_ROOT = ("K", 0, ROOT)


def t_double_prime_oracle(L: int | None = None, b: int | None = None) -> GraphOracle:
    """A 16-cycle with a copy of the half-tree T_1 hung at positions 0, 4, 8, 12."""
    if L is None:
        return GraphOracle(t_double_prime_neighbors, T2_ROOT, "T''")
    _check_window(L, b)

    def keep(v):
        return v[0] == "C" or in_t_window(v[2], L, b)

    return GraphOracle(_restricted(t_double_prime_neighbors, keep), T2_ROOT, f"T''[{L},{b}]")


def t_double_prime(L: int, b: int) -> Graph:
    return _finite(t_double_prime_oracle(L, b))


def t_double_prime_symmetry(g: Graph) -> dict:
    """The rotation of the 16-cycle by 8 (0 -> 8, 4 -> 12), extended to the copies."""
    perm = {}
    for v in g.vertices:
        if v[0] == "C":
            perm[v] = ("C", (v[1] + 8) % 16)
        else:
            perm[v] = ("K", (v[1] + 2) % 4, v[2])
    return perm


def tree_t_symmetry(g: Graph) -> dict:
    """The fixed-point-free involution of T swapping the two sides."""
    swap_x = {0: 5, 1: 4, 2: 3, 3: 2, 4: 1, 5: 0}
    perm = {}
    for v in g.vertices:
        if v[0] == "x":
            perm[v] = ("x", swap_x[v[1]])
        else:
            perm[v] = (v[0], 1 - v[1]) + v[2:]
    return perm


# triangular strip with legs -------------------------------------------------------

def strip_neighbors(legs: Callable[[str, int], int]) -> Callable:
    """Rows t_i, b_i with edges t_i-t_{i+1}, b_i-b_{i+1}, t_i-b_i, t_i-b_{i+1};
    ``legs(row, i)`` gives the length of the pendant path at that vertex."""

    def fn(v):
        kind = v[0]
        if kind == "t":
            i = v[1]
            out = [("t", i - 1), ("t", i + 1), ("b", i), ("b", i + 1)]
        elif kind == "b":
            i = v[1]
            out = [("b", i - 1), ("b", i + 1), ("t", i), ("t", i - 1)]
        elif kind == "l":
            _, row, i, j = v
            if not 1 <= j <= legs(row, i):
                raise OracleError(f"no such leg vertex {v!r}")
            out = [(row, i) if j == 1 else ("l", row, i, j - 1)]
            if j < legs(row, i):
                out.append(("l", row, i, j + 1))
            return out
        else:
            raise OracleError(f"not a strip vertex: {v!r}")
        if legs(kind, v[1]) > 0:
            out.append(("l", kind, v[1], 1))
        return out

    return fn


def caterpillar_oracle(legs: Callable[[str, int], int] | dict | None = None) -> GraphOracle:
    """Two-way infinite triangular strip with pendant paths ("legs")."""
    if legs is None:
        legs = {}
    if isinstance(legs, dict):
        table = dict(legs)
        legs = lambda row, i: table.get((row, i), 0)  # noqa: E731
    return GraphOracle(strip_neighbors(legs), ("t", 0), "strip")


def caterpillar(length: int, legs: dict | None = None) -> Graph:
    """Finite strip on positions ``0..length-1`` with legs ``{(row, i): length}``."""
    if length < 1:
        raise GraphError("strip length must be >= 1")
    legs = dict(legs or {})
    for (row, i), n in legs.items():
        if row not in ("t", "b") or not 0 <= i < length or n < 0:
            raise GraphError(f"bad leg {(row, i)}={n}")
    oracle = caterpillar_oracle(legs)
    keep = lambda v: 0 <= v[1 if v[0] != "l" else 2] < length  # noqa: E731
    return _finite(GraphOracle(_restricted(oracle._fn, keep), ("t", 0), "strip"))


# regular triangulations ------------------------------------------------------------

def triangulation(d: int, radius: int) -> Graph:
    """Ball of the simply connected triangulation with every vertex of degree ``d``.

    Layer by layer: each rim vertex with ``need`` missing neighbours gets a
    fan of new vertices whose two ends are shared with the neighbouring rim
    vertices.  Vertex 0 is the centre and vertices are numbered by layer.
    """
    return _triangulation_layers(d, radius)[0]


def _triangulation_layers(d: int, radius: int):
    if d < 6:
        raise GraphError("layered development needs degree d >= 6")
    if radius < 0:
        raise GraphError("radius must be non-negative")
    adj: dict = {0: set()}
    layer = {0: 0}
    if radius == 0:
        return Graph.from_adjacency(adj), layer
    ring = list(range(1, d + 1))
    for v in ring:
        adj[v] = set()
        layer[v] = 1

    def join(u, w):
        adj[u].add(w)
        adj[w].add(u)

    for i, v in enumerate(ring):
        join(0, v)
        join(v, ring[(i + 1) % d])
    nxt = d + 1
    for depth in range(2, radius + 1):
        m = len(ring)
        apex = []
        for _ in range(m):
            adj[nxt] = set()
            layer[nxt] = depth
            apex.append(nxt)
            nxt += 1
        new_ring = []
        for i, v in enumerate(ring):
            need = d - len(adj[v])
            if need < 2:
                raise GraphError("degree budget exhausted; d too small")
            fan = [apex[i - 1]]
            for _ in range(need - 2):
                adj[nxt] = set()
                layer[nxt] = depth
                fan.append(nxt)
                nxt += 1
            fan.append(apex[i])
            for x in fan:
                join(v, x)
            for x, y in zip(fan, fan[1:]):
                join(x, y)
            new_ring += fan[1:]
        ring = new_ring
    return Graph.from_adjacency(adj), layer


def triangulation_oracle(d: int, radius: int) -> GraphOracle:
    """Oracle for the infinite triangulation, valid at vertices of layer < ``radius``."""
    g, layer = _triangulation_layers(d, radius)

    def fn(v):
        if v not in layer:
            raise OracleError(f"unknown vertex {v!r}")
        if layer[v] >= radius:
            raise OracleError(f"vertex {v!r} is beyond the generated radius {radius}")
        return g.neighbors(v)

    return GraphOracle(fn, 0, f"triangulation({d})")


# simple infinite graphs -------------------------------------------------------------

def path_oracle() -> GraphOracle:
    return GraphOracle(lambda i: [i - 1, i + 1], 0, "Z")


def tree3_oracle() -> GraphOracle:
    """The 3-regular tree; vertices are tuples of child indices below the root."""
    def fn(a):
        if a == ():
            return [(0,), (1,), (2,)]
        return [a[:-1], a + (0,), a + (1,)]

    return GraphOracle(fn, (), "T3")


# dispatch ---------------------------------------------------------------------------

FAMILIES = ("tree_T", "t_prime", "t_double_prime", "caterpillar", "triangulation", "path", "tree3")


def generate(family: str, *, oracle: bool = False, **params):
    """Finite member (or, with ``oracle=True``, the oracle) of a named family."""
    try:
        if family == "tree_T":
            return tree_t_oracle(params.get("L"), params.get("b")) if oracle else tree_t(params["L"], params["b"])
        if family == "t_prime":
            return t_prime_oracle(params.get("L"), params.get("b")) if oracle else t_prime(params["L"], params["b"])
        if family == "t_double_prime":
            if oracle:
                return t_double_prime_oracle(params.get("L"), params.get("b"))
            return t_double_prime(params["L"], params["b"])
        if family == "caterpillar":
            if oracle:
                return caterpillar_oracle(params.get("legs"))
            return caterpillar(params["length"], params.get("legs"))
        if family == "triangulation":
            if oracle:
                return triangulation_oracle(params["d"], params["radius"])
            return triangulation(params["d"], params["radius"])
        if family == "path":
            if oracle:
                return path_oracle()
            return ball(path_oracle(), 0, params["radius"]).graph
        if family == "tree3":
            if oracle:
                return tree3_oracle()
            return ball(tree3_oracle(), (), params["radius"]).graph
    except KeyError as exc:
        raise GraphError(f"family {family} needs parameter {exc.args[0]}") from None
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
