"""Text formats: edge lists, vertex maps, DOT output and vertex tokens."""

from __future__ import annotations

import re

from .graph import Graph, GraphError, sort_vertices

_INT = re.compile(r"-?\d+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def token(v) -> str:
    """Whitespace-free text for a vertex; tuples and frozensets nest with brackets."""
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        if not v or any(c.isspace() for c in v) or v.startswith("#"):
            raise GraphError(f"vertex name {v!r} cannot be written as a token")
        return v
    if isinstance(v, tuple):
        return "(" + ",".join(token(x) for x in v) + ")"
    if isinstance(v, frozenset):
        return "{" + ",".join(token(x) for x in sort_vertices(v)) + "}"
    return token(str(v).replace(" ", ""))


def parse_token(s: str):
    """Integers come back as ``int``; everything else stays a string."""
    return int(s) if _INT.fullmatch(s) else s


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def parse_edge_list(text: str) -> Graph:
    vertices = []
    edges = []
    for no, parts in _lines(text):
        if len(parts) > 2:
            raise ParseError(f"expected 'u v' or a single vertex, got {len(parts)} tokens", no)
        names = [parse_token(p) for p in parts]
        if len(names) == 2:
            if names[0] == names[1]:
                raise ParseError(f"self-loop at {parts[0]}", no)
            edges.append(tuple(names))
        else:
            vertices.append(names[0])
    return Graph(vertices, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{token(u)} {token(w)}" for u, w in g.edges()]
    lines += [token(v) for v in g.sorted_vertices() if g.degree(v) == 0]
    return "".join(line + "\n" for line in lines)


def write_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {token(u)} -- {token(w)};" for u, w in g.edges()]
    lines += [f"  {token(v)};" for v in g.sorted_vertices() if g.degree(v) == 0]
    lines.append("}")
    return "\n".join(lines)


def parse_map(text: str) -> dict:
    """One ``u v`` pair per line; each ``u`` at most once."""
    out = {}
    for no, parts in _lines(text):
        if len(parts) != 2:
            raise ParseError("expected 'u v'", no)
        u, v = (parse_token(p) for p in parts)
        if u in out:
            raise ParseError(f"{parts[0]} mapped twice", no)
        out[u] = v
    return out


def write_map(m: dict) -> str:
    return "".join(f"{token(u)} {token(m[u])}\n" for u in sort_vertices(m))
