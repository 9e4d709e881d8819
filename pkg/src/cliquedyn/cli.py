"""Command-line front end.

Exit status: 0 success, 1 a definite negative answer (not Helly, not a
cover), 2 usage or input error, 3 a budget ran out before an answer.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cliques import CliqueLimitExceeded, clique_graph, helly_brute, is_clique_helly, maximal_cliques
from .covers import CoverError, GraphHom, is_triangular_cover, quotient, universal_cover_ball
from .dynamics import Budget, PreconditionError, iterate
from .families import FAMILIES, generate
from .graph import (
    INFINITY,
    GraphError,
    girth,
    is_locally_cyclic,
    local_girth,
    local_min_degree,
    sort_vertices,
)
from .io import ParseError, parse_edge_list, parse_map, parse_token, token, write_dot, write_edge_list, write_map
from .oracle import OracleError

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str):
    return parse_edge_list(_read(path))


def _emit_graph(g, dot: bool) -> None:
    sys.stdout.write(write_dot(g) + "\n" if dot else write_edge_list(g))


def _number(x):
    return "inf" if x == INFINITY else x


def _parse_legs(text: str) -> dict:
    """``t0:2,b3:1`` -> {("t", 0): 2, ("b", 3): 1}."""
    legs = {}
    for item in filter(None, text.split(",")):
        try:
            site, n = item.split(":")
            legs[(site[0], int(site[1:]))] = int(n)
        except ValueError:
            raise UsageError(f"bad leg {item!r}; use ROW<i>:<length>, e.g. t0:2") from None
    return legs


def _parse_params(pairs: list) -> dict:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {pair!r}")
        if key == "legs":
            params[key] = _parse_legs(value)
        else:
            try:
                params[key] = int(value)
            except ValueError:
                raise UsageError(f"parameter {key} must be an integer") from None
    return params


# subcommands -----------------------------------------------------------------------

def cmd_gen(args) -> int:
    g = generate(args.family, **_parse_params(args.param))
    _emit_graph(g, args.dot)
    return EXIT_OK


def cmd_cliques(args) -> int:
    for q in maximal_cliques(_graph(args.file)):
        print(" ".join(token(v) for v in sort_vertices(q)))
    return EXIT_OK


def cmd_kgraph(args) -> int:
    if args.n < 0:
        raise UsageError("-n must be non-negative")
    g = _graph(args.file)
    for _ in range(args.n):
        g = clique_graph(g).graph
    _emit_graph(g, args.dot)
    return EXIT_OK


def cmd_iterate(args) -> int:
    g = _graph(args.file)
    budget = Budget(args.max_steps, args.max_vertices)
    start = time.perf_counter()
    rep = iterate(g, budget)
    elapsed = time.perf_counter() - start
    if args.json:
        doc = rep.to_dict()
        doc["parameters"] = {"max_steps": args.max_steps, "max_vertices": args.max_vertices}
        if args.timings:
            doc["timings"] = {"total_seconds": elapsed}
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"status: {rep.status}")
        print("sizes: " + " ".join(map(str, rep.size_sequence)))
        if rep.converged:
            print(f"preperiod: {rep.preperiod}")
            print(f"period: {rep.period}")
    return EXIT_OK if rep.converged else EXIT_BUDGET


def cmd_helly(args) -> int:
    g = _graph(args.file)
    answer = is_clique_helly(g)
    if args.brute is not None:
        try:
            brute = helly_brute(g, cap=args.brute)
        except CliqueLimitExceeded:
            print(f"more than {args.brute} cliques; brute-force check skipped", file=sys.stderr)
            return EXIT_BUDGET
        if brute != answer:
            raise AssertionError("extended-triangle test disagrees with the brute-force check")
    print("clique-Helly" if answer else "not clique-Helly")
    return EXIT_OK if answer else EXIT_NEGATIVE


def cmd_stats(args) -> int:
    g = _graph(args.file)
    stats = {"vertices": len(g), "edges": g.size(), "girth": _number(girth(g))}
    if len(g):
        stats["local_girth"] = _number(local_girth(g))
        stats["local_min_degree"] = local_min_degree(g)
        stats["locally_cyclic"] = is_locally_cyclic(g)
    if args.json:
        print(json.dumps(stats, sort_keys=True))
    else:
        for key in ("vertices", "edges", "girth", "local_girth", "local_min_degree", "locally_cyclic"):
            if key in stats:
                value = stats[key]
                print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


def cmd_cover_verify(args) -> int:
    g, h = _graph(args.source), _graph(args.target)
    rep = is_triangular_cover(GraphHom(g, h, parse_map(_read(args.map))))
    print(rep.describe())
    return EXIT_OK if rep.is_triangular_cover else EXIT_NEGATIVE


def cmd_cover_quotient(args) -> int:
    g = _graph(args.file)
    q, hom, rep = quotient(g, parse_map(_read(args.perm)))
    _emit_graph(q, args.dot)
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8") as fh:
            fh.write(write_map(hom.map))
    print(rep.describe(), file=sys.stderr)
    return EXIT_OK if rep.is_triangular_cover else EXIT_NEGATIVE


def cmd_cover_universal(args) -> int:
    g = _graph(args.file)
    if args.radius < 0:
        raise UsageError("--radius must be non-negative")
    ub = universal_cover_ball(g, parse_token(args.base), args.radius)
    _emit_graph(ub.cover, args.dot)
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8") as fh:
            fh.write(write_map(ub.projection.map))
    boundary = " ".join(token(v) for v in sorted(ub.boundary))
    print(f"{len(ub.cover)} vertices, boundary: {boundary or '(none)'}", file=sys.stderr)
    return EXIT_OK


# parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliquedyn", description="Iterated clique graphs and triangular covers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a member of a graph family as an edge list")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("cliques", help="list maximal cliques")
    s.add_argument("file")
    s.set_defaults(func=cmd_cliques)

    s = sub.add_parser("kgraph", help="iterated clique graph")
    s.add_argument("file")
    s.add_argument("-n", type=int, default=1)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_kgraph)

    s = sub.add_parser("iterate", help="iterate the clique operator until it repeats")
    s.add_argument("file")
    s.add_argument("--max-steps", type=int, default=50)
    s.add_argument("--max-vertices", type=int, default=10_000)
    s.add_argument("--json", action="store_true")
    s.add_argument("--timings", action="store_true", help="add wall-clock timings to the JSON report")
    s.set_defaults(func=cmd_iterate)

    s = sub.add_parser("helly", help="clique-Helly test")
    s.add_argument("file")
    s.add_argument("--brute", type=int, metavar="CAP", help="also run the definitional check on up to CAP cliques")
    s.set_defaults(func=cmd_helly)

    s = sub.add_parser("stats", help="girth and local structure")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stats)

    cover = sub.add_parser("cover", help="triangular covering maps")
    csub = cover.add_subparsers(dest="cover_command", required=True)

    s = csub.add_parser("verify")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_cover_verify)

    s = csub.add_parser("quotient")
    s.add_argument("file")
    s.add_argument("--perm", required=True)
    s.add_argument("--map-out")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_cover_quotient)

    s = csub.add_parser("universal")
    s.add_argument("file")
    s.add_argument("--base", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--map-out")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_cover_universal)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError, GraphError, CoverError, PreconditionError, OracleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
