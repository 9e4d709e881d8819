"""Iterating the clique operator and detecting when the sequence repeats."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cliques import (
    CliqueGraphResult,
    CliqueLimitExceeded,
    clique_graph,
    domination_retract,
    is_clique_helly,
)
from .graph import Graph, is_triangle_free, prune_degree_one
from .iso import are_isomorphic, canonical_form, quick_invariant

CONVERGED = "CONVERGED"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


class PreconditionError(ValueError):
    pass


class ShortcutMismatch(AssertionError):
    """The accelerated double step disagreed with the direct computation."""


@dataclass(frozen=True)
class Budget:
    max_steps: int = 50
    max_vertices: int = 10_000

    def __post_init__(self):
        if self.max_steps < 1 or self.max_vertices < 1:
            raise ValueError("budget limits must be >= 1")


@dataclass
class DynamicsReport:
    status: str
    size_sequence: list
    preperiod: int | None = None
    period: int | None = None
    witness: tuple | None = None
    iterates: list = field(default_factory=list, repr=False, compare=False)

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "size_sequence": list(self.size_sequence),
            "preperiod": self.preperiod,
            "period": self.period,
            "witness": list(self.witness) if self.witness else None,
        }


def iterate(g: Graph, budget: Budget = Budget(), keep_iterates: bool = False) -> DynamicsReport:
    """Compute k^0 G, k^1 G, ... until an iterate repeats or the budget runs out.

    The vertex budget is enforced during clique enumeration, so an iterate
    larger than ``max_vertices`` is never built (nor canonicalised).  Full
    canonical forms are only computed for iterates whose cheap invariant
    matches an earlier one.
    """
    iterates = [g]
    sizes = [len(g)]
    by_invariant = {quick_invariant(g): [0]}
    forms: dict = {}

    def form(i):
        if i not in forms:
            forms[i] = canonical_form(iterates[i]).fingerprint
        return forms[i]

    def report(status, **kw):
        return DynamicsReport(status, sizes, iterates=iterates if keep_iterates else [], **kw)

    current = g
    for step in range(1, budget.max_steps + 1):
        try:
            current = clique_graph(current, limit=budget.max_vertices).graph
        except CliqueLimitExceeded:
            return report(BUDGET_EXCEEDED)
        iterates.append(current)
        sizes.append(len(current))
        inv = quick_invariant(current)
        for j in by_invariant.get(inv, []):
            if form(j) == form(step):
                return report(CONVERGED, preperiod=j, period=step - j, witness=(j, step))
        by_invariant.setdefault(inv, []).append(step)
    return report(BUDGET_EXCEEDED)


def helly_double_step(g: Graph) -> Graph:
    """k^2 G for clique-Helly G, computed as the domination retract."""
    if not is_clique_helly(g):
        raise PreconditionError("graph is not clique-Helly")
    return domination_retract(g)


def triangle_free_double_step(g: Graph, validate: bool = True) -> Graph:
    """k^2 G for connected triangle-free G as "delete the degree-one vertices".

    With ``validate`` the result is checked against two direct applications of
    the clique operator and :class:`ShortcutMismatch` is raised on disagreement.
    """
    if len(g) < 2 or not g.is_connected() or not is_triangle_free(g):
        raise PreconditionError("need a connected triangle-free graph on >= 2 vertices")
    pruned = prune_degree_one(g)
    if validate:
        direct = clique_graph(clique_graph(g).graph).graph
        if are_isomorphic(pruned, direct) is None:
            raise ShortcutMismatch(
                f"pruning gives {len(pruned)} vertices, k^2 has {len(direct)}"
            )
    return pruned


def star_map(first: CliqueGraphResult, second: CliqueGraphResult) -> dict:
    """Map x in G to the vertex of k^2 G whose clique is {Q in kG : x in Q}.

    ``first`` is kG and ``second`` is k(kG).  Vertices whose star is not a
    maximal clique of kG are left out.  For clique-Helly G this is the
    classical map onto the domination retract.
    """
    containing: dict = {}
    for q, members in first.provenance.items():
        for x in members:
            containing.setdefault(x, set()).add(q)
    index = second.index_of()
    out = {}
    for x, qs in containing.items():
        z = index.get(frozenset(qs))
        if z is not None:
            out[x] = z
    return out
