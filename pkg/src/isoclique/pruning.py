"""Isolation math and the pruning rules that discard search subtrees.

A vertex set of size k is isolated at factor ell when strictly fewer
than ell * k edges leave it. At a search node, any clique the subtree
can still report is the current clique C extended by some clique of the
subgraph induced by the candidate set P. Each candidate left behind is
adjacent to all of C and therefore contributes len(C) external edges, so
an upper bound on how large a clique P can supply turns into a lower
bound on the external edges of anything grown here. When that lower
bound already breaks the isolation budget, the whole subtree is sterile
and can be skipped without losing any qualifying clique.

Four bounds are available, cheapest and loosest first: the candidate
count, the maximum induced degree plus one, the softcore count (largest
k with at least k candidates of induced degree >= k-1), and the peeling
bound (degeneracy plus one). Strategies chain them; the shipped "combo"
tries the free size bound before falling back to softcore.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from . import oracle
from .graph import Graph, induced_degrees


@dataclass(frozen=True)
class IsolationParams:
    """Isolation factor; a size-k set qualifies when its cut is < ell * k."""

    ell: int

    def __post_init__(self) -> None:
        if not isinstance(self.ell, int) or isinstance(self.ell, bool) or self.ell < 1:
            raise ValueError("isolation factor must be an integer >= 1")


def external_degree(g: Graph, i: Sequence[int]) -> int:
    """Number of edges with exactly one endpoint in ``i``."""
    members = set(i)
    count = 0
    for v in i:
        for u in g.adjacency[v]:
            if u not in members:
                count += 1
    return count


def is_l_isolated(g: Graph, i: Sequence[int], params: IsolationParams) -> bool:
    """Strict test: external_degree(i) < ell * len(i). ``i`` must be non-empty."""
    if not i:
        raise ValueError("isolation is undefined for the empty set")
    return external_degree(g, i) < params.ell * len(i)


def ub_size(p: Sequence[int]) -> int:
    """Candidate count: the weakest clique-size bound, free to evaluate."""
    return len(p)


def ub_degree(induced_deg: Mapping[int, int]) -> int:
    """Maximum degree inside the candidate subgraph, plus one."""
    return max(induced_deg.values()) + 1


def ub_softcore(induced_deg: Mapping[int, int]) -> int:
    """Largest k such that at least k candidates have induced degree >= k-1.

    A relaxation of the peeling bound that never updates degrees. A
    counting sort over the degree values keeps it linear in the number
    of candidates.
    """
    degs = induced_deg.values()
    n = len(degs)
    count = [0] * n  # induced degrees lie in [0, n-1]
    for d in degs:
        count[d] += 1
    at_or_above = 0
    for k in range(n, 0, -1):
        at_or_above += count[k - 1]
        if at_or_above >= k:
            return k
    return 0


def ub_degeneracy(g: Graph, p: Sequence[int], induced_deg: Mapping[int, int]) -> int:
    """Peeling bound: one plus the largest minimum degree seen while
    repeatedly deleting a minimum-degree candidate.

    Bucket-queue peeling over the induced subgraph, linear in its edges.
    """
    k = len(p)
    index = {v: i for i, v in enumerate(p)}
    deg = [induced_deg[v] for v in p]
    nbrs = [[index[u] for u in g.adjacency[v] if u in index] for v in p]

    max_deg = max(deg)
    count = [0] * (max_deg + 1)
    for d in deg:
        count[d] += 1
    bins = [0] * (max_deg + 1)  # bins[d] = first slot holding a degree-d vertex
    total = 0
    for d in range(max_deg + 1):
        bins[d] = total
        total += count[d]
    order = [0] * k
    pos = [0] * k
    fill = bins.copy()
    for i, d in enumerate(deg):
        order[fill[d]] = i
        pos[i] = fill[d]
        fill[d] += 1

    peeled_max = 0
    for step in range(k):
        v = order[step]
        if deg[v] > peeled_max:
            peeled_max = deg[v]
        dv = deg[v]
        for u in nbrs[v]:
            du = deg[u]
            if du > dv:  # u not yet peeled and sits in a higher bucket
                pu = pos[u]
                pw = bins[du]
                w = order[pw]
                if u != w:
                    order[pu] = w
                    order[pw] = u
                    pos[u] = pw
                    pos[w] = pu
                bins[du] += 1
                deg[u] = du - 1
    return peeled_max + 1


def prune_test(
    c_size: int, p_size: int, ext_cp: int, omega_bar: int, params: IsolationParams
) -> bool:
    """True when no clique grown from this node can meet the isolation cut.

    ``omega_bar`` must be an upper bound on the largest clique the
    candidate subgraph contains. Growing the node's clique by t <= omega_bar
    candidates strands at least p_size - t candidates, each adding c_size
    external edges on top of ext_cp, so the best reachable case still
    violates isolation whenever

        ext_cp + c_size * p_size - ell * c_size >= omega_bar * (ell + c_size)

    The left side can be negative near the root; plain ints handle it.
    """
    ell = params.ell
    return ext_cp + c_size * p_size - ell * c_size >= omega_bar * (ell + c_size)


class BoundKind(Enum):
    SIZE = "size"
    DEGREE = "degree"
    SOFTCORE = "softcore"
    DEGENERACY = "degeneracy"
    OMEGA = "omega"  # exact clique number via the oracle; tests only


@dataclass(frozen=True)
class PruneStrategy:
    """A named sequence of bounds tried in order; the first prune wins."""

    name: str
    stages: tuple[BoundKind, ...]


STRATEGIES: dict[str, PruneStrategy] = {
    "none": PruneStrategy("none", ()),
    "size": PruneStrategy("size", (BoundKind.SIZE,)),
    "degree": PruneStrategy("degree", (BoundKind.DEGREE,)),
    "softcore": PruneStrategy("softcore", (BoundKind.SOFTCORE,)),
    "degeneracy": PruneStrategy("degeneracy", (BoundKind.DEGENERACY,)),
    "combo": PruneStrategy("combo", (BoundKind.SIZE, BoundKind.SOFTCORE)),
    "omega": PruneStrategy("omega", (BoundKind.OMEGA,)),
}

#: Strategy names the CLI accepts; the exact bound stays test-only.
CLI_STRATEGIES = ("none", "size", "degree", "softcore", "degeneracy", "combo")


def get_strategy(name: str) -> PruneStrategy:
    try:
        return STRATEGIES[name]
    except KeyError:
        raise ValueError(
            f"unknown strategy {name!r}; expected one of {', '.join(STRATEGIES)}"
        ) from None


class NodeView:
    """Node-local facts a strategy may consult.

    Induced degrees are computed at most once per node and only on
    demand, so a cheap stage can veto recursion before any subgraph work
    happens; the optional stats object counts the computations.
    """

    __slots__ = ("graph", "c_size", "p", "ext_cp", "stats", "_induced")

    def __init__(self, graph: Graph, c_size: int, p: Sequence[int], ext_cp: int, stats=None):
        self.graph = graph
        self.c_size = c_size
        self.p = p
        self.ext_cp = ext_cp
        self.stats = stats
        self._induced: dict[int, int] | None = None

    @property
    def p_size(self) -> int:
        return len(self.p)

    def induced_degrees(self) -> dict[int, int]:
        if self._induced is None:
            self._induced = induced_degrees(self.graph, self.p)
            if self.stats is not None:
                self.stats.induced_degree_evals += 1
        return self._induced


def bound_value(kind: BoundKind, view: NodeView) -> int:
    if kind is BoundKind.SIZE:
        return ub_size(view.p)
    if kind is BoundKind.DEGREE:
        return ub_degree(view.induced_degrees())
    if kind is BoundKind.SOFTCORE:
        return ub_softcore(view.induced_degrees())
    if kind is BoundKind.DEGENERACY:
        return ub_degeneracy(view.graph, view.p, view.induced_degrees())
    if kind is BoundKind.OMEGA:
        return oracle.clique_number_bruteforce(view.graph, view.p)
    raise AssertionError(f"unhandled bound kind {kind}")


def evaluate_strategy(
    strategy: PruneStrategy, view: NodeView, params: IsolationParams
) -> str | None:
    """Name of the first stage whose bound proves the subtree sterile, or None."""
    for stage in strategy.stages:
        omega_bar = bound_value(stage, view)
        if prune_test(view.c_size, view.p_size, view.ext_cp, omega_bar, params):
            return stage.value
    return None
