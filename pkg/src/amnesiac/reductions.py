"""The (k,c)-flooding decision problem and the reduction from total domination."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .centers import _check_search, total_domination_number
from .flood import run_mask
from .graph import Graph, GraphError, cover_radius, is_bipartite, is_connected, to_mask
from .verify import enumerate_connected


@dataclass(frozen=True)
class FloodingInstance:
    """Is there a ``k``-set ``S`` with ``Flood_G(S) <= c``?"""

    g: Graph
    k: int
    c: int

    def __post_init__(self):
        if not is_connected(self.g):
            raise GraphError("instance graph must be connected")
        if not (1 <= self.k <= self.g.n):
            raise GraphError(f"k={self.k} out of range 1..{self.g.n}")
        if self.c < 1:
            raise GraphError(f"c must be positive, got {self.c}")


@dataclass(frozen=True)
class Decision:
    answer: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.answer


def decide_flooding(inst: FloodingInstance, *, force: bool = False) -> Decision:
    """Exhaustive search; the witness is the lexicographically first yes-set."""
    g, k, c = inst.g, inst.k, inst.c
    _check_search(g, force)
    masks, full, n = g.masks, g.full_mask, g.n
    for combo in combinations(range(n), k):
        smask = to_mask(combo)
        if cover_radius(masks, full, smask) > c:
            continue
        if run_mask(masks, n, smask)[0] <= c:
            return Decision(True, combo)
    return Decision(False)


@dataclass(frozen=True)
class ReductionOutput:
    g_prime: Graph
    k_prime: int | None
    c_prime: int
    attach_node: int
    gadget_nodes: tuple[int, int, int, int, int]


def attach_gadget(g: Graph, v: int = 0, k: int | None = None) -> ReductionOutput:
    """Hang the five-node gadget ``v-a-b-c`` plus triangle ``c-d-e`` off ``v``.

    ``k_prime`` is ``k + 2`` when a budget ``k`` is given, else None.
    """
    g.check_node(v)
    a, b, c, d, e = range(g.n, g.n + 5)
    edges = list(g.edges) + [(v, a), (a, b), (b, c), (c, d), (c, e), (d, e)]
    k_prime = None if k is None else k + 2
    return ReductionOutput(Graph(g.n + 5, edges), k_prime, 2, v, (a, b, c, d, e))


def reduce_total_domination(g: Graph, k: int) -> FloodingInstance:
    """Map "total dominating set of size <= k?" to a (k', 2)-flooding instance.

    Bipartite inputs get the gadget at node 0, which adds exactly two to the
    total domination number and breaks bipartiteness.
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if not is_connected(g):
        raise GraphError("graph must be connected")
    if is_bipartite(g):
        out = attach_gadget(g, 0, k)
        return FloodingInstance(out.g_prime, out.k_prime, out.c_prime)
    return FloodingInstance(g, k, 2)


@dataclass
class ReductionReport:
    n_max: int
    instances: int = 0
    gadget_checks: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        return (f"validate_reduction n_max={self.n_max} instances={self.instances} "
                f"gadget_checks={self.gadget_checks} counterexamples={len(self.counterexamples)}")


def validate_reduction(n_max: int) -> ReductionReport:
    """Check the reduction end to end on every connected graph with ``2 <= n <= n_max``."""
    if n_max > 6:
        raise GraphError("validate_reduction supports n_max <= 6")
    report = ReductionReport(n_max)
    for n in range(2, n_max + 1):
        for g in enumerate_connected(n):
            gamma = total_domination_number(g).value
            gadget = attach_gadget(g, 0).g_prime
            gamma_prime = total_domination_number(gadget).value
            report.gadget_checks += 1
            if gamma_prime != gamma + 2:
                report.counterexamples.append({
                    "edges": g.edges, "check": "gamma_t(g') == gamma_t(g) + 2",
                    "gamma_t": gamma, "gamma_t_gadget": gamma_prime})
            for k in range(2, n + 1):
                decision = decide_flooding(reduce_total_domination(g, k))
                report.instances += 1
                if decision.answer != (gamma <= k):
                    report.counterexamples.append({
                        "edges": g.edges, "k": k, "check": "decide(reduce(g,k)) == (gamma_t <= k)",
                        "gamma_t": gamma, "decision": decision.answer})
    return report
