"""Bipartite auxiliary graphs whose single-source flood mirrors a flood on G.

Numbering is fixed: primary copies keep their ids ``0..n-1``, the mirror of
``v`` is ``v + n`` and the virtual source (multi-source construction) is
``2n``.  The plain virtual-source graph ``G*(S)`` has ``n + 1`` nodes with the
virtual source at ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .flood import simulate, source_mask
from .graph import (
    Graph,
    GraphError,
    bits,
    classify_edges,
    eccentricity,
    format_graph,
    require_connected,
)

KINDS = ("G_single", "G_star", "G_multi")


@dataclass(frozen=True)
class AuxGraph:
    graph: Graph
    kind: str
    primary_of: dict[int, int]
    mirror_of: dict[int, int] = field(default_factory=dict)
    vstar: int | None = None
    cross_edges: tuple[tuple[int, int], ...] = ()

    def origin(self, x: int) -> tuple[int | None, str]:
        """Map an auxiliary node back to ``(original node, role)``."""
        if x == self.vstar:
            return None, "vstar"
        n = len(self.primary_of)
        if x < n:
            return x, "primary"
        return x - n, "mirror"

    def format_mapping(self) -> str:
        lines = [f"primary {v} {p}" for v, p in sorted(self.primary_of.items())]
        lines += [f"mirror {v} {q}" for v, q in sorted(self.mirror_of.items())]
        if self.vstar is not None:
            lines.append(f"vstar {self.vstar}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return format_graph(self.graph) + self.format_mapping()


def build_forward_subgraph(g: Graph, roots: Iterable[int]) -> Graph:
    """Drop every cross edge relative to ``roots``."""
    return Graph(g.n, classify_edges(g, roots).forward)


def _double(n: int, forward, cross, extra=(), with_vstar: bool = False) -> Graph:
    edges = list(forward)
    edges += [(u + n, w + n) for u, w in forward]
    for u, w in cross:
        edges.append((u, w + n))
        edges.append((w, u + n))
    edges += extra
    return Graph(2 * n + with_vstar, edges)


def build_aux_single(g: Graph, v0: int) -> AuxGraph:
    require_connected(g)
    g.check_node(v0)
    classes = classify_edges(g, [v0])
    n = g.n
    aux = _double(n, classes.forward, classes.cross)
    return AuxGraph(
        aux,
        "G_single",
        primary_of={v: v for v in range(n)},
        mirror_of={v: v + n for v in range(n)},
        cross_edges=classes.cross,
    )


def build_g_star(g: Graph, sources: Iterable[int]) -> AuxGraph:
    smask = source_mask(g, sources)
    require_connected(g)
    n = g.n
    star = Graph(n + 1, list(g.edges) + [(s, n) for s in bits(smask)])
    return AuxGraph(star, "G_star", primary_of={v: v for v in range(n)}, vstar=n)


def build_aux_multi(g: Graph, sources: Iterable[int]) -> AuxGraph:
    """Two copies of the forward subgraph of ``G*(S)`` (the second without the
    virtual source), with each cross edge ``{u, w}`` rerouted as ``u-w'`` and
    ``w-u'``."""
    star = build_g_star(g, sources)
    n = g.n
    classes = classify_edges(star.graph, [n])
    # Edges at the virtual source join distance 0 to distance 1: never cross.
    forward = [e for e in classes.forward if e[1] != n]
    vstar_edges = [(s, 2 * n) for s in star.graph.adj(n)]
    aux = _double(n, forward, classes.cross, vstar_edges, with_vstar=True)
    return AuxGraph(
        aux,
        "G_multi",
        primary_of={v: v for v in range(n)},
        mirror_of={v: v + n for v in range(n)},
        vstar=2 * n,
        cross_edges=classes.cross,
    )


def flood_via_aux(g: Graph, sources: Iterable[int], *, construction: str = "multi") -> int:
    """Flood time read off as an eccentricity in the auxiliary graph.

    ``construction="single"`` uses the one-source graph directly and is only
    valid for a single source.
    """
    sources = list(sources)
    if construction == "multi":
        aux = build_aux_multi(g, sources)
        return eccentricity(aux.graph, aux.vstar) - 1
    if construction == "single":
        if len(sources) != 1:
            raise GraphError("the single-source construction needs exactly one source")
        return eccentricity(build_aux_single(g, sources[0]).graph, sources[0])
    raise ValueError(f"unknown construction {construction!r}")


@dataclass(frozen=True)
class Correspondence:
    """Result of comparing a flood on G with the flood on its auxiliary graph.

    ``divergence`` is ``(round, (sender, receiver), reason)`` for the earliest
    mismatch, in G's round numbering.  ``mirror_events`` maps a G round to the
    number of auxiliary messages received by mirror nodes in that round.
    """

    ok: bool
    divergence: tuple | None
    mirror_events: dict[int, int]

    def __bool__(self) -> bool:
        return self.ok


def check_round_correspondence(g: Graph, sources: Iterable[int], *,
                               construction: str = "multi") -> Correspondence:
    sources = list(sources)
    if construction == "multi":
        aux = build_aux_multi(g, sources)
        start, offset = [aux.vstar], 1
    elif construction == "single":
        if len(sources) != 1:
            raise GraphError("the single-source construction needs exactly one source")
        aux = build_aux_single(g, sources[0])
        start, offset = sources, 0
    else:
        raise ValueError(f"unknown construction {construction!r}")

    trace = simulate(g, sources)
    aux_trace = simulate(aux.graph, start, allow_disconnected=True)
    n = g.n

    if offset:
        expected = tuple((aux.vstar, s) for s in sorted(sources))
        if aux_trace.round(1) != expected:
            return Correspondence(False, (0, None, "virtual source round differs"), {})

    mirror_events: dict[int, int] = {}
    last = max(trace.rounds_count, aux_trace.rounds_count - offset)
    for i in range(1, last + 1):
        projected = set()
        for x, y in aux_trace.round(i + offset):
            xo, xr = aux.origin(x)
            yo, yr = aux.origin(y)
            if xr == "vstar" or yr == "vstar":
                return Correspondence(False, (i, (x, y), "virtual source active"), mirror_events)
            if xr == "mirror" and yr == "primary":
                return Correspondence(False, (i, (xo, yo), "mirror sent to primary"), mirror_events)
            if yr == "mirror":
                mirror_events[i] = mirror_events.get(i, 0) + 1
            projected.add((xo, yo))
        actual = set(trace.round(i))
        if projected != actual:
            diff = sorted(projected ^ actual)[0]
            reason = "missing in auxiliary trace" if diff in actual else "extra in auxiliary trace"
            return Correspondence(False, (i, diff, reason), mirror_events)
    return Correspondence(True, None, mirror_events)
