"""Undirected simple graphs over dense integer node ids, plus BFS machinery.

Adjacency is kept twice: as sorted neighbor tuples for readable iteration and
as integer bitmasks (bit ``u`` of ``mask(v)`` set iff ``{u, v}`` is an edge)
for the subset-heavy search code.  Python integers are unbounded, so the
bitmask rows work for any node count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or an operation precondition violated."""


class GraphFormatError(GraphError):
    """The graph text could not be parsed."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(nodes: Iterable[int]) -> int:
    mask = 0
    for v in nodes:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable undirected simple graph on nodes ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"node count must be nonnegative, got {n}")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        masks = [0] * n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.masks: tuple[int, ...] = tuple(masks)
        self._adj = tuple(tuple(bits(m)) for m in masks)

    @classmethod
    def from_edge_mask(cls, n: int, edge_mask: int) -> "Graph":
        """Build the graph whose edges are the set bits of ``edge_mask``.

        Bit ``i`` refers to the ``i``-th pair in ``pair_index(n)``.
        """
        pairs = pair_index(n)
        return cls(n, (pairs[i] for i in bits(edge_mask)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError(f"a cycle needs at least 3 nodes, got {n}")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def star(cls, n: int) -> "Graph":
        return cls(n, ((0, v) for v in range(1, n)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighborhood(self, mask: int) -> int:
        """Union of the neighbor sets of the nodes in ``mask``."""
        out = 0
        masks = self.masks
        for v in bits(mask):
            out |= masks[v]
        return out

    def check_node(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"node id {v!r} out of range for n={self.n}")

    def edge_mask(self) -> int:
        """Inverse of ``from_edge_mask``."""
        index = {p: i for i, p in enumerate(pair_index(self.n))}
        return to_mask(index[e] for e in self.edges)

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Connected components as node bitmasks, ordered by smallest member."""
        comps = []
        left = self.full_mask
        while left:
            comp = _reach(self.masks, left & -left)
            comps.append(comp)
            left &= ~comp
        return tuple(comps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


_PAIR_CACHE: dict[int, tuple[tuple[int, int], ...]] = {}


def pair_index(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs ``(u, v)`` with ``u < v < n`` in lexicographic order."""
    pairs = _PAIR_CACHE.get(n)
    if pairs is None:
        pairs = tuple((u, v) for u in range(n) for v in range(u + 1, n))
        _PAIR_CACHE[n] = pairs
    return pairs


def _reach(masks, start: int) -> int:
    reached = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~reached
        reached |= frontier
    return reached


def level_masks(masks, roots: int) -> list[int]:
    """BFS layers from the root mask: element ``d`` holds the nodes at distance ``d``."""
    layers = [roots]
    reached = frontier = roots
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~reached
        if not frontier:
            return layers
        reached |= frontier
        layers.append(frontier)


def cover_radius(masks, full: int, roots: int) -> int | None:
    """``max_v d(v, roots)`` over the whole node set, or None if some node is unreachable."""
    reached = frontier = roots
    r = 0
    while reached != full:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~reached
        if not frontier:
            return None
        reached |= frontier
        r += 1
    return r


@dataclass(frozen=True)
class DistanceField:
    """Hop distances to the nearest root; ``None`` marks unreachable nodes."""

    roots: frozenset[int]
    dist: tuple[int | None, ...]

    def __getitem__(self, v: int) -> int | None:
        return self.dist[v]

    @property
    def reachable(self) -> bool:
        return all(d is not None for d in self.dist)

    def max_finite(self) -> int:
        return max(d for d in self.dist if d is not None)


def _root_mask(g: Graph, roots: Iterable[int]) -> int:
    roots = list(roots)
    if not roots:
        raise GraphError("root set must be nonempty")
    for r in roots:
        g.check_node(r)
    return to_mask(roots)


def bfs(g: Graph, roots: Iterable[int]) -> DistanceField:
    rmask = _root_mask(g, roots)
    dist: list[int | None] = [None] * g.n
    for d, layer in enumerate(level_masks(g.masks, rmask)):
        for v in bits(layer):
            dist[v] = d
    return DistanceField(frozenset(bits(rmask)), tuple(dist))


def eccentricity(g: Graph, v: int) -> int:
    """Largest distance from ``v`` to a node of its own connected component."""
    g.check_node(v)
    return len(level_masks(g.masks, 1 << v)) - 1


def is_connected(g: Graph) -> bool:
    return g.n > 0 and _reach(g.masks, 1) == g.full_mask


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph must be connected")


def radius_diameter(g: Graph) -> tuple[int, int]:
    require_connected(g)
    eccs = [len(level_masks(g.masks, 1 << v)) - 1 for v in range(g.n)]
    return min(eccs), max(eccs)


@dataclass(frozen=True)
class Bipartition:
    """Outcome of a 2-coloring attempt.

    On success ``parts`` holds the two color classes (the class of node 0
    first); otherwise ``odd_cycle`` lists the nodes of an odd cycle in order.
    """

    bipartite: bool
    parts: tuple[frozenset[int], frozenset[int]] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> Bipartition:
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return Bipartition(False, odd_cycle=_odd_cycle(u, w, parent, depth))
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(True, parts=(side0, side1))


def _odd_cycle(u, w, parent, depth):
    # u and w share a color so their BFS depths are equal; climb to the common ancestor.
    left, right = [u], [w]
    while depth[u] > depth[w]:
        u = parent[u]
        left.append(u)
    while depth[w] > depth[u]:
        w = parent[w]
        right.append(w)
    while u != w:
        u, w = parent[u], parent[w]
        left.append(u)
        right.append(w)
    right.pop()
    return tuple(left + right[::-1])


@dataclass(frozen=True)
class EdgeClass:
    """Cross/forward tag for every edge relative to a root set."""

    roots: frozenset[int]
    tags: dict[tuple[int, int], str]

    @property
    def cross(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, t in self.tags.items() if t == "cross")

    @property
    def forward(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, t in self.tags.items() if t == "forward")


def classify_edges(g: Graph, roots: Iterable[int]) -> EdgeClass:
    field = bfs(g, roots)
    if not field.reachable:
        missing = [v for v, d in enumerate(field.dist) if d is None]
        raise GraphError(f"nodes {missing} are unreachable from the roots")
    d = field.dist
    tags = {(u, v): "cross" if d[u] == d[v] else "forward" for u, v in g.edges}
    return EdgeClass(field.roots, tags)


# --- text format -----------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.startswith("#") or not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: not an integer pair: {line!r}") from None
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise GraphFormatError("header values must be nonnegative")
    edges = rows[1:]
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Graph(n, ((u, v) for _, u, v in edges))
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(g))
