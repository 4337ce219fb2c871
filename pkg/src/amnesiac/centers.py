"""Exact and greedy source-set selection.

The exact searches enumerate ``k``-subsets in lexicographic order and keep the
first optimum, so witnesses are the lexicographically smallest optimal sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .flood import run_mask
from .graph import (
    Graph,
    GraphError,
    bits,
    cover_radius,
    level_masks,
    require_connected,
    to_mask,
)

BRUTE_FORCE_LIMIT = 24


class SearchTooLarge(GraphError):
    """Exhaustive subset search refused for a graph above the size limit."""


@dataclass(frozen=True)
class CenterReport:
    objective: str
    k: int
    value: int
    witness: tuple[int, ...]

    def to_line(self) -> str:
        nodes = ",".join(map(str, self.witness))
        return f"{self.objective} {self.k} {self.value} witness={{{nodes}}}"


def _check_k(g: Graph, k: int, low: int = 1) -> None:
    if not (low <= k <= g.n):
        raise GraphError(f"k={k} out of range {low}..{g.n}")


def _check_search(g: Graph, force: bool) -> None:
    require_connected(g)
    if g.n > BRUTE_FORCE_LIMIT and not force:
        raise SearchTooLarge(f"n={g.n} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}; pass force=True")


def cover_of(g: Graph, nodes) -> int:
    """``d_G(U)``: largest distance from any node to the set."""
    r = cover_radius(g.masks, g.full_mask, to_mask(nodes))
    if r is None:
        raise GraphError("some node is unreachable from the set")
    return r


def no_isolated(masks, smask: int) -> bool:
    return all(masks[v] & smask for v in bits(smask))


def k_radius(g: Graph, k: int, *, force: bool = False) -> CenterReport:
    _check_k(g, k)
    _check_search(g, force)
    masks, full = g.masks, g.full_mask
    best = wit = None
    for combo in combinations(range(g.n), k):
        r = cover_radius(masks, full, to_mask(combo))
        if best is None or r < best:
            best, wit = r, combo
            if r == 0:
                break
    return CenterReport("k_radius", k, best, wit)


def ni_k_radius(g: Graph, k: int, *, force: bool = False) -> CenterReport | None:
    """Best cover radius over sets whose induced subgraph has no isolated node.

    Returns None when no such set of size ``k`` exists (always for ``k=1``).
    """
    _check_k(g, k)
    _check_search(g, force)
    masks, full = g.masks, g.full_mask
    best = wit = None
    for combo in combinations(range(g.n), k):
        smask = to_mask(combo)
        if not no_isolated(masks, smask):
            continue
        r = cover_radius(masks, full, smask)
        if best is None or r < best:
            best, wit = r, combo
    if best is None:
        return None
    return CenterReport("ni_k_radius", k, best, wit)


def total_domination_number(g: Graph, *, force: bool = False) -> CenterReport:
    if g.n < 2:
        raise GraphError("total domination needs at least 2 nodes")
    _check_search(g, force)
    masks, full = g.masks, g.full_mask
    for k in range(2, g.n + 1):
        for combo in combinations(range(g.n), k):
            dominated = 0
            for v in combo:
                dominated |= masks[v]
            if dominated == full:
                return CenterReport("total_domination", k, k, combo)
    raise AssertionError("a connected graph on >= 2 nodes is totally dominated by V")


def flood_k(g: Graph, k: int, *, force: bool = False) -> CenterReport:
    """Smallest flood time over all source sets of size ``k``.

    Sets whose cover radius already reaches the incumbent are skipped: a flood
    cannot finish before every node has been reached.
    """
    _check_k(g, k)
    _check_search(g, force)
    masks, full, n = g.masks, g.full_mask, g.n
    floor = 1 if n > 1 else 0
    best = wit = None
    for combo in combinations(range(n), k):
        smask = to_mask(combo)
        if best is not None and cover_radius(masks, full, smask) >= best:
            continue
        rounds = run_mask(masks, n, smask)[0]
        if best is None or rounds < best:
            best, wit = rounds, combo
            if best == floor:
                break
    return CenterReport("flood_k", k, best, wit)


def _distance_rows(g: Graph) -> list[list[int]]:
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        for d, layer in enumerate(level_masks(g.masks, 1 << v)):
            for u in bits(layer):
                row[u] = d
        rows.append(row)
    return rows


def greedy_k_center(g: Graph, k: int) -> CenterReport:
    """Farthest-point selection seeded with the lowest-id central node.

    Within a factor of two of the k-radius.
    """
    _check_k(g, k)
    require_connected(g)
    dist = _distance_rows(g)
    eccs = [max(row) for row in dist]
    first = eccs.index(min(eccs))
    chosen = [first]
    near = list(dist[first])
    for _ in range(k - 1):
        far = max((v for v in range(g.n) if v not in chosen), key=lambda v: (near[v], -v))
        chosen.append(far)
        near = [min(a, b) for a, b in zip(near, dist[far])]
    return CenterReport("greedy_k_center", k, max(near), tuple(sorted(chosen)))


def spanning_tree_preserving_k_radius(g: Graph, k: int, *, force: bool = False) -> Graph:
    """Spanning tree with the same k-radius as ``g``.

    Nodes are split by nearest center of a k-center (lower center index wins
    ties), each part gets a BFS tree from its center, and the parts are joined
    by the first connecting edges in edge order.
    """
    centers = k_radius(g, k, force=force).witness
    dist = _distance_rows(g)
    part = [min(range(k), key=lambda i: (dist[centers[i]][v], i)) for v in range(g.n)]

    tree = []
    for i, c in enumerate(centers):
        seen = {c}
        frontier = [c]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj(u):
                    if part[w] == i and w not in seen:
                        seen.add(w)
                        tree.append((u, w))
                        nxt.append(w)
            frontier = nxt

    root = list(range(g.n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, w in tree:
        root[find(u)] = find(w)
    for u, w in g.edges:
        ru, rw = find(u), find(w)
        if ru != rw:
            root[ru] = rw
            tree.append((u, w))
    if len(tree) != g.n - 1:
        raise AssertionError("partition cells were not connected")
    return Graph(g.n, tree)


@dataclass
class SubsetProfile:
    """Per-subset values for one graph, indexed by node bitmask.

    ``flood`` is filled only when requested; it dominates the cost.
    """

    g: Graph
    cover: list[int]
    no_isolated: list[bool]
    flood: list[int] | None

    def __post_init__(self):
        self._by_size = [[] for _ in range(self.g.n + 1)]
        for s in range(1, len(self.cover)):
            self._by_size[s.bit_count()].append(s)

    def masks_of_size(self, k: int) -> list[int]:
        return self._by_size[k]

    def r(self, k: int) -> int:
        return min(self.cover[s] for s in self.masks_of_size(k))

    def r_ni(self, k: int) -> int | None:
        vals = [self.cover[s] for s in self.masks_of_size(k) if self.no_isolated[s]]
        return min(vals) if vals else None

    def flood_k(self, k: int) -> int:
        return min(self.flood[s] for s in self.masks_of_size(k))

    def total_domination(self) -> int:
        full = self.g.full_mask
        return min(s.bit_count() for s in range(1, len(self.cover))
                   if self.g.neighborhood(s) == full)


def subset_profile(g: Graph, *, with_flood: bool = True) -> SubsetProfile:
    require_connected(g)
    n, masks, full = g.n, g.masks, g.full_mask
    size = 1 << n
    cover = [0] * size
    noiso = [False] * size
    flood = [0] * size if with_flood else None
    for s in range(1, size):
        cover[s] = cover_radius(masks, full, s)
        noiso[s] = no_isolated(masks, s)
        if with_flood:
            flood[s] = run_mask(masks, n, s)[0]
    return SubsetProfile(g, cover, noiso, flood)
