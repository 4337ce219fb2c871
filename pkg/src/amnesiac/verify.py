"""Exhaustive and randomized property suites over small connected graphs.

Each suite is a per-graph check returning ``(instances, failures)``.  Suites
run over every labeled connected graph with ``2 <= n <= n_max`` (edge bitmask
order), or over seeded random graphs when ``samples`` is given.  Exploratory
suites report what they find but never count as failed.
"""

from __future__ import annotations

import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Callable, Iterator

from .auxgraph import build_aux_multi, build_g_star, check_round_correspondence, flood_via_aux
from .centers import k_radius, spanning_tree_preserving_k_radius, subset_profile
from .flood import run_mask
from .graph import (
    Graph,
    GraphError,
    _reach,
    bits,
    cover_radius,
    eccentricity,
    is_bipartite,
    is_connected,
    pair_index,
    radius_diameter,
)

# Above this size thm1-equivalence only checks |S| <= 3 and S = V.
THM1_ALL_SUBSETS_MAX_N = 5
THM1_RANDOM_MAX_SOURCES = 3


def enumerate_connected(n: int, edges: int | None = None) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` nodes, by ascending edge bitmask.

    ``edges`` restricts the stream to graphs with that many edges.
    """
    if not 1 <= n <= 7:
        raise GraphError(f"enumeration supports 1 <= n <= 7, got {n}")
    pairs = pair_index(n)
    full = (1 << n) - 1
    if edges is None:
        candidates = range(1 << len(pairs))
    else:
        candidates = _same_popcount(len(pairs), edges)
    for em in candidates:
        if em.bit_count() < n - 1:
            continue
        adj = [0] * n
        for i in bits(em):
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if _reach(adj, 1) == full:
            yield Graph.from_edge_mask(n, em)


def _same_popcount(width: int, count: int) -> Iterator[int]:
    if count > width or count < 0:
        return
    if count == 0:
        yield 0
        return
    x = (1 << count) - 1
    limit = 1 << width
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def random_connected(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by resampling."""
    if n < 2:
        raise GraphError(f"n must be at least 2, got {n}")
    if not 0 < p <= 1:
        raise GraphError(f"p must be in (0, 1], got {p}")
    rng = random.Random(seed)
    pairs = pair_index(n)
    for _ in range(max_tries):
        g = Graph(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g
    raise GraphError(f"no connected sample after {max_tries} tries (p={p} too small?)")


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    return Graph(n, [(order[i], order[rng.randrange(i)]) for i in range(1, n)])


def random_bipartite_connected(n: int, p: float, seed: int) -> Graph:
    """Random spanning tree plus random edges between its two color classes."""
    rng = random.Random(seed)
    tree = random_tree(n, rng.randrange(1 << 30))
    side0, side1 = is_bipartite(tree).parts
    extra = [(u, v) for u in side0 for v in side1
             if not tree.has_edge(u, v) and rng.random() < p]
    return Graph(n, list(tree.edges) + extra)


def default_workers() -> int:
    env = os.environ.get("FLOOD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# --- per-graph checks ------------------------------------------------------

def _fail(g: Graph, params: dict, expected: str, observed: dict) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges], "params": params,
            "expected": expected, "observed": observed}


def _thm1_subsets(n: int) -> Iterator[tuple[int, ...]]:
    nodes = range(n)
    if n <= THM1_ALL_SUBSETS_MAX_N:
        for k in range(1, n + 1):
            yield from combinations(nodes, k)
    else:
        for k in range(1, min(3, n) + 1):
            yield from combinations(nodes, k)
        if n > 3:
            yield tuple(nodes)


def check_thm1(g: Graph, subsets=None, correspondence: bool | None = None):
    """Flood time equals the auxiliary eccentricity minus one, the
    ``d(S,V) + 1 + Diam`` bound holds, and the message count is m or 2m."""
    _, diam = radius_diameter(g)
    if subsets is None:
        subsets = _thm1_subsets(g.n)
    if correspondence is None:
        correspondence = g.n <= THM1_ALL_SUBSETS_MAX_N
    failures, checked = [], 0
    for s in subsets:
        checked += 1
        smask = sum(1 << v for v in s)
        rounds, msgs, _ = run_mask(g.masks, g.n, smask)
        aux = build_aux_multi(g, s)
        via_aux = eccentricity(aux.graph, aux.vstar) - 1
        cover = cover_radius(g.masks, g.full_mask, smask)
        star_bip = bool(is_bipartite(build_g_star(g, s).graph))
        params = {"S": list(s)}
        if rounds != via_aux:
            failures.append(_fail(g, params, "Flood_G(S) == ecc_aux(v*) - 1",
                                  {"rounds": rounds, "aux": via_aux}))
        if rounds > cover + 1 + diam:
            failures.append(_fail(g, params, "Flood_G(S) <= d(S,V) + 1 + Diam",
                                  {"rounds": rounds, "cover": cover, "diam": diam}))
        if msgs != (g.m if star_bip else 2 * g.m):
            failures.append(_fail(g, params, "messages == m iff G*(S) bipartite, else 2m",
                                  {"messages": msgs, "m": g.m, "star_bipartite": star_bip}))
        if len(s) == 1 and flood_via_aux(g, s, construction="single") != rounds:
            failures.append(_fail(g, params, "Flood_G(v0) == ecc_G(v0)(v0)", {"rounds": rounds}))
        if correspondence:
            corr = check_round_correspondence(g, s)
            if not corr:
                failures.append(_fail(g, params, "round-by-round correspondence",
                                      {"divergence": repr(corr.divergence)}))
    return checked, failures


def _single_source_rounds(g: Graph) -> list[int]:
    return [run_mask(g.masks, g.n, 1 << v)[0] for v in range(g.n)]


def check_cor1(g: Graph):
    """Bipartite: a single-source flood takes exactly ecc(v0) rounds; Flood_1 = Rad."""
    if not is_bipartite(g):
        return 0, []
    failures = []
    floods = _single_source_rounds(g)
    eccs = [eccentricity(g, v) for v in range(g.n)]
    for v in range(g.n):
        if floods[v] != eccs[v]:
            failures.append(_fail(g, {"v0": v}, "Flood(v0) == ecc(v0)",
                                  {"rounds": floods[v], "ecc": eccs[v]}))
    if min(floods) != min(eccs):
        failures.append(_fail(g, {}, "Flood_1 == Rad", {"flood_1": min(floods), "rad": min(eccs)}))
    return g.n, failures


def check_thm6(g: Graph):
    """Single source: Rad < Flood(v0) <= ecc(v0) + Diam + 1 off bipartite graphs,
    and Flood_1 == Rad exactly for bipartite graphs."""
    bip = bool(is_bipartite(g))
    floods = _single_source_rounds(g)
    eccs = [eccentricity(g, v) for v in range(g.n)]
    rad, diam = min(eccs), max(eccs)
    failures = []
    if not bip:
        for v in range(g.n):
            if not rad < floods[v] <= eccs[v] + diam + 1:
                failures.append(_fail(g, {"v0": v}, "Rad < Flood(v0) <= ecc(v0) + Diam + 1",
                                      {"rounds": floods[v], "ecc": eccs[v], "rad": rad, "diam": diam}))
        if not rad < min(floods) <= rad + diam + 1:
            failures.append(_fail(g, {}, "Rad < Flood_1 <= Rad + Diam + 1",
                                  {"flood_1": min(floods), "rad": rad, "diam": diam}))
    if (min(floods) == rad) != bip:
        failures.append(_fail(g, {}, "Flood_1 == Rad iff bipartite",
                              {"flood_1": min(floods), "rad": rad, "bipartite": bip}))
    return g.n, failures


def check_thm2(g: Graph):
    """r_k <= Flood_k <= r_ni_k + 1 <= r_{k//2} + 1 (k > 1); Flood_k == 1 exactly
    for k = n or a bipartition side of size k; the <= 2 and <= 3 regimes."""
    prof = subset_profile(g)
    n = g.n
    bip = is_bipartite(g)
    sides = {len(p) for p in bip.parts} if bip else set()
    delta = g.min_degree()
    failures = []
    for k in range(1, n + 1):
        fk, rk = prof.flood_k(k), prof.r(k)
        params = {"k": k}
        if k > 1:
            rni, rhalf = prof.r_ni(k), prof.r(k // 2)
            if rni is not None and not rk <= fk <= rni + 1 <= rhalf + 1:
                failures.append(_fail(g, params, "r_k <= Flood_k <= r_ni_k + 1 <= r_{k//2} + 1",
                                      {"r_k": rk, "flood_k": fk, "r_ni_k": rni, "r_half": rhalf}))
        if (fk == 1) != (k == n or k in sides):
            failures.append(_fail(g, params, "Flood_k == 1 iff k == n or bipartite side of size k",
                                  {"flood_k": fk, "sides": sorted(sides)}))
        if (3 * k >= 2 * n or (delta >= 3 and 2 * k >= n)) and fk > 2:
            failures.append(_fail(g, params, "Flood_k <= 2 if k >= 2n/3 or (delta >= 3 and k >= n/2)",
                                  {"flood_k": fk, "delta": delta}))
        if 2 * k >= n and fk > 3:
            failures.append(_fail(g, params, "Flood_k <= 3 if k >= n/2", {"flood_k": fk}))
    return n, failures


def check_thm3(g: Graph):
    """Non-bipartite: Flood_k >= r_k + 1; Flood_k == 2 iff r_ni_k == 1 (k > 1);
    Flood_k >= Rad/k + 1/2; monotone in k and under adding a source."""
    if is_bipartite(g):
        return 0, []
    prof = subset_profile(g)
    n = g.n
    rad, _ = radius_diameter(g)
    failures = []
    fks = {k: prof.flood_k(k) for k in range(1, n + 1)}
    for k in range(1, n + 1):
        fk, rk = fks[k], prof.r(k)
        params = {"k": k}
        if fk < rk + 1:
            failures.append(_fail(g, params, "Flood_k >= r_k + 1", {"flood_k": fk, "r_k": rk}))
        if k > 1 and (fk == 2) != (prof.r_ni(k) == 1):
            failures.append(_fail(g, params, "Flood_k == 2 iff r_ni_k == 1",
                                  {"flood_k": fk, "r_ni_k": prof.r_ni(k)}))
        if Fraction(fk) < Fraction(rad, k) + Fraction(1, 2):
            failures.append(_fail(g, params, "Flood_k >= Rad/k + 1/2", {"flood_k": fk, "rad": rad}))
        if k < n and fks[k + 1] > fk:
            failures.append(_fail(g, params, "Flood_{k+1} <= Flood_k",
                                  {"flood_k": fk, "flood_k1": fks[k + 1]}))
    checked = n
    full = g.full_mask
    for s in range(1, full):
        for v in bits(full & ~s):
            checked += 1
            if prof.flood[s | 1 << v] > prof.flood[s]:
                failures.append(_fail(g, {"S": list(bits(s)), "v": v}, "Flood(S + v) <= Flood(S)",
                                      {"flood_S": prof.flood[s], "flood_Sv": prof.flood[s | 1 << v]}))
    return checked, failures


def check_thm4(g: Graph):
    """Bipartite: Flood_k == r_k iff some k-center lies in one side; the gap is
    at most 1 for k <= max side size and at most 2 always."""
    bip = is_bipartite(g)
    if not bip:
        return 0, []
    prof = subset_profile(g)
    side_masks = [sum(1 << v for v in p) for p in bip.parts]
    big = max(len(p) for p in bip.parts)
    failures = []
    for k in range(1, g.n + 1):
        fk, rk = prof.flood_k(k), prof.r(k)
        one_sided = any(prof.cover[s] == rk and any(s & ~side == 0 for side in side_masks)
                        for s in prof.masks_of_size(k))
        params = {"k": k}
        if (fk == rk) != one_sided:
            failures.append(_fail(g, params, "Flood_k == r_k iff a one-sided k-center exists",
                                  {"flood_k": fk, "r_k": rk, "one_sided": one_sided}))
        if k <= big and fk - rk > 1:
            failures.append(_fail(g, params, "Flood_k - r_k <= 1 for k <= max(|V1|,|V2|)",
                                  {"flood_k": fk, "r_k": rk}))
        if fk - rk > 2:
            failures.append(_fail(g, params, "Flood_k - r_k <= 2", {"flood_k": fk, "r_k": rk}))
    return g.n, failures


def check_tree_radius(g: Graph):
    """Trees: k * r_k(T) >= Rad(T) - k/2."""
    if g.m != g.n - 1:
        return 0, []
    prof = subset_profile(g, with_flood=False)
    rad, _ = radius_diameter(g)
    failures = []
    for k in range(1, g.n + 1):
        rk = prof.r(k)
        if 2 * k * rk < 2 * rad - k:
            failures.append(_fail(g, {"k": k}, "k r_k(T) >= Rad(T) - k/2", {"r_k": rk, "rad": rad}))
    return g.n, failures


def check_ni_half(g: Graph):
    """r_ni_k <= 2 whenever k >= n/2 (k >= 2)."""
    prof = subset_profile(g, with_flood=False)
    failures, checked = [], 0
    for k in range(max(2, (g.n + 1) // 2), g.n + 1):
        checked += 1
        rni = prof.r_ni(k)
        if rni is None or rni > 2:
            failures.append(_fail(g, {"k": k}, "r_ni_k <= 2 for k >= n/2", {"r_ni_k": rni}))
    return checked, failures


def check_total_domination_bound(g: Graph):
    """gamma_t <= 2n/3 for connected graphs with n >= 3."""
    if g.n < 3:
        return 0, []
    gamma = subset_profile(g, with_flood=False).total_domination()
    if 3 * gamma > 2 * g.n:
        return 1, [_fail(g, {}, "gamma_t <= 2n/3", {"gamma_t": gamma})]
    return 1, []


def check_span_tree(g: Graph):
    """For each k the constructed spanning tree keeps the k-radius."""
    failures = []
    for k in range(1, g.n + 1):
        t = spanning_tree_preserving_k_radius(g, k)
        spanning = (t.m == g.n - 1 and is_connected(t) and set(t.edges) <= set(g.edges))
        rg, rt = k_radius(g, k).value, k_radius(t, k).value
        if not spanning or rg != rt:
            failures.append(_fail(g, {"k": k, "tree": [list(e) for e in t.edges]},
                                  "spanning tree T with r_k(T) == r_k(G)",
                                  {"spanning": spanning, "r_k_G": rg, "r_k_T": rt}))
    return g.n, failures


def _triangle_free(g: Graph) -> bool:
    return all(not (g.masks[u] & g.masks[v]) for u, v in g.edges)


def check_triangle_free(g: Graph):
    """Triangle-free non-bipartite: Flood_k <= 2(n-1)/(delta(k//2 + 1)) + 5 for 1 < k < n."""
    if is_bipartite(g) or not _triangle_free(g):
        return 0, []
    prof = subset_profile(g)
    delta = g.min_degree()
    failures, checked = [], 0
    for k in range(2, g.n):
        checked += 1
        fk = prof.flood_k(k)
        if Fraction(fk) > Fraction(2 * (g.n - 1), delta * (k // 2 + 1)) + 5:
            failures.append(_fail(g, {"k": k}, "Flood_k <= 2(n-1)/(delta(k//2+1)) + 5",
                                  {"flood_k": fk, "delta": delta}))
    return checked, failures


def check_conjecture(g: Graph):
    """Non-bipartite: k * Flood_k >= Rad + k - 1 for 1 <= k < n (open conjecture).

    ``k = n`` fails whenever Rad >= 2 since Flood_n = 1; those cases are kept
    apart as degenerate findings.
    """
    if is_bipartite(g):
        return 0, [], []
    prof = subset_profile(g)
    rad, _ = radius_diameter(g)
    violations, degenerate = [], []
    for k in range(1, g.n + 1):
        fk = prof.flood_k(k)
        if k * fk < rad + k - 1:
            record = _fail(g, {"k": k}, "k Flood_k >= Rad + k - 1", {"flood_k": fk, "rad": rad})
            (degenerate if k == g.n else violations).append(record)
    return g.n - 1, violations, degenerate


def find_anticenter(g: Graph):
    """Graphs where no central node attains Flood_1 (exploratory finding, not a failure)."""
    floods = _single_source_rounds(g)
    eccs = [eccentricity(g, v) for v in range(g.n)]
    rad = min(eccs)
    central = [v for v in range(g.n) if eccs[v] == rad]
    best_central = min(floods[v] for v in central)
    flood_1 = min(floods)
    if best_central > flood_1:
        return 1, [_fail(g, {"central": central}, "a central node attains Flood_1",
                         {"flood_1": flood_1, "best_central": best_central, "rad": rad,
                          "optimal_sources": [v for v in range(g.n) if floods[v] == flood_1]})]
    return 1, []


# --- suite registry --------------------------------------------------------

def _random_gnp(n: int, rng: random.Random) -> Graph:
    p = rng.uniform(min(1.0, 1.5 * max(1.0, math.log(n)) / n), 1.0)
    return random_connected(n, p, rng.randrange(1 << 30))


def _random_bipartite(n: int, rng: random.Random) -> Graph:
    return random_bipartite_connected(n, rng.uniform(0.0, 0.5), rng.randrange(1 << 30))


def _random_thm1(g: Graph, rng: random.Random):
    size = rng.randint(1, min(THM1_RANDOM_MAX_SOURCES, g.n))
    s = tuple(sorted(rng.sample(range(g.n), size)))
    return check_thm1(g, subsets=[s], correspondence=True)


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable
    exploratory: bool = False
    # Random mode: graph generator and a per-sample check taking (graph, rng).
    random_graph: Callable | None = None
    random_check: Callable | None = None
    trees_only: bool = False
    # Findings are phenomena, not violations.
    findings_only: bool = False


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("thm1-equivalence", check_thm1, random_graph=_random_gnp, random_check=_random_thm1),
    Suite("cor1-bipartite", check_cor1, random_graph=_random_bipartite,
          random_check=lambda g, rng: check_cor1(g)),
    Suite("thm6-single-source", check_thm6, random_graph=_random_gnp,
          random_check=lambda g, rng: check_thm6(g)),
    Suite("thm2-bounds", check_thm2),
    Suite("thm3-nonbip", check_thm3),
    Suite("thm4-bipartite-gap", check_thm4),
    Suite("lemma-tree-radius", check_tree_radius, trees_only=True),
    Suite("lemma-ni-half", check_ni_half),
    Suite("bound-total-domination", check_total_domination_bound),
    Suite("lemma-span-tree", check_span_tree),
    Suite("corr-trianglefree", check_triangle_free),
    Suite("conjecture-scan", check_conjecture, exploratory=True),
    Suite("anticenter-search", find_anticenter, exploratory=True, findings_only=True),
]}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    exploratory: bool = False
    graphs: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def gating_failure(self) -> bool:
        return bool(self.failures) and not self.exploratory

    def line(self) -> str:
        return f"suite={self.name} checked={self.checked} failures={len(self.failures)}"

    def report(self) -> str:
        lines = [self.line() + f" graphs={self.graphs} findings={len(self.findings)}"
                 + (" exploratory" if self.exploratory else "")]
        lines += ["failure " + json.dumps(f, sort_keys=True) for f in self.failures]
        lines += ["finding " + json.dumps(f, sort_keys=True) for f in self.findings]
        return "\n".join(lines) + "\n"


def _graph_stream(suite: Suite, n_min: int, n_max: int) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n, edges=n - 1 if suite.trees_only else None)


def _map(fn, items, workers: int):
    if workers <= 1:
        return map(fn, items)
    pool = ProcessPoolExecutor(workers)
    try:
        return list(pool.map(fn, items, chunksize=256))
    finally:
        pool.shutdown()


def _random_task(name: str, seed: int, n_max: int, i: int):
    suite = SUITES[name]
    rng = random.Random(f"{name}:{seed}:{i}")
    g = suite.random_graph(rng.randint(2, n_max), rng)
    return g, suite.random_check(g, rng)


def run_suite(name: str, n_max: int, *, n_min: int = 2, seed: int | None = None,
              samples: int | None = None, workers: int | None = None) -> SuiteResult:
    """Run one suite exhaustively (default) or on ``samples`` seeded random graphs."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    suite = SUITES[name]
    workers = default_workers() if workers is None else workers
    result = SuiteResult(name, exploratory=suite.exploratory)
    if samples is not None:
        if suite.random_check is None:
            raise ValueError(f"suite {name!r} has no randomized mode")
        task = partial(_random_task, name, 0 if seed is None else seed, n_max)
        outcomes = (out for _, out in _map(task, range(samples), workers))
    else:
        if not 1 <= n_min <= n_max <= 7:
            raise GraphError(f"exhaustive suites need 1 <= n_min <= n_max <= 7, got {n_min}..{n_max}")
        outcomes = _map(suite.check, _graph_stream(suite, n_min, n_max), workers)
    for checked, problems, *extra in outcomes:
        result.graphs += 1
        result.checked += checked
        if suite.findings_only:
            result.findings.extend(problems)
        else:
            result.failures.extend(problems)
        for found in extra:
            result.findings.extend(found)
    return result
