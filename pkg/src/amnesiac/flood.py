"""Synchronous amnesiac flooding.

In round 1 every source sends to all of its neighbors.  In every later round a
node that received at least one copy in the previous round forwards it to the
neighbors it did *not* hear from; a node that heard from all of its neighbors
stays silent.  The run ends at the first round in which nobody sends.

Round ``i`` in a trace holds the messages sent in round ``i``; a message is
received in the round it is sent, so a node at distance ``d`` from a single
source first receives in round ``d``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bits, is_connected, level_masks


class RoundCapExceeded(RuntimeError):
    """A simulation ran past its safety cap (never expected; indicates a bug)."""


def source_mask(g: Graph, sources: Iterable[int]) -> int:
    """Validate a source set and return it as a node bitmask."""
    nodes = list(sources)
    if not nodes:
        raise GraphError("source set must be nonempty")
    for v in nodes:
        g.check_node(v)
    if len(set(nodes)) != len(nodes):
        raise GraphError(f"duplicate nodes in source set {nodes}")
    mask = 0
    for v in nodes:
        mask |= 1 << v
    return mask


def _round_cap(masks, n: int) -> int:
    # 2n + Diam + 2, with Diam taken as the largest component diameter.
    diam = max((len(level_masks(masks, 1 << v)) - 1 for v in range(n)), default=0)
    return 2 * n + diam + 2


def run_mask(masks, n: int, smask: int, record: bool = False):
    """Core loop over bitmask adjacency rows.

    Returns ``(rounds, messages, trace)``; ``trace`` is None unless ``record``.
    No validation is performed here.
    """
    senders = [(s, masks[s]) for s in bits(smask) if masks[s]]
    trace = [] if record else None
    rounds = total = 0
    # Flood time never exceeds 2n - 1, so the exact cap only needs computing
    # once the count passes the smallest value it could take.
    cap = 2 * n + 2
    cap_exact = False
    while senders:
        rounds += 1
        if rounds > cap:
            if cap_exact:
                raise RoundCapExceeded(f"no termination after {cap} rounds")
            cap = _round_cap(masks, n)
            cap_exact = True
            if rounds > cap:
                raise RoundCapExceeded(f"no termination after {cap} rounds")
        recv = [0] * n
        events = [] if record else None
        for u, out in senders:
            total += out.bit_count()
            ubit = 1 << u
            for v in bits(out):
                recv[v] |= ubit
                if record:
                    events.append((u, v))
        if record:
            trace.append(tuple(events))
        senders = [(v, masks[v] & ~r) for v, r in enumerate(recv) if r and r != masks[v]]
    return rounds, total, trace


@dataclass(frozen=True)
class FloodTrace:
    """Per-round directed message events, each round sorted by (sender, receiver).

    ``rounds[0]`` is round 1.
    """

    rounds: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def rounds_count(self) -> int:
        return len(self.rounds)

    @property
    def total_messages(self) -> int:
        return sum(len(r) for r in self.rounds)

    def round(self, i: int) -> tuple[tuple[int, int], ...]:
        """Events of round ``i`` (1-based); empty past the end."""
        if 1 <= i <= len(self.rounds):
            return self.rounds[i - 1]
        return ()

    def to_jsonl(self) -> str:
        lines = [
            json.dumps({"round": i, "messages": [list(e) for e in events]})
            for i, events in enumerate(self.rounds, 1)
        ]
        lines.append(json.dumps({"summary": {"rounds": self.rounds_count,
                                             "messages": self.total_messages}}))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "FloodTrace":
        rounds = []
        summary = None
        for line in text.splitlines():
            if not line.strip():
                continue
            obj = json.loads(line)
            if "summary" in obj:
                summary = obj["summary"]
                continue
            if obj["round"] != len(rounds) + 1:
                raise ValueError(f"round {obj['round']} out of sequence")
            rounds.append(tuple((u, v) for u, v in obj["messages"]))
        trace = cls(tuple(rounds))
        if summary is not None and (summary["rounds"], summary["messages"]) != (
                trace.rounds_count, trace.total_messages):
            raise ValueError("summary line disagrees with the recorded rounds")
        return trace


def _prepare(g: Graph, sources, allow_disconnected: bool) -> int:
    smask = source_mask(g, sources)
    if not allow_disconnected and not is_connected(g):
        raise GraphError("graph must be connected")
    return smask


def simulate(g: Graph, sources: Iterable[int], *, allow_disconnected: bool = False) -> FloodTrace:
    """Run amnesiac flooding from ``sources`` and record every message.

    ``allow_disconnected`` lifts the connectivity precondition; auxiliary
    graphs of bipartite inputs need it.
    """
    smask = _prepare(g, sources, allow_disconnected)
    _, _, trace = run_mask(g.masks, g.n, smask, record=True)
    return FloodTrace(tuple(trace))


def flood_rounds(g: Graph, sources: Iterable[int], *, allow_disconnected: bool = False) -> int:
    smask = _prepare(g, sources, allow_disconnected)
    return run_mask(g.masks, g.n, smask)[0]


def message_count(g: Graph, sources: Iterable[int], *, allow_disconnected: bool = False) -> int:
    smask = _prepare(g, sources, allow_disconnected)
    return run_mask(g.masks, g.n, smask)[1]


def last_receipt_rounds(g: Graph, v0: int) -> dict[int, int]:
    """Round in which each node receives its last copy when ``v0`` floods alone.

    ``v0`` maps to 0 if it never hears the message back.
    """
    trace = simulate(g, [v0])
    last = {v: 0 for v in range(g.n)}
    for i, events in enumerate(trace.rounds, 1):
        for _, v in events:
            last[v] = i
    return last
