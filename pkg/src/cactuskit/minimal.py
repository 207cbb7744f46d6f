"""Cycle census and deletion-minimality reports for small graphs.

A connected non-cactus is edge-minimal when deleting any single edge
leaves a (connected) cactus.  For such graphs every pair of edges is
expected to lie on a common simple cycle; ``check_minimal`` tests that
claim exhaustively instead of assuming it, reporting one witness cycle
per edge pair.  Cycle enumeration is exponential, so inputs are capped
at 20 edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotConnected, TooManyEdges
from .graph import Graph, build_graph, edge_id_of, is_cactus, is_connected

CYCLE_EDGE_CAP = 20


@dataclass(frozen=True)
class PairCycleEntry:
    """Whether edges e1 and e2 lie on a common simple cycle."""

    e1: int
    e2: int
    common_cycle: bool
    witness: Optional[tuple[int, ...]]  # vertex sequence of one shared cycle


@dataclass(frozen=True)
class MinimalityReport:
    is_noncactus: bool
    is_edge_minimal: bool
    violating_edge: Optional[int]  # an edge whose deletion leaves a non-cactus
    pair_cycle_table: tuple[PairCycleEntry, ...]


def simple_cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Every simple cycle once, as a canonical vertex sequence.

    A cycle is reported rooted at its smallest vertex, walking first
    toward the smaller of that vertex's two cycle neighbors.  Paths are
    grown only through vertices larger than the root, so each cycle is
    found exactly twice and the direction test keeps one copy.
    """
    if g.m > CYCLE_EDGE_CAP:
        raise TooManyEdges(g.m, CYCLE_EDGE_CAP)
    adjv = [[w for w, _ in g.adj[v]] for v in range(g.n)]
    out: list[tuple[int, ...]] = []
    in_path = bytearray(g.n)
    for s in range(g.n):
        path = [s]
        iters = [0]
        in_path[s] = 1
        while path:
            v = path[-1]
            i = iters[-1]
            if i < len(adjv[v]):
                iters[-1] = i + 1
                w = adjv[v][i]
                if w == s and len(path) >= 3:
                    if path[1] < path[-1]:
                        out.append(tuple(path))
                elif w > s and not in_path[w]:
                    path.append(w)
                    iters.append(0)
                    in_path[w] = 1
            else:
                path.pop()
                iters.pop()
                in_path[v] = 0
    return tuple(out)


def _cycle_edge_ids(g: Graph, cycle: tuple[int, ...]) -> frozenset[int]:
    ids = []
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        eid = edge_id_of(g, u, v)
        assert eid is not None
        ids.append(eid)
    return frozenset(ids)


def check_minimal(g: Graph) -> MinimalityReport:
    """Decide edge-minimality by deletion, then audit the pair-cycle claim."""
    if g.m > CYCLE_EDGE_CAP:
        raise TooManyEdges(g.m, CYCLE_EDGE_CAP)
    if not is_connected(g):
        raise NotConnected("minimality is defined for connected graphs")
    if is_cactus(g).cactus:
        return MinimalityReport(
            is_noncactus=False, is_edge_minimal=False,
            violating_edge=None, pair_cycle_table=(),
        )
    violating = None
    for eid in range(g.m):
        rest_pairs = [e for i, e in enumerate(g.edges) if i != eid]
        rest = build_graph(g.n, rest_pairs)
        if not (is_connected(rest) and is_cactus(rest).cactus):
            violating = eid
            break
    cycles = simple_cycles(g)
    cycle_edges = [_cycle_edge_ids(g, c) for c in cycles]
    entries = []
    for e1 in range(g.m):
        for e2 in range(e1 + 1, g.m):
            witness = None
            for cyc, es in zip(cycles, cycle_edges):
                if e1 in es and e2 in es:
                    witness = cyc
                    break
            entries.append(PairCycleEntry(e1, e2, witness is not None, witness))
    return MinimalityReport(
        is_noncactus=True,
        is_edge_minimal=violating is None,
        violating_edge=violating,
        pair_cycle_table=tuple(entries),
    )
