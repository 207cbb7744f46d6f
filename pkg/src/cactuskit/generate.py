"""Seeded instance generators.

All kinds are deterministic for a fixed seed and always produce a
connected simple graph:

- ``random``: uniform random labeled tree (Prüfer decoding) plus
  ``extra_edges`` distinct non-tree edges.
- ``cactus-plus``: a cactus grown by attaching bridge or cycle blocks
  (cycle lengths 3..6) at random vertices, plus ``extra_edges`` noise
  edges that usually break the cactus property.
- ``complete``: all pairs.
- ``cycle-chord``: the n-cycle plus the single chord (2, (2 + n//2) mod n);
  at n = 6 this is the hexagon-with-one-chord instance used as a golden.
"""

from __future__ import annotations

import heapq
from random import Random

from .errors import InfeasibleParams
from .graph import Graph, build_graph

KINDS = ("random", "cactus-plus", "complete", "cycle-chord")


def _prufer_tree(rng: Random, n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _add_extras(rng: Random, n: int, edges: list[tuple[int, int]], extra: int) -> None:
    present = {(min(u, v), max(u, v)) for u, v in edges}
    free = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    if extra > len(free):
        raise InfeasibleParams(
            f"asked for {extra} extra edges, only {len(free)} vertex pairs are free"
        )
    edges.extend(sorted(rng.sample(free, extra)))


def gen_instance(kind: str, n: int, extra_edges: int = 0, seed: int = 0) -> Graph:
    if n < 1:
        raise InfeasibleParams(f"need at least one vertex, got n={n}")
    if extra_edges < 0:
        raise InfeasibleParams(f"extra_edges must be nonnegative, got {extra_edges}")
    rng = Random(seed)
    if kind == "random":
        edges = _prufer_tree(rng, n)
        _add_extras(rng, n, edges, extra_edges)
    elif kind == "cactus-plus":
        edges = []
        cur = 1
        while cur < n:
            anchor = rng.randrange(cur)
            room = n - cur
            if room < 2 or rng.random() < 0.35:
                edges.append((anchor, cur))
                cur += 1
            else:
                c = rng.randint(3, min(6, room + 1))
                ring = [anchor] + list(range(cur, cur + c - 1))
                for i in range(len(ring)):
                    edges.append((ring[i], ring[(i + 1) % len(ring)]))
                cur += c - 1
        _add_extras(rng, n, edges, extra_edges)
    elif kind == "complete":
        if extra_edges:
            raise InfeasibleParams("the complete kind takes no extra edges")
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif kind == "cycle-chord":
        if extra_edges:
            raise InfeasibleParams("the cycle-chord kind takes no extra edges")
        if n < 4:
            raise InfeasibleParams(f"cycle-chord needs n >= 4, got {n}")
        edges = [(i, (i + 1) % n) for i in range(n)]
        edges.append((2, (2 + n // 2) % n))
    else:
        raise InfeasibleParams(f"unknown kind {kind!r}")
    return build_graph(n, edges)


def random_spanning_tree(g: Graph, seed: int = 0) -> tuple[int, ...]:
    """Edge ids of a random spanning tree, by shuffled greedy forest growth."""
    rng = Random(seed)
    order = list(range(g.m))
    rng.shuffle(order)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    picked = []
    for eid in order:
        u, v = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            picked.append(eid)
    assert len(picked) == g.n - 1, "host graph must be connected"
    return tuple(sorted(picked))
