"""Maximum matching on small general graphs.

max_matching is an exact blossom (odd-cycle contraction) search, cubic in
the node count, with a fixed ascending scan order so repeated runs select
the same matching. brute_matching is the independent subset-enumeration
oracle used to cross-check it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DuplicateEdge, LoopEdge, TooLargeForOracle, VertexOutOfRange

ORACLE_EDGE_CAP = 20


@dataclass(frozen=True)
class MatchingInstance:
    """Simple graph for matching; tags ride along to map selected edges
    back to whatever the caller is choosing between."""

    num_nodes: int
    edges: tuple[tuple[int, int], ...]
    tags: tuple[object, ...]


def matching_instance(num_nodes: int, edges, tags=None) -> MatchingInstance:
    pairs = []
    seen = set()
    for u, v in edges:
        if not (0 <= u < num_nodes):
            raise VertexOutOfRange(u, num_nodes)
        if not (0 <= v < num_nodes):
            raise VertexOutOfRange(v, num_nodes)
        if u == v:
            raise LoopEdge(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(u, v)
        seen.add(key)
        pairs.append((u, v))
    if tags is None:
        tags = tuple(range(len(pairs)))
    else:
        tags = tuple(tags)
        if len(tags) != len(pairs):
            raise ValueError("one tag per edge required")
    return MatchingInstance(num_nodes=num_nodes, edges=tuple(pairs), tags=tags)


@dataclass(frozen=True)
class Matching:
    """Selected edge ids (into the instance's edge list), pairwise
    node-disjoint, sorted ascending."""

    edge_ids: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edge_ids)


def max_matching(inst: MatchingInstance) -> Matching:
    n = inst.num_nodes
    adj: list[list[int]] = [[] for _ in range(n)]
    pair_to_eid: dict[tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(inst.edges):
        adj[u].append(v)
        adj[v].append(u)
        pair_to_eid[(u, v) if u < v else (v, u)] = eid
    for a in adj:
        a.sort()

    match = [-1] * n
    p = [-1] * n
    base = list(range(n))

    def find_base_lca(a: int, b: int) -> int:
        mark = [False] * n
        x = base[a]
        while True:
            mark[x] = True
            if match[x] == -1:
                break
            x = base[p[match[x]]]
        y = base[b]
        while not mark[y]:
            y = base[p[match[y]]]
        return y

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def try_augment(root: int) -> bool:
        used = [False] * n
        for i in range(n):
            p[i] = -1
            base[i] = i
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = find_base_lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        w = to
                        while w != -1:
                            pv = p[w]
                            nxt = match[pv]
                            match[w] = pv
                            match[pv] = w
                            w = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            try_augment(v)

    chosen = []
    for v in range(n):
        w = match[v]
        if w > v:
            chosen.append(pair_to_eid[(v, w)])
    chosen.sort()
    # node-disjointness of the selection, by construction of match[]
    touched: set[int] = set()
    for eid in chosen:
        u, v = inst.edges[eid]
        assert u not in touched and v not in touched
        touched.add(u)
        touched.add(v)
    return Matching(edge_ids=tuple(chosen))


def brute_matching(inst: MatchingInstance) -> int:
    """Maximum matching size by branching over the edge list."""
    m = len(inst.edges)
    if m > ORACLE_EDGE_CAP:
        raise TooLargeForOracle(m, ORACLE_EDGE_CAP)
    edges = inst.edges

    best = 0

    def rec(i: int, used_mask: int, size: int) -> None:
        nonlocal best
        if size + (m - i) <= best:
            return
        if i == m:
            best = max(best, size)
            return
        u, v = edges[i]
        if not (used_mask >> u) & 1 and not (used_mask >> v) & 1:
            rec(i + 1, used_mask | (1 << u) | (1 << v), size + 1)
        rec(i + 1, used_mask, size)

    rec(0, 0, 0)
    return best
