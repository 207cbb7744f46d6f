"""Fewest edge deletions that leave a connected cactus.

Three exchangeable exact methods, used to cross-check each other:

- ``edc_subset_dp``: dynamic programming over vertex subsets.  For a
  connected subset X let I(X) be the largest edge count of a spanning
  connected cactus subgraph of G[X].  Tiny subsets are enumerated
  directly, cactus subsets keep every edge, and any other subset is
  split at a shared vertex x into two connected pieces whose optima
  add up.  Runs on a compiled kernel by default with a pure-Python
  reference engine kept for differential testing.
- ``edc_tree_enum``: every kept solution contains a spanning tree, so
  enumerate all spanning trees and solve the tree-augmentation problem
  for each, keeping the best.  Guarded by the determinant tree count.
- ``edc_brute_force``: descending-size sweep over kept edge subsets,
  for tiny instances only.

The environment variable ``CACTUSKIT_FAULT`` routes ``edc_subset_dp``
through a deliberately corrupted reference engine; the cross-validation
command is expected to catch the disagreement.  See ``find_max_cactus``
for the recognized fault names.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import (
    CrossCheckError,
    EmptySubset,
    LimitExceeded,
    NotConnected,
    NotConnectedSubset,
    PreconditionViolated,
    SubsetTooLarge,
    TooManyEdges,
    TooManyTrees,
    TooManyVertices,
)
from .graph import (
    Graph,
    build_graph,
    connected_cactus_edge_subset,
    induced_subgraph,
    is_cactus,
    is_connected,
    spanning_tree_from_ids,
)
from .tree_to_cactus import spanning_tree_to_cactus

BASE_CAP = 5  # subsets up to this size are solved by direct enumeration
BRUTE_EDGE_CAP = 20
DEFAULT_TREE_LIMIT = 10_000_000
DEFAULT_VERTEX_CAP = 25

STATUS_UNSET = 0
STATUS_BASE = 1
STATUS_FINAL = 2
STATUS_ERROR = 4


# ---------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class EdcResult:
    """Outcome of one deletion solve.

    ``kept_edge_ids`` lists the retained edges ascending; their graph is
    re-verified to be a connected spanning cactus before the result is
    returned.  ``algorithm`` is one of ``"dp"``, ``"enum"``, ``"brute"``.
    """

    deleted_count: int
    kept_edge_ids: tuple[int, ...]
    algorithm: str
    stats: dict = field(default_factory=dict, compare=False)
    table: Optional["SubsetTable"] = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class TreeEnumStats:
    """Counters from a spanning-tree enumeration run.

    ``best_value`` is filled by callers that track a running optimum and
    stays None for a bare enumeration.  When the run completed without
    hitting the cap, ``trees_visited == spanning_tree_count`` is enforced
    against the determinant count.
    """

    trees_visited: int
    best_value: Optional[int]
    spanning_tree_count: int


# ---------------------------------------------------------------------------
# spanning tree counting and enumeration


def count_spanning_trees(g: Graph) -> int:
    """Number of spanning trees, via an integer-exact determinant.

    Fraction-free elimination keeps every intermediate value an integer,
    so arbitrarily large counts come out exact.
    """
    if not is_connected(g):
        raise NotConnected("spanning trees require a connected graph")
    n = g.n
    if n == 1:
        return 1
    a = [[0] * (n - 1) for _ in range(n - 1)]
    for u, v in g.edges:
        if u < n - 1:
            a[u][u] += 1
        if v < n - 1:
            a[v][v] += 1
        if u < n - 1 and v < n - 1:
            a[u][v] -= 1
            a[v][u] -= 1
    prev = 1
    for k in range(n - 2):
        pivot = a[k][k]
        assert pivot != 0, "positive definite minor cannot yield a zero pivot"
        for i in range(k + 1, n - 1):
            for j in range(k + 1, n - 1):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    count = a[n - 2][n - 2]
    assert 1 <= count <= n ** (n - 2)
    return count


class _LimitHit(Exception):
    pass


def enumerate_spanning_trees(
    g: Graph,
    visit: Callable[[tuple[int, ...]], None],
    limit: int = DEFAULT_TREE_LIMIT,
) -> TreeEnumStats:
    """Call ``visit`` once per spanning tree, as a sorted edge-id tuple.

    Branches on the smallest undecided edge: either it is in the tree
    (edges closing a cycle with the partial tree die) or it is deleted
    (bridges of what remains are forced in).  The branching order is
    fixed, so the visit sequence is reproducible.  Raises LimitExceeded
    after ``limit`` trees, carrying partial counters; on completion the
    visit count is checked against the determinant count.
    """
    if not is_connected(g):
        raise NotConnected("spanning trees require a connected graph")
    n, m = g.n, g.m
    total = count_spanning_trees(g)
    edges = g.edges
    adj = g.adj
    alive = bytearray(b"\x01") * m
    in_part = bytearray(m)
    part: list[int] = []
    visited = 0

    def prune_closers() -> list[int]:
        # kill alive edges joining two vertices already linked by the part
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in part:
            u, v = edges[e]
            parent[find(u)] = find(v)
        removed = []
        for e in range(m):
            if alive[e] and not in_part[e] and find(edges[e][0]) == find(edges[e][1]):
                alive[e] = 0
                removed.append(e)
        return removed

    def alive_connected() -> bool:
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w, eid in adj[v]:
                if alive[eid] and not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count == n

    def alive_bridges() -> list[int]:
        disc = [-1] * n
        low = [0] * n
        out: list[int] = []
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            stack = [(root, -1, 0)]
            while stack:
                v, pe, idx = stack.pop()
                if idx == 0:
                    disc[v] = low[v] = timer
                    timer += 1
                found = False
                while idx < len(adj[v]):
                    w, eid = adj[v][idx]
                    idx += 1
                    if not alive[eid] or eid == pe:
                        continue
                    if disc[w] == -1:
                        stack.append((v, pe, idx))
                        stack.append((w, eid, 0))
                        found = True
                        break
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                if not found and pe != -1:
                    u = g.edges[pe][0] if g.edges[pe][1] == v else g.edges[pe][1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] > disc[u]:
                        out.append(pe)
        return out

    def rec() -> None:
        nonlocal visited
        if len(part) == n - 1:
            if visited >= limit:
                raise _LimitHit
            visited += 1
            visit(tuple(sorted(part)))
            return
        e = -1
        for i in range(m):
            if alive[i] and not in_part[i]:
                e = i
                break
        assert e >= 0
        in_part[e] = 1
        part.append(e)
        removed = prune_closers()
        rec()
        for f in removed:
            alive[f] = 1
        part.pop()
        in_part[e] = 0

        alive[e] = 0
        if alive_connected():
            forced = [b for b in alive_bridges() if not in_part[b]]
            for b in forced:
                in_part[b] = 1
                part.append(b)
            removed = prune_closers()
            rec()
            for f in removed:
                alive[f] = 1
            for b in reversed(forced):
                part.pop()
                in_part[b] = 0
        alive[e] = 1

    try:
        rec()
    except _LimitHit:
        raise LimitExceeded(limit, TreeEnumStats(visited, None, total))
    if visited != total:
        raise CrossCheckError(
            f"enumerated {visited} spanning trees, determinant says {total}"
        )
    return TreeEnumStats(trees_visited=visited, best_value=None, spanning_tree_count=total)


def edc_tree_enum(g: Graph, tree_limit: int = DEFAULT_TREE_LIMIT) -> EdcResult:
    """Exact deletion count by sweeping every spanning tree.

    Any kept solution contains some spanning tree, so augmenting each
    tree optimally and taking the best is exact.  Trees are skipped once
    the running best hits the ceiling min(extra edges, floor((n-1)/2)):
    each added edge consumes at least two tree edges, pairwise disjoint.
    """
    if not is_connected(g):
        raise NotConnected("deletion to a cactus requires a connected graph")
    total = count_spanning_trees(g)
    if total > tree_limit:
        raise TooManyTrees(total, tree_limit)
    n, m = g.n, g.m
    ceiling = min(m - (n - 1), (n - 1) // 2)
    best_added = -1
    best_kept: tuple[int, ...] = ()
    evaluated = 0

    def visit(tree_ids: tuple[int, ...]) -> None:
        nonlocal best_added, best_kept, evaluated
        if best_added >= ceiling:
            return
        t = spanning_tree_from_ids(g, tree_ids)
        res = spanning_tree_to_cactus(g, t)
        evaluated += 1
        if res.added_count > best_added:
            best_added = res.added_count
            best_kept = tuple(sorted(tree_ids + res.added_edge_ids))

    stats = enumerate_spanning_trees(g, visit, limit=tree_limit)
    assert best_added >= 0 and len(best_kept) == n - 1 + best_added
    return EdcResult(
        deleted_count=m - len(best_kept),
        kept_edge_ids=best_kept,
        algorithm="enum",
        stats={
            "trees_enumerated": stats.trees_visited,
            "trees_evaluated": evaluated,
            "spanning_tree_count": stats.spanning_tree_count,
        },
    )


# ---------------------------------------------------------------------------
# subset table


@dataclass(frozen=True)
class SubsetEntry:
    """One finalized table row, addressed by vertex bitmask."""

    mask: int
    vertices: tuple[int, ...]
    value: int
    status: int
    witness_x: int
    witness_a: int


@dataclass(eq=False)
class SubsetTable:
    """Backing arrays for the subset recurrence, indexed by bitmask.

    ``witness_x``/``witness_a`` record the winning split vertex and
    piece for entries solved through the recurrence; -1 in ``witness_x``
    marks a leaf (directly enumerated or already a cactus).
    """

    host: Graph
    n: int
    value: np.ndarray
    witness_x: np.ndarray
    witness_a: np.ndarray
    status: np.ndarray
    fault: Optional[str] = None
    _adj: Optional[list[int]] = field(default=None, repr=False)

    @property
    def adj_masks(self) -> list[int]:
        if self._adj is None:
            adj = [0] * self.n
            for u, v in self.host.edges:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            self._adj = adj
        return self._adj

    def entry(self, X: Iterable[int] | int) -> Optional[SubsetEntry]:
        mask = _as_mask(X, self.n)
        st = int(self.status[mask])
        if st == STATUS_UNSET:
            return None
        return SubsetEntry(
            mask=mask,
            vertices=_vertices_of(mask),
            value=int(self.value[mask]),
            status=st,
            witness_x=int(self.witness_x[mask]),
            witness_a=int(self.witness_a[mask]),
        )

    def masks(self, status: Optional[int] = None) -> list[int]:
        if status is None:
            idx = np.nonzero(self.status != STATUS_UNSET)[0]
        else:
            idx = np.nonzero(self.status == status)[0]
        return [int(i) for i in idx]


def new_subset_table(g: Graph, fault: Optional[str] = None) -> SubsetTable:
    size = 1 << g.n
    return SubsetTable(
        host=g,
        n=g.n,
        value=np.full(size, -1, np.int16),
        witness_x=np.full(size, -1, np.int8),
        witness_a=np.zeros(size, np.int32),
        status=np.zeros(size, np.uint8),
        fault=fault,
    )


def _as_mask(X: Iterable[int] | int, n: int) -> int:
    if isinstance(X, int):
        mask = X
        if mask < 0 or mask >> n:
            raise PreconditionViolated(f"mask {mask:#x} out of range for {n} vertices")
        return mask
    mask = 0
    for v in X:
        if not 0 <= v < n:
            raise PreconditionViolated(f"vertex {v} out of range for {n} vertices")
        mask |= 1 << v
    return mask


def _vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _mask_connected(adj: list[int], mask: int) -> bool:
    if mask == 0:
        return False
    start = mask & (-mask)
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            lb = f & (-f)
            nxt |= adj[lb.bit_length() - 1]
            f ^= lb
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


def base_case_value(g: Graph, X: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Exact optimum for a subset of at most five vertices.

    Returns (kept edge count, kept host edge ids), found by trying kept
    sizes descending and subsets in ascending id order, so the witness is
    reproducible.  At most 10 candidate edges, so at most 1024 checks.
    """
    verts = tuple(sorted(set(X)))
    if not verts:
        raise EmptySubset()
    if len(verts) > BASE_CAP:
        raise SubsetTooLarge(len(verts), BASE_CAP)
    sub = induced_subgraph(g, verts)
    if not is_connected(sub.graph):
        raise NotConnectedSubset(verts)
    local_edges = sub.graph.edges
    k = len(local_edges)
    for size in range(k, -1, -1):
        for comb in combinations(range(k), size):
            cand = build_graph(len(verts), [local_edges[i] for i in comb])
            if is_connected(cand) and is_cactus(cand).cactus:
                return size, tuple(sub.edge_ids[i] for i in comb)
    raise AssertionError("a connected subset always keeps a spanning tree")


def find_cut_cactus(x: int, A: Iterable[int] | int, X: Iterable[int] | int, table: SubsetTable) -> int:
    """Value of the split of X at x into A and its complement.

    Both pieces keep x, so their optima add up to a candidate for X.
    Precondition failures are programming errors, never user input.
    """
    n = table.n
    xmask = _as_mask(X, n)
    amask = _as_mask(A, n)
    xb = 1 << x
    if not xmask & xb:
        raise PreconditionViolated(f"split vertex {x} not in the subset")
    rest = xmask ^ xb
    if amask == 0 or amask & ~rest:
        raise PreconditionViolated("piece A must be a nonempty subset avoiding x")
    bmask = rest ^ amask
    if bmask == 0:
        raise PreconditionViolated("piece B must be nonempty")
    adj = table.adj_masks
    if _popcount(adj[x] & rest) < 2:
        raise PreconditionViolated(f"split vertex {x} needs two neighbors in the subset")
    s1 = amask | xb
    s2 = bmask | xb
    if not _mask_connected(adj, s1):
        raise PreconditionViolated("piece A with x does not induce a connected graph")
    if not _mask_connected(adj, s2):
        raise PreconditionViolated("piece B with x does not induce a connected graph")
    return find_max_cactus(s1, table.host, table) + find_max_cactus(s2, table.host, table)


def find_max_cactus(X: Iterable[int] | int, g: Graph, table: SubsetTable) -> int:
    """Top-down reference evaluation of the subset recurrence.

    Same candidate order and tie-breaks as the compiled kernel: split
    vertices ascending, then pieces ascending as bitmasks, first strict
    improvement wins.  Used for differential testing and as the carrier
    for injected faults (``table.fault``): ``"dp-no-cactus-shortcut"``
    drops the cactus leaf rule, ``"dp-skip-b-connectivity"`` admits
    splits whose second piece is disconnected, pricing it at a guessed
    spanning tree.
    """
    assert g is table.host
    mask = _as_mask(X, table.n)
    if int(table.status[mask]) != STATUS_UNSET:
        return int(table.value[mask])
    verts = _vertices_of(mask)
    if not verts:
        raise EmptySubset()
    adj = table.adj_masks
    if not _mask_connected(adj, mask):
        raise NotConnectedSubset(verts)
    pc = len(verts)
    if pc <= BASE_CAP:
        val, _ = base_case_value(g, verts)
        table.value[mask] = val
        table.witness_x[mask] = -1
        table.status[mask] = STATUS_BASE
        return val
    if table.fault != "dp-no-cactus-shortcut":
        sub = induced_subgraph(g, verts)
        if is_cactus(sub.graph).cactus:
            val = len(sub.edge_ids)
            table.value[mask] = val
            table.witness_x[mask] = -1
            table.status[mask] = STATUS_FINAL
            return val
    best = -1
    bx = -1
    ba = 0
    for x in verts:
        xb = 1 << x
        rest = mask ^ xb
        if _popcount(adj[x] & rest) < 2:
            continue
        lowb = rest & (-rest)
        high = rest ^ lowb
        sub_bits = 0
        while True:
            part = sub_bits | lowb
            if part != rest:
                s1 = part | xb
                s2 = (rest ^ part) | xb
                val = None
                if _mask_connected(adj, s1):
                    if _mask_connected(adj, s2):
                        val = find_cut_cactus(x, part, mask, table)
                    elif table.fault == "dp-skip-b-connectivity":
                        val = find_max_cactus(s1, g, table) + _popcount(s2) - 1
                if val is not None and val > best:
                    best = val
                    bx = x
                    ba = part
            if sub_bits == high:
                break
            sub_bits = (sub_bits - high) & high
    assert best >= 0, "every connected subset beyond the base size admits a split"
    table.value[mask] = best
    table.witness_x[mask] = bx
    table.witness_a[mask] = ba
    table.status[mask] = STATUS_FINAL
    return best


def _popcount(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# the two subset-based solvers


def _kernel_tables(g: Graph) -> SubsetTable:
    from . import _subset_kernel as kernel

    assert kernel.BASE_CAP == BASE_CAP
    eu = np.array([e[0] for e in g.edges], np.int32)
    ev = np.array([e[1] for e in g.edges], np.int32)
    adj = np.zeros(g.n, np.int64)
    for u, v in g.edges:
        adj[u] |= np.int64(1 << v)
        adj[v] |= np.int64(1 << u)
    _edges_in, _conn, value, wx, wa, status = kernel.solve_all(g.n, eu, ev, adj)
    if bool((status == STATUS_ERROR).any()):
        raise CrossCheckError("compiled engine found a connected subset with no split")
    return SubsetTable(
        host=g, n=g.n, value=value, witness_x=wx, witness_a=wa, status=status
    )


def _reconstruct_kept_edges(g: Graph, table: SubsetTable, mask: int) -> tuple[int, ...]:
    out: list[int] = []
    stack = [mask]
    while stack:
        cur = stack.pop()
        x = int(table.witness_x[cur])
        if x < 0:
            verts = _vertices_of(cur)
            if len(verts) <= BASE_CAP:
                val, kept = base_case_value(g, verts)
                if val != int(table.value[cur]):
                    raise CrossCheckError(
                        f"leaf recomputation got {val}, table holds {int(table.value[cur])}"
                    )
                out.extend(kept)
            else:
                for eid, (u, v) in enumerate(g.edges):
                    if (cur >> u) & 1 and (cur >> v) & 1:
                        out.append(eid)
        else:
            xb = 1 << x
            part = int(table.witness_a[cur])
            rest = cur ^ xb
            stack.append(part | xb)
            stack.append((rest ^ part) | xb)
    return tuple(sorted(out))


def edc_subset_dp(g: Graph, max_n: int = DEFAULT_VERTEX_CAP, engine: Optional[str] = None) -> EdcResult:
    """Exact deletion count by the subset recurrence.

    ``engine`` picks "compiled" (default) or "reference"; the fault hook
    always runs on the reference engine.  The reconstructed kept graph
    is re-verified as a connected spanning cactus before returning.
    """
    if g.n > max_n:
        raise TooManyVertices(g.n, max_n)
    if not is_connected(g):
        raise NotConnected("deletion to a cactus requires a connected graph")
    fault = os.environ.get("CACTUSKIT_FAULT") or None
    if engine is None:
        engine = "reference" if fault else "compiled"
    if engine not in ("compiled", "reference"):
        raise ValueError(f"unknown engine {engine!r}")
    if fault:
        engine = "reference"
    full = (1 << g.n) - 1
    if engine == "compiled":
        table = _kernel_tables(g)
    else:
        table = new_subset_table(g, fault=fault)
        find_max_cactus(full, g, table)
    best = int(table.value[full])
    kept = _reconstruct_kept_edges(g, table, full)
    if len(kept) != best:
        raise CrossCheckError(f"witness has {len(kept)} edges, table value is {best}")
    kept_graph = build_graph(g.n, [g.edges[i] for i in kept]) if kept else build_graph(g.n, [])
    if not (is_connected(kept_graph) and is_cactus(kept_graph).cactus):
        raise CrossCheckError("reconstructed kept graph is not a connected cactus")
    return EdcResult(
        deleted_count=g.m - best,
        kept_edge_ids=kept,
        algorithm="dp",
        stats={
            "subsets_evaluated": len(table.masks()),
            "engine": engine,
        },
        table=table,
    )


def edc_brute_force(g: Graph) -> EdcResult:
    """Descending-size sweep over kept edge subsets; tiny instances only."""
    if g.m > BRUTE_EDGE_CAP:
        raise TooManyEdges(g.m, BRUTE_EDGE_CAP)
    if not is_connected(g):
        raise NotConnected("deletion to a cactus requires a connected graph")
    ids = range(g.m)
    tried = 0
    for size in range(g.m, g.n - 2, -1):
        for comb in combinations(ids, size):
            tried += 1
            if connected_cactus_edge_subset(g, comb):
                return EdcResult(
                    deleted_count=g.m - size,
                    kept_edge_ids=tuple(comb),
                    algorithm="brute",
                    stats={"subsets_tried": tried},
                )
    raise AssertionError("a connected graph always keeps a spanning tree")
