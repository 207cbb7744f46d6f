"""Completing a spanning tree into a largest cactus subgraph.

Adding a set F of non-tree edges to a spanning tree T yields a cactus
exactly when the tree paths realized by the edges of F are pairwise
edge-disjoint, so the solver reduces to picking a maximum set of pairwise
edge-disjoint paths in T.

max_disjoint_paths solves that exactly: vertices are processed bottom-up
(strictly decreasing depth), paths are bucketed at their meeting vertex
(lca), and at each vertex a maximum-weight matching over the vertex's
down-edges decides which paths close there. Weights fold in what each
choice costs the already-processed subtrees, and paths that continue
upward are carried as an explicit table state instead of being decided
early; a locally greedy maximum-cardinality pick at each vertex is not
optimal (see the regression fixture in the tests).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .errors import CrossCheckError, TooLargeForOracle
from .graph import (
    Graph,
    SpanningTree,
    TreePath,
    build_graph,
    connected_cactus_edge_subset,
    is_cactus,
    tree_path,
)
from .matching import ORACLE_EDGE_CAP


@dataclass(frozen=True)
class ConflictGraph:
    """One node per non-tree edge; adjacency joins two nodes when their
    tree paths share at least one tree edge."""

    k: int
    neighbors: tuple[tuple[int, ...], ...]
    path_nontree_edge: tuple[int, ...]


def nontree_edge_ids(g: Graph, t: SpanningTree) -> list[int]:
    return [eid for eid in range(g.m) if eid not in t.tree_index]


def build_conflict_graph(g: Graph, t: SpanningTree) -> tuple[tuple[TreePath, ...], ConflictGraph]:
    paths = []
    ids = nontree_edge_ids(g, t)
    for eid in ids:
        u, v = g.edges[eid]
        p = tree_path(t, u, v, nontree_edge_id=eid)
        assert p.length >= 2  # a one-edge path would duplicate a tree edge
        paths.append(p)
    sorted_idx = [tuple(sorted(p.edge_indices)) for p in paths]
    k = len(paths)
    neighbors: list[list[int]] = [[] for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            # linear merge over the two sorted index tuples
            xs, ys = sorted_idx[a], sorted_idx[b]
            i = j = 0
            hit = False
            while i < len(xs) and j < len(ys):
                if xs[i] == ys[j]:
                    hit = True
                    break
                if xs[i] < ys[j]:
                    i += 1
                else:
                    j += 1
            if hit:
                neighbors[a].append(b)
                neighbors[b].append(a)
    return tuple(paths), ConflictGraph(
        k=k,
        neighbors=tuple(tuple(ns) for ns in neighbors),
        path_nontree_edge=tuple(ids),
    )


def _dedup_candidates(cands):
    """Collapse parallel candidates on the same node pair: keep the best
    gain, ties to the smaller path index."""
    by_nodes: dict[frozenset, tuple[int, int, tuple]] = {}
    for i, nodes, gain in cands:
        key = frozenset(nodes)
        cur = by_nodes.get(key)
        if cur is None or gain > cur[1]:
            by_nodes[key] = (i, gain, nodes)
    return sorted(by_nodes.values())


def _best_selection(cands, exclude_child):
    """Maximum-weight matching over down-edge nodes.

    cands: (path index, node pair, gain) with gain > 0. Returns
    (total gain, selected path indices, {child: path index}).
    """
    usable = [(i, gain, nodes) for i, gain, nodes in cands
              if exclude_child is None or ("d", exclude_child) not in nodes]
    if not usable:
        return 0, [], {}
    inst = nx.Graph()
    by_pair: dict[frozenset, tuple[int, int]] = {}
    for i, gain, nodes in usable:
        inst.add_edge(nodes[0], nodes[1], weight=gain)
        by_pair[frozenset(nodes)] = (i, gain)
    mate = nx.max_weight_matching(inst, maxcardinality=False)
    total = 0
    selected = []
    assignment: dict[int, int] = {}
    for a, b in mate:
        i, gain = by_pair[frozenset((a, b))]
        total += gain
        selected.append(i)
        for node in (a, b):
            if node[0] == "d":
                assignment[node[1]] = i
    selected.sort()
    return total, selected, assignment


def max_disjoint_paths(t: SpanningTree, paths) -> tuple[int, ...]:
    """Indices of a maximum set of pairwise edge-disjoint tree paths."""
    n = t.host.n
    k = len(paths)
    if k == 0:
        return ()

    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        p = t.parent[v]
        if p >= 0:
            children[p].append(v)

    # Bucket each path at its lca (with its down-legs there) and record,
    # for every other path vertex, how the path continues below it.
    lca_paths: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    through_at: dict[int, list[int]] = {}
    down_child: dict[tuple[int, int], int] = {}
    for i, path in enumerate(paths):
        seq = path.vertices
        li = seq.index(path.lca)
        legs = []
        if li > 0:
            legs.append(seq[li - 1])
        if li < len(seq) - 1:
            legs.append(seq[li + 1])
        lca_paths.setdefault(path.lca, []).append((i, tuple(legs)))
        for j, w in enumerate(seq):
            if j == li:
                continue
            through_at.setdefault(w, []).append(i)
            if j < li and j >= 1:
                down_child[(w, i)] = seq[j - 1]
            elif j > li and j + 1 < len(seq):
                down_child[(w, i)] = seq[j + 1]

    free_best: dict[int, int] = {}
    committed_best: dict[tuple[int, int], int] = {}
    free_choice: dict[int, tuple[list[int], dict[int, int]]] = {}
    committed_choice: dict[tuple[int, int], tuple[list[int], dict[int, int]]] = {}

    order = sorted(range(n), key=lambda v: (-t.depth[v], v))
    for v in order:
        base = sum(free_best[c] for c in children[v])
        cands = []
        for i, legs in sorted(lca_paths.get(v, [])):
            gain = 1
            for c in legs:
                gain += committed_best[(c, i)] - free_best[c]
            if gain <= 0:
                continue
            if len(legs) == 2:
                nodes = (("d", legs[0]), ("d", legs[1]))
            else:
                nodes = (("d", legs[0]), ("a", i))
            cands.append((i, nodes, gain))
        cands = _dedup_candidates(cands)

        got, selected, assignment = _best_selection(cands, None)
        free_best[v] = base + got
        free_choice[v] = (selected, assignment)

        pending = through_at.get(v, [])
        by_entry: dict[int, list[int]] = {}
        for i in pending:
            c = down_child.get((v, i))
            if c is None:
                # the path ends at v: nothing of it lies below v
                committed_best[(v, i)] = free_best[v]
                committed_choice[(v, i)] = free_choice[v]
            else:
                by_entry.setdefault(c, []).append(i)
        for c, idxs in sorted(by_entry.items()):
            got, selected, assignment = _best_selection(cands, c)
            for i in idxs:
                committed_best[(v, i)] = (base
                                          + committed_best[(c, i)] - free_best[c]
                                          + got)
                committed_choice[(v, i)] = (selected, {**assignment, c: i})

    chosen: list[int] = []
    stack: list[tuple[int, int | None]] = [(t.root, None)]
    while stack:
        v, state = stack.pop()
        selected, assignment = (free_choice[v] if state is None
                                else committed_choice[(v, state)])
        chosen.extend(selected)
        for c in children[v]:
            stack.append((c, assignment.get(c)))

    chosen.sort()
    # the chosen paths must be pairwise edge-disjoint
    taken: set[int] = set()
    for i in chosen:
        assert not (paths[i].edge_indices & taken)
        taken |= paths[i].edge_indices
    return tuple(chosen)


@dataclass(frozen=True)
class StcResult:
    """Largest cactus obtainable as tree plus a set of non-tree edges."""

    added_count: int
    added_edge_ids: tuple[int, ...]
    cactus_edge_count: int


def spanning_tree_to_cactus(g: Graph, t: SpanningTree) -> StcResult:
    paths, conflicts = build_conflict_graph(g, t)
    selected = max_disjoint_paths(t, paths)
    sel_set = set(selected)
    for i in selected:  # independent in the conflict graph
        assert not (sel_set & set(conflicts.neighbors[i]))
    added = sorted(paths[i].nontree_edge_id for i in selected)
    kept = list(t.edge_ids) + added
    verdict = is_cactus(build_graph(g.n, [g.edges[e] for e in sorted(kept)]))
    if not verdict.cactus:
        raise CrossCheckError("selected edge set failed the cactus re-check")
    return StcResult(added_count=len(added),
                     added_edge_ids=tuple(added),
                     cactus_edge_count=(g.n - 1) + len(added))


def stc_brute_force(g: Graph, t: SpanningTree) -> int:
    """Largest addable non-tree edge count, by subset enumeration.

    Tries subsets largest-first; dropping an edge from a valid addition
    keeps it valid, so the first size with a cactus is the answer.
    """
    ids = nontree_edge_ids(g, t)
    k = len(ids)
    if k > ORACLE_EDGE_CAP:
        raise TooLargeForOracle(k, ORACLE_EDGE_CAP, what="non-tree edges")
    tree_ids = list(t.edge_ids)
    for size in range(k, -1, -1):
        for comb in itertools.combinations(ids, size):
            if connected_cactus_edge_subset(g, tree_ids + list(comb)):
                return size
    raise AssertionError("unreachable: the bare tree is always a cactus")
