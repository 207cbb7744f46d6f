"""Validated graphs, block decomposition, cactus recognition, spanning trees.

A cactus here is a connected graph in which every block (maximal
2-connected piece) is either a single bridge edge or a simple cycle;
equivalently, no edge lies on more than one simple cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DuplicateEdge,
    EdgeNotInGraph,
    EmptyGraph,
    EmptySubset,
    LoopEdge,
    NotConnected,
    NotSpanningTree,
    SameEndpoints,
    VertexOutOfRange,
    WrongEdgeCount,
)

BRIDGE_EDGE = "bridge-edge"
SIMPLE_CYCLE = "simple-cycle"
OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense edge ids 0..m-1.

    edges[i] keeps the endpoint order it was built with; adj[v] lists
    (neighbor, edge id) pairs sorted ascending. Instances are immutable.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)


def build_graph(n: int, edge_pairs) -> Graph:
    if n < 1:
        raise EmptyGraph()
    edges = []
    seen = set()
    adj = [[] for _ in range(n)]
    for u, v in edge_pairs:
        if not (0 <= u < n):
            raise VertexOutOfRange(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRange(v, n)
        if u == v:
            raise LoopEdge(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(u, v)
        seen.add(key)
        eid = len(edges)
        edges.append((u, v))
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return Graph(n=n, edges=tuple(edges),
                 adj=tuple(tuple(sorted(a)) for a in adj))


def edge_id_of(g: Graph, u: int, v: int):
    """Edge id joining u and v, or None."""
    if not (0 <= u < g.n):
        raise VertexOutOfRange(u, g.n)
    if not (0 <= v < g.n):
        raise VertexOutOfRange(v, g.n)
    for w, eid in g.adj[u]:
        if w == v:
            return eid
    return None


def is_connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w, _ in g.adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as sorted edge-id tuples, ordered by smallest contained edge id.

    kinds[i] classifies blocks[i]; cut_vertices ascending. Every edge id
    appears in exactly one block.
    """

    blocks: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    cut_vertices: tuple[int, ...]


def _block_kind(g: Graph, block_edges) -> str:
    if len(block_edges) == 1:
        return BRIDGE_EDGE
    deg: dict[int, int] = {}
    for e in block_edges:
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if len(deg) == len(block_edges) and all(d == 2 for d in deg.values()):
        return SIMPLE_CYCLE
    return OTHER


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    """Block decomposition via lowpoint DFS with an explicit stack."""
    if not is_connected(g):
        raise NotConnected()
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[int] = []
    raw_blocks: list[list[int]] = []
    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    # frame: [vertex, edge id used to enter it, next adjacency index]
    frames: list[list[int]] = [[0, -1, 0]]
    while frames:
        v, entry, i = frames[-1]
        if i < len(g.adj[v]):
            frames[-1][2] = i + 1
            w, eid = g.adj[v][i]
            if eid == entry:
                continue
            if disc[w] == -1:
                edge_stack.append(eid)
                disc[w] = low[w] = timer
                timer += 1
                frames.append([w, eid, 0])
            elif disc[w] < disc[v]:
                edge_stack.append(eid)
                if disc[w] < low[v]:
                    low[v] = disc[w]
            # disc[w] > disc[v]: this edge was recorded from w's side
        else:
            frames.pop()
            if frames:
                parent = frames[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == entry:
                            break
                    raw_blocks.append(block)
    assert not edge_stack
    blocks = tuple(sorted((tuple(sorted(b)) for b in raw_blocks),
                          key=lambda b: b[0]))
    kinds = tuple(_block_kind(g, b) for b in blocks)
    appears: dict[int, int] = {}
    for b in blocks:
        verts = set()
        for e in b:
            verts.update(g.edges[e])
        for v in verts:
            appears[v] = appears.get(v, 0) + 1
    cuts = tuple(sorted(v for v, c in appears.items() if c >= 2))
    return BlockDecomposition(blocks=blocks, kinds=kinds, cut_vertices=cuts)


@dataclass(frozen=True)
class CactusVerdict:
    cactus: bool
    witness: BlockDecomposition


def is_cactus(g: Graph) -> CactusVerdict:
    """True iff every block is a bridge edge or a simple cycle."""
    dec = biconnected_blocks(g)
    return CactusVerdict(cactus=all(k != OTHER for k in dec.kinds), witness=dec)


@dataclass
class InducedSubgraph:
    """Induced subgraph plus bidirectional vertex and edge id maps."""

    graph: Graph
    vertices: tuple[int, ...]        # sub vertex id -> host vertex id
    edge_ids: tuple[int, ...]        # sub edge id -> host edge id
    vertex_index: dict[int, int]     # host vertex id -> sub vertex id
    edge_index: dict[int, int]       # host edge id -> sub edge id


def induced_subgraph(g: Graph, vertices) -> InducedSubgraph:
    vs = sorted(set(vertices))
    if not vs:
        raise EmptySubset()
    for v in vs:
        if not (0 <= v < g.n):
            raise VertexOutOfRange(v, g.n)
    vindex = {v: i for i, v in enumerate(vs)}
    sub_pairs = []
    eids = []
    for eid, (u, v) in enumerate(g.edges):
        if u in vindex and v in vindex:
            sub_pairs.append((vindex[u], vindex[v]))
            eids.append(eid)
    sub = build_graph(len(vs), sub_pairs)
    return InducedSubgraph(graph=sub,
                           vertices=tuple(vs),
                           edge_ids=tuple(eids),
                           vertex_index=vindex,
                           edge_index={h: i for i, h in enumerate(eids)})


@dataclass
class SpanningTree:
    """Spanning tree of a host graph, rooted at vertex 0.

    tree_index maps each tree edge's host id to a dense index 0..n-2
    (assigned in ascending host id order); parent_edge[v] is the host id
    of the edge joining v to parent[v].
    """

    host: Graph
    edge_ids: tuple[int, ...]
    root: int
    parent: tuple[int, ...]
    parent_edge: tuple[int, ...]
    depth: tuple[int, ...]
    tree_index: dict[int, int]

    def is_tree_edge(self, eid: int) -> bool:
        return eid in self.tree_index


def validate_spanning_tree(g: Graph, tree_pairs) -> SpanningTree:
    """Check a list of vertex pairs forms a spanning tree of g."""
    ids = []
    for u, v in tree_pairs:
        eid = edge_id_of(g, u, v)
        if eid is None:
            raise EdgeNotInGraph((u, v))
        ids.append(eid)
    return spanning_tree_from_ids(g, ids)


def spanning_tree_from_ids(g: Graph, edge_ids) -> SpanningTree:
    ids = list(edge_ids)
    for e in ids:
        if not (0 <= e < g.m):
            raise EdgeNotInGraph(e)
    distinct = sorted(set(ids))
    if len(ids) != g.n - 1 or len(distinct) != g.n - 1:
        raise WrongEdgeCount(len(ids), g.n - 1)
    tadj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in distinct:
        u, v = g.edges[e]
        tadj[u].append((v, e))
        tadj[v].append((u, e))
    for a in tadj:
        a.sort()
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    depth = [0] * g.n
    seen = bytearray(g.n)
    seen[0] = 1
    queue = [0]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w, e in tadj[v]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = v
                parent_edge[w] = e
                depth[w] = depth[v] + 1
                queue.append(w)
    if len(queue) != g.n:
        raise NotSpanningTree(f"tree edges reach {len(queue)} of {g.n} vertices")
    return SpanningTree(host=g,
                        edge_ids=tuple(distinct),
                        root=0,
                        parent=tuple(parent),
                        parent_edge=tuple(parent_edge),
                        depth=tuple(depth),
                        tree_index={e: i for i, e in enumerate(distinct)})


@dataclass(frozen=True)
class TreePath:
    """The unique tree path between two vertices.

    vertices runs endpoint to endpoint through the meeting vertex (lca);
    edge_indices holds tree_index values of the path edges. When the path
    realizes a non-tree edge, nontree_edge_id is set and the path has at
    least two edges (a one-edge path would duplicate a tree edge).
    """

    endpoints: tuple[int, int]
    lca: int
    vertices: tuple[int, ...]
    edge_indices: frozenset[int]
    nontree_edge_id: int | None = None

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def lca(t: SpanningTree, u: int, v: int) -> int:
    if not (0 <= u < t.host.n):
        raise VertexOutOfRange(u, t.host.n)
    if not (0 <= v < t.host.n):
        raise VertexOutOfRange(v, t.host.n)
    while t.depth[u] > t.depth[v]:
        u = t.parent[u]
    while t.depth[v] > t.depth[u]:
        v = t.parent[v]
    while u != v:
        u = t.parent[u]
        v = t.parent[v]
    return u


def tree_path(t: SpanningTree, u: int, v: int,
              nontree_edge_id: int | None = None) -> TreePath:
    if u == v:
        raise SameEndpoints(u)
    if not (0 <= u < t.host.n):
        raise VertexOutOfRange(u, t.host.n)
    if not (0 <= v < t.host.n):
        raise VertexOutOfRange(v, t.host.n)
    up_u: list[int] = [u]
    up_v: list[int] = [v]
    eidx: list[int] = []
    a, b = u, v
    while t.depth[a] > t.depth[b]:
        eidx.append(t.tree_index[t.parent_edge[a]])
        a = t.parent[a]
        up_u.append(a)
    while t.depth[b] > t.depth[a]:
        eidx.append(t.tree_index[t.parent_edge[b]])
        b = t.parent[b]
        up_v.append(b)
    while a != b:
        eidx.append(t.tree_index[t.parent_edge[a]])
        eidx.append(t.tree_index[t.parent_edge[b]])
        a = t.parent[a]
        b = t.parent[b]
        up_u.append(a)
        up_v.append(b)
    # up_u ends at the meeting vertex; up_v repeats it at its end
    vertices = tuple(up_u + up_v[-2::-1])
    return TreePath(endpoints=(u, v),
                    lca=a,
                    vertices=vertices,
                    edge_indices=frozenset(eidx),
                    nontree_edge_id=nontree_edge_id)


def connected_cactus_edge_subset(g: Graph, edge_ids) -> bool:
    """Does the spanning subgraph (all of g's vertices, just these edges)
    form a connected cactus?

    Runs the lowpoint block scan directly on arrays so subset-enumeration
    oracles can call it in a tight loop; same blocks route as is_cactus,
    no shared machinery with the tree-path or bitmask solvers.
    """
    n = g.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in edge_ids:
        u, v = g.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    disc = [-1] * n
    low = [0] * n
    nseen = 1
    disc[0] = low[0] = 0
    timer = 1
    edge_stack: list[int] = []
    frames: list[list[int]] = [[0, -1, 0]]
    ok = True
    while frames:
        v, entry, i = frames[-1]
        if i < len(adj[v]):
            frames[-1][2] = i + 1
            w, eid = adj[v][i]
            if eid == entry:
                continue
            if disc[w] == -1:
                edge_stack.append(eid)
                disc[w] = low[w] = timer
                timer += 1
                nseen += 1
                frames.append([w, eid, 0])
            elif disc[w] < disc[v]:
                edge_stack.append(eid)
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            frames.pop()
            if frames:
                parent = frames[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    # pop one block; count its edges and vertices
                    bsize = 0
                    verts = set()
                    while True:
                        e = edge_stack.pop()
                        bsize += 1
                        eu, ev = g.edges[e]
                        verts.add(eu)
                        verts.add(ev)
                        if e == entry:
                            break
                    if bsize > 1 and bsize != len(verts):
                        ok = False  # keep unwinding to leave stacks clean
    return ok and nseen == n
