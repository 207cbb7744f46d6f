"""Line-oriented instance files.

Graph text: optional ``#`` comments and blank lines, one ``p <n> <m>``
header, then exactly m lines ``e <u> <v>`` with 0-based vertex ids and
LF endings.  Tree text uses the same line discipline but carries no
header: exactly n-1 ``e`` lines, each matching an edge of the companion
graph.  Comment-free graph text round-trips byte-identically.
"""

from __future__ import annotations

import os

from .errors import EdgeNotInGraph, FileSyntaxError
from .graph import (
    Graph,
    SpanningTree,
    build_graph,
    edge_id_of,
    spanning_tree_from_ids,
)


def parse_graph_file(text: str) -> Graph:
    n = m = None
    pairs: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if parts[0] == "p":
            if n is not None:
                raise FileSyntaxError(ln, "duplicate header line")
            if len(parts) != 3:
                raise FileSyntaxError(ln, "header must be 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise FileSyntaxError(ln, "header fields must be integers") from None
            if n < 0 or m < 0:
                raise FileSyntaxError(ln, "header fields must be nonnegative")
        elif parts[0] == "e":
            if n is None:
                raise FileSyntaxError(ln, "edge line before the header")
            if len(parts) != 3:
                raise FileSyntaxError(ln, "edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FileSyntaxError(ln, "edge endpoints must be integers") from None
            if len(pairs) >= m:
                raise FileSyntaxError(ln, f"more than the promised {m} edge lines")
            pairs.append((u, v))
        else:
            raise FileSyntaxError(ln, f"unknown directive {parts[0]!r}")
    end = len(text.splitlines()) + 1
    if n is None:
        raise FileSyntaxError(end, "missing 'p <n> <m>' header")
    if len(pairs) != m:
        raise FileSyntaxError(end, f"header promised {m} edges, file has {len(pairs)}")
    return build_graph(n, pairs)


def write_graph_file(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_tree_file(text: str, g: Graph) -> SpanningTree:
    ids: list[int] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if parts[0] != "e":
            raise FileSyntaxError(ln, "tree files hold only 'e <u> <v>' lines")
        if len(parts) != 3:
            raise FileSyntaxError(ln, "edge line must be 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FileSyntaxError(ln, "edge endpoints must be integers") from None
        eid = edge_id_of(g, u, v)
        if eid is None:
            raise EdgeNotInGraph((u, v))
        ids.append(eid)
    return spanning_tree_from_ids(g, ids)


def read_graph_path(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_file(fh.read())


def read_tree_path(path: str, g: Graph) -> SpanningTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree_file(fh.read(), g)


def write_graph_path(path: str, g: Graph, comments: tuple[str, ...] = ()) -> None:
    # whole-file atomic: write a sibling temp file, then rename over
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_graph_file(g, comments))
    os.replace(tmp, path)
