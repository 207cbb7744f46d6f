"""Exception hierarchy.

Three user-facing branches map onto CLI exit codes: bad input (1), a
configured limit was hit (2), and an internal cross-check disagreed (3).
PreconditionViolated signals a programming error in a caller and is
deliberately outside the CLI mapping.
"""

from __future__ import annotations


class CactusKitError(Exception):
    pass


class InputError(CactusKitError):
    """Invalid graph, file, or parameter. CLI exit code 1."""


class LimitError(CactusKitError):
    """A size or work cap was exceeded. CLI exit code 2."""


class CrossCheckError(CactusKitError):
    """Two routes that must agree did not. CLI exit code 3."""


class PreconditionViolated(CactusKitError):
    """An operation was called outside its contract; a bug, never user input."""


# ---- input errors ----------------------------------------------------------

class LoopEdge(InputError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(InputError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class VertexOutOfRange(InputError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} outside 0..{n - 1}")
        self.v, self.n = v, n


class EmptyGraph(InputError):
    def __init__(self):
        super().__init__("graph needs at least one vertex")


class NotConnected(InputError):
    def __init__(self, detail: str = "graph is not connected"):
        super().__init__(detail)


class EmptySubset(InputError):
    def __init__(self):
        super().__init__("vertex subset is empty")


class EdgeNotInGraph(InputError):
    def __init__(self, edge):
        super().__init__(f"edge {edge!r} is not in the graph")
        self.edge = edge


class WrongEdgeCount(InputError):
    def __init__(self, got: int, want: int):
        super().__init__(f"expected {want} edges, got {got}")
        self.got, self.want = got, want


class NotSpanningTree(InputError):
    def __init__(self, detail: str = "edge set is not a spanning tree"):
        super().__init__(detail)


class SameEndpoints(InputError):
    def __init__(self, v: int):
        super().__init__(f"endpoints coincide at vertex {v}")
        self.v = v


class NotConnectedSubset(InputError):
    def __init__(self, subset):
        super().__init__(f"induced subgraph on {sorted(subset)} is not connected")
        self.subset = frozenset(subset)


class SubsetTooLarge(InputError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"subset of size {size} exceeds base-case cap {cap}")
        self.size, self.cap = size, cap


class InfeasibleParams(InputError):
    def __init__(self, detail: str):
        super().__init__(detail)


class FileSyntaxError(InputError):
    """Malformed instance file. Named to avoid clashing with the builtin."""

    def __init__(self, line: int, detail: str):
        super().__init__(f"line {line}: {detail}")
        self.line = line


# ---- limit errors ----------------------------------------------------------

class TooLargeForOracle(LimitError):
    def __init__(self, size: int, cap: int, what: str = "edges"):
        super().__init__(f"brute-force oracle capped at {cap} {what}, got {size}")
        self.size, self.cap = size, cap


class LimitExceeded(LimitError):
    def __init__(self, limit: int, partial_stats=None):
        super().__init__(f"enumeration stopped at limit {limit}")
        self.limit = limit
        self.partial_stats = partial_stats


class TooManyTrees(LimitError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} spanning trees exceed the limit {limit}")
        self.count, self.limit = count, limit


class TooManyVertices(LimitError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"{n} vertices exceed the cap {cap}")
        self.n, self.cap = n, cap


class TooManyEdges(LimitError):
    def __init__(self, m: int, cap: int):
        super().__init__(f"{m} edges exceed the cap {cap}")
        self.m, self.cap = m, cap
