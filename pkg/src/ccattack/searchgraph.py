"""Induced graph over edit-matrix cells and shortest-path enumeration.

Vertices are the present matrix cells plus a source and a sink.  An edge
into cell ``(i, j)`` from ``(i-k, j-1)`` deletes ``k`` bits of X and matches
``x_{i+j}`` with ``y_j``; it "covers" the X positions ``i+j-k .. i+j``.
Source edges cover ``x_1..x_{i+1}`` and sink edges the trailing deletions.
Every source-to-sink path covers each X position exactly once, and the
decoded keep-mask has a 1 at every matched position.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

import numpy as np

from . import _accel
from .bits import BitsLike, as_bits, to_str
from .editmatrix import EditMatrix, compute_matrix

SOURCE = "source"
SINK = "sink"
Vertex = Union[str, tuple[int, int]]


@dataclass(frozen=True)
class Edge:
    tail: Vertex
    head: Vertex
    cost: int
    deletions: int
    substitution: bool
    span: tuple[int, int]  # covered X positions, 1-based inclusive; empty when start > end


@dataclass(frozen=True)
class AlignmentSolution:
    keep_mask: str
    noise_positions: tuple[int, ...]
    cost: int

    @property
    def consumed_mask(self) -> str:
        """Keep-mask truncated after its last kept position."""
        return self.keep_mask[: self.keep_mask.rfind("1") + 1]


class GraphError(ValueError):
    pass


class InducedGraph:
    def __init__(self, matrix: EditMatrix):
        if matrix.stop_column is not None:
            raise GraphError("induced graph needs a fully computed matrix")
        self.matrix = matrix
        self.x = matrix.x
        self.y = matrix.y
        self.N, self.M = matrix.N, matrix.M
        R = self.N - self.M
        W = matrix.cells
        self.vertices: list[Vertex] = [SOURCE]
        self.vertices += [(i, j) for j in range(1, self.M + 1) for i in range(R + 1) if W[i, j - 1] >= 0]
        self.vertices.append(SINK)
        edges: list[Edge] = []
        for j in range(1, self.M + 1):
            for i in range(R + 1):
                if W[i, j - 1] < 0:
                    continue
                sub = bool(self.x[i + j - 1] != self.y[j - 1])
                if j == 1:
                    edges.append(Edge(SOURCE, (i, 1), i + sub, i, sub, (1, i + 1)))
                    continue
                for k in range(min(i, matrix.kmax) + 1):
                    if W[i - k, j - 2] >= 0:
                        edges.append(Edge((i - k, j - 1), (i, j), k + sub, k, sub, (i + j - k, i + j)))
        for i in range(R + 1):
            if W[i, self.M - 1] >= 0:
                edges.append(Edge((i, self.M), SINK, R - i, R - i, False, (i + self.M + 1, self.N)))
        self.edges = edges
        self.distance = matrix.distance()

    def label(self, v: Vertex) -> Vertex:
        """Printed label ``(i+j, j)`` for a cell vertex."""
        if isinstance(v, str):
            return v
        i, j = v
        return (i + j, j)

    def dist(self, v: Vertex) -> int:
        if v == SOURCE:
            return 0
        if v == SINK:
            return self.distance
        i, j = v
        return int(self.matrix.cells[i, j - 1])

    def is_tight(self, e: Edge) -> bool:
        return self.dist(e.tail) + e.cost == self.dist(e.head)

    def shortest_path_edges(self) -> list[Edge]:
        """Edges lying on at least one shortest source-sink path."""
        useful = _useful_cells(self.matrix, self.distance)
        out = []
        for e in self.edges:
            if not self.is_tight(e):
                continue
            if e.head != SINK and not useful[e.head[0], e.head[1] - 1]:
                continue
            if e.tail != SOURCE and not useful[e.tail[0], e.tail[1] - 1]:
                continue
            out.append(e)
        return out

    def count_shortest_paths(self) -> int:
        return count_shortest_paths(self.matrix)


def build_induced_graph(x: BitsLike, y: BitsLike, kmax: int, *, open_tail: bool = False) -> InducedGraph:
    return InducedGraph(compute_matrix(x, y, kmax, open_tail=open_tail))


# -- shortest paths ------------------------------------------------------------


def _tight_steps(matrix: EditMatrix, j: int):
    """Per deletion count k, rows i of column ``j`` (1-based, j >= 2) whose edge from row i-k is tight."""
    W = matrix.cells
    R = matrix.N - matrix.M
    rows = np.arange(R + 1)
    cur = W[:, j - 1]
    sub = (matrix.x[rows + j - 1] != matrix.y[j - 1]).astype(np.int64)
    prev = W[:, j - 2]
    for k in range(min(matrix.kmax, R) + 1):
        tight = np.zeros(R + 1, dtype=bool)
        p = prev[: R + 1 - k]
        c = cur[k:]
        tight[k:] = (c >= 0) & (p >= 0) & (p + k + sub[k:] == c)
        yield k, tight


@_accel.njit
def _useful_numba(W, x, y, kmax, distance, useful):
    R = W.shape[0] - 1
    M = W.shape[1]
    for i in range(R + 1):
        useful[i, M - 1] = W[i, M - 1] >= 0 and W[i, M - 1] + R - i == distance
    for j in range(M, 1, -1):
        for i in range(R + 1):
            if not useful[i, j - 1]:
                continue
            target = W[i, j - 1] - (1 if x[i + j - 1] != y[j - 1] else 0)
            for k in range(min(i, kmax) + 1):
                p = W[i - k, j - 2]
                if p >= 0 and p + k == target:
                    useful[i - k, j - 2] = True


@_accel.njit
def _count_numba(W, x, y, kmax, distance):
    # Returns -1 when a partial count would overflow int64.
    R = W.shape[0] - 1
    M = W.shape[1]
    limit = 1 << 61
    ways = np.zeros(R + 1, dtype=np.int64)
    nxt = np.zeros(R + 1, dtype=np.int64)
    for i in range(R + 1):
        if W[i, 0] >= 0:
            ways[i] = 1
    for j in range(2, M + 1):
        for i in range(R + 1):
            nxt[i] = 0
            c = W[i, j - 1]
            if c < 0:
                continue
            target = c - (1 if x[i + j - 1] != y[j - 1] else 0)
            for k in range(min(i, kmax) + 1):
                p = W[i - k, j - 2]
                if p >= 0 and p + k == target:
                    nxt[i] += ways[i - k]
            if nxt[i] > limit:
                return -1
        for i in range(R + 1):
            ways[i] = nxt[i]
    total = 0
    for i in range(R + 1):
        c = W[i, M - 1]
        if c >= 0 and c + R - i == distance:
            total += ways[i]
            if total > limit:
                return -1
    return total


def _useful_cells(matrix: EditMatrix, distance: int) -> np.ndarray:
    """Cells on some shortest source-sink path: backward sweep over tight edges from the sink."""
    if _accel.USE_NUMBA:
        useful = np.zeros(matrix.cells.shape, dtype=np.bool_)
        _useful_numba(matrix.cells, matrix.x, matrix.y, matrix.kmax, distance, useful)
        return useful
    W = matrix.cells
    R = matrix.N - matrix.M
    M = matrix.M
    useful = np.zeros(W.shape, dtype=bool)
    last = W[:, M - 1]
    rows = np.arange(R + 1)
    useful[:, M - 1] = (last >= 0) & (last + R - rows == distance)
    for j in range(M, 1, -1):
        reach = useful[:, j - 1]
        for k, tight in _tight_steps(matrix, j):
            hit = tight & reach
            useful[: R + 1 - k, j - 2] |= hit[k:]
    return useful


def count_shortest_paths(matrix: EditMatrix) -> int:
    """Number of shortest source-sink paths, by dynamic programming over tight edges.

    Counts are Python integers so long windows cannot overflow.
    """
    d = matrix.distance()
    if _accel.USE_NUMBA:
        n = int(_count_numba(matrix.cells, matrix.x, matrix.y, matrix.kmax, d))
        if n >= 0:
            return n
    W = matrix.cells
    R = matrix.N - matrix.M
    M = matrix.M
    ways = np.where(W[:, 0] >= 0, 1, 0).astype(object)
    for j in range(2, M + 1):
        nxt = np.zeros(R + 1, dtype=object)
        for k, tight in _tight_steps(matrix, j):
            shifted = np.zeros(R + 1, dtype=object)
            shifted[k:] = ways[: R + 1 - k]
            nxt = nxt + np.where(tight, shifted, 0)
        ways = nxt
    last = W[:, M - 1]
    rows = np.arange(R + 1)
    ends = (last >= 0) & (last + R - rows == d)
    return int(sum(ways[ends]))


# Incremental filter: called with the mask built so far (list of 0/1 over X)
# and a flag telling whether the path has reached the sink.  Returning False
# prunes every completion of that prefix.
MaskFilter = Callable[[list, bool], bool]


def iter_shortest_paths(matrix: EditMatrix, accept: MaskFilter | None = None) -> Iterator[list[Vertex]]:
    """Shortest source-sink paths in lexicographic order of their row sequence."""
    d = matrix.distance()
    useful = _useful_cells(matrix, d)
    W = matrix.cells
    x, y = matrix.x, matrix.y
    R = matrix.N - matrix.M
    M, kmax = matrix.M, matrix.kmax

    starts = [i for i in range(R + 1) if useful[i, 0]]
    mask: list[int] = []
    path: list[Vertex] = [SOURCE]

    def extend(i: int, j: int):
        if j == M:
            tail = R - i
            mask.extend([0] * tail)
            if accept is None or accept(mask, True):
                yield path + [SINK]
            del mask[len(mask) - tail :]
            return
        for ni in range(i, min(i + kmax, R) + 1):
            if not useful[ni, j]:
                continue
            sub = int(x[ni + j] != y[j])
            if W[i, j - 1] + (ni - i) + sub != W[ni, j]:
                continue
            k = ni - i
            mask.extend([0] * k + [1])
            path.append((ni, j + 1))
            if accept is None or accept(mask, False):
                yield from extend(ni, j + 1)
            path.pop()
            del mask[len(mask) - k - 1 :]

    for i in starts:
        mask.extend([0] * i + [1])
        path.append((i, 1))
        if accept is None or accept(mask, False):
            yield from extend(i, 1)
        path.pop()
        mask.clear()


def path_to_alignment(path: Sequence[Vertex], x: BitsLike, y: BitsLike, kmax: int | None = None) -> AlignmentSolution:
    """Decode a source-sink path into a keep-mask (1 = matched) and substitution positions."""
    x = as_bits(x)
    y = as_bits(y)
    N, M = x.size, y.size
    if len(path) != M + 2 or path[0] != SOURCE or path[-1] != SINK:
        raise GraphError("path must run source -> one cell per column -> sink")
    cells = list(path[1:-1])
    rows = []
    for col, cell in enumerate(cells, start=1):
        if not isinstance(cell, tuple) or cell[1] != col:
            raise GraphError(f"malformed vertex {cell!r} in column {col}")
        rows.append(cell[0])
    prev = 0
    for r in rows:
        step = r - prev
        if step < 0 or (kmax is not None and step > kmax) or r > N - M:
            raise GraphError("path row sequence violates the deletion bound")
        prev = r
    mask = ["0"] * N
    noise = []
    for j, r in enumerate(rows, start=1):
        pos = r + j
        mask[pos - 1] = "1"
        if x[pos - 1] != y[j - 1]:
            noise.append(pos)
    return AlignmentSolution("".join(mask), tuple(noise), (N - M) + len(noise))


def enumerate_shortest_paths(graph: InducedGraph) -> list[AlignmentSolution]:
    """Every optimal alignment, decoded and de-duplicated."""
    seen = {}
    for path in iter_shortest_paths(graph.matrix):
        sol = path_to_alignment(path, graph.x, graph.y)
        seen.setdefault((sol.keep_mask, sol.noise_positions), sol)
    return list(seen.values())


# -- cut sets ------------------------------------------------------------------


def _covers(e: Edge, t: int) -> bool:
    return e.span[0] <= t <= e.span[1]


def cut_set(graph: InducedGraph, t: int) -> list[Edge]:
    """Edges tied to bit ``x_t`` plus later-bit edges leaving the same tail vertices."""
    if not 2 <= t <= graph.N - 1:
        raise GraphError(f"cut position {t} outside 2..{graph.N - 1}")
    first = [e for e in graph.edges if _covers(e, t)]
    tails = {e.tail for e in first}
    chosen = set(first)
    second = [e for e in graph.edges if e.tail in tails and e.span[0] > t and e not in chosen]
    return first + second


def disconnects(graph: InducedGraph, removed: Sequence[Edge]) -> bool:
    """True iff the sink is unreachable from the source once ``removed`` is deleted."""
    gone = set(removed)
    adj: dict[Vertex, list[Vertex]] = {}
    for e in graph.edges:
        if e not in gone:
            adj.setdefault(e.tail, []).append(e.head)
    stack, seen = [SOURCE], {SOURCE}
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return SINK not in seen


# -- DOT -----------------------------------------------------------------------


def _node_id(v: Vertex) -> str:
    return v if isinstance(v, str) else f"c{v[0]}_{v[1]}"


def to_dot(graph: InducedGraph, name: str = "induced") -> str:
    """DOT digraph; edges on shortest paths carry ``color=grey``."""
    tight = set(graph.shortest_path_edges())
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in graph.vertices:
        if isinstance(v, str):
            lines.append(f'  {v} [label="{v}", shape=box];')
        else:
            a, b = graph.label(v)
            lines.append(f'  {_node_id(v)} [label="({a},{b})"];')
    for e in graph.edges:
        attrs = [f'label="{e.cost}"']
        if e in tight:
            attrs.append("color=grey")
            attrs.append("penwidth=2")
        lines.append(f"  {_node_id(e.tail)} -> {_node_id(e.head)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "AlignmentSolution",
    "Edge",
    "InducedGraph",
    "SINK",
    "SOURCE",
    "build_induced_graph",
    "count_shortest_paths",
    "cut_set",
    "disconnects",
    "enumerate_shortest_paths",
    "iter_shortest_paths",
    "path_to_alignment",
    "to_dot",
]
