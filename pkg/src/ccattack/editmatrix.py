"""Constrained edit distance matrix (deletions and substitutions only).

``W[i, j]`` (``i = 0..N-M``, ``j = 1..M``) is the cheapest way to align
``x_1..x_{i+j}`` with ``y_1..y_j`` where ``y_j`` is matched to ``x_{i+j}``.
Entering a cell after deleting ``k <= kmax`` bits costs ``k`` plus one if
the matched bits differ.  Cells outside the reachable band are absent and
stored as ``-1``.

With a bounded tail (the default) the bits after the last match may number
at most ``kmax``, so a cell is present iff ``i <= j*kmax`` and
``N-M-i <= (M-j+1)*kmax``.  An open tail drops the second condition; the
attack uses it when the candidate window is longer than the part actually
consumed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .bits import BitsLike, as_bits

ABSENT = -1
_BIG = np.int64(1) << 40


class MatrixError(ValueError):
    pass


@_accel.njit
def _matrix_numba(x, y, kmax, open_tail, threshold, W):
    N = x.shape[0]
    M = y.shape[0]
    R = N - M
    big = 1 << 40
    for j in range(1, M + 1):
        violating = True
        for i in range(R + 1):
            if i > j * kmax:
                continue
            if not open_tail and R - i > (M - j + 1) * kmax:
                continue
            c = 1 if x[i + j - 1] != y[j - 1] else 0
            if j == 1:
                v = i + c
            else:
                best = big
                top = i if i < kmax else kmax
                for k in range(top + 1):
                    p = W[i - k, j - 2]
                    if p >= 0 and p + k < best:
                        best = p + k
                if best == big:
                    continue
                v = best + c
            W[i, j - 1] = v
            if v <= threshold - (R - i):
                violating = False
        if threshold >= 0 and violating:
            return j
    return 0


def _matrix_numpy(x, y, kmax, open_tail, threshold, W):
    N, M = x.shape[0], y.shape[0]
    R = N - M
    rows = np.arange(R + 1)
    prev = None
    for j in range(1, M + 1):
        present = rows <= j * kmax
        if not open_tail:
            present &= (R - rows) <= (M - j + 1) * kmax
        c = (x[rows + j - 1] != y[j - 1]).astype(np.int64)
        if j == 1:
            col = rows + c
        else:
            src = np.where(prev >= 0, prev, _BIG)
            best = np.full(R + 1, _BIG)
            for k in range(min(kmax, R) + 1):
                np.minimum(best[k:], src[: R + 1 - k] + k, out=best[k:])
            present &= best < _BIG
            col = best + c
        col = np.where(present, col, ABSENT)
        W[:, j - 1] = col
        if threshold >= 0:
            ok = present & (col <= threshold - (R - rows))
            if not ok.any():
                return j
        prev = col
    return 0


def _run_kernel(x, y, kmax, open_tail, threshold, W):
    if _accel.USE_NUMBA:
        return int(_matrix_numba(x, y, kmax, open_tail, threshold, W))
    return int(_matrix_numpy(x, y, kmax, open_tail, threshold, W))


@dataclass(frozen=True, eq=False)
class EditMatrix:
    x: np.ndarray
    y: np.ndarray
    kmax: int
    cells: np.ndarray
    open_tail: bool = False
    threshold: int | None = None
    stop_column: int | None = None
    _cells_computed: int = field(default=0, repr=False)

    @property
    def N(self) -> int:
        return int(self.x.size)

    @property
    def M(self) -> int:
        return int(self.y.size)

    @property
    def rows(self) -> int:
        return self.N - self.M + 1

    @property
    def columns_computed(self) -> int:
        return self.stop_column or self.M

    @property
    def cells_computed(self) -> int:
        return self._cells_computed

    def get(self, i: int, j: int) -> int | None:
        """Cell ``w_{i,j}`` (1-based column) or None when absent."""
        if not (0 <= i < self.rows and 1 <= j <= self.M):
            raise IndexError((i, j))
        v = int(self.cells[i, j - 1])
        return None if v < 0 else v

    def present(self, i: int, j: int) -> bool:
        return 0 <= i < self.rows and 1 <= j <= self.M and self.cells[i, j - 1] >= 0

    def as_rows(self) -> list[list[int | None]]:
        return [[None if v < 0 else int(v) for v in row] for row in self.cells]

    def distance(self) -> int:
        return edit_distance(self)

    def dump(self) -> str:
        """Matrix text with ``-`` for absent cells, one row per line."""
        return "\n".join(" ".join("-" if v is None else str(v) for v in row) for row in self.as_rows())

    def __eq__(self, other) -> bool:
        if not isinstance(other, EditMatrix):
            return NotImplemented
        return (
            np.array_equal(self.x, other.x)
            and np.array_equal(self.y, other.y)
            and self.kmax == other.kmax
            and self.open_tail == other.open_tail
            and self.stop_column == other.stop_column
            and np.array_equal(self.cells, other.cells)
        )


def _check_inputs(x: BitsLike, y: BitsLike, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    x = as_bits(x)
    y = as_bits(y)
    if y.size == 0:
        raise MatrixError("Y must be nonempty")
    if y.size > x.size:
        raise MatrixError(f"M={y.size} exceeds N={x.size}")
    if kmax < 1:
        raise MatrixError("kmax must be at least 1")
    return x, y


def compute_matrix(
    x: BitsLike,
    y: BitsLike,
    kmax: int,
    threshold: int | None = None,
    *,
    open_tail: bool = False,
) -> EditMatrix:
    """Fill the matrix column by column, halting at the first stop column for ``threshold``."""
    x, y = _check_inputs(x, y, kmax)
    N, M = x.size, y.size
    W = np.full((N - M + 1, M), ABSENT, dtype=np.int64)
    t = -1 if threshold is None else int(threshold)
    if threshold is not None and t < 0:
        raise MatrixError("threshold must be non-negative")
    stop = _run_kernel(x, y, int(kmax), bool(open_tail), t, W)
    computed = stop or M
    W.flags.writeable = False
    return EditMatrix(
        x=x,
        y=y,
        kmax=int(kmax),
        cells=W,
        open_tail=bool(open_tail),
        threshold=threshold,
        stop_column=stop or None,
        _cells_computed=int((W[:, :computed] >= 0).sum()),
    )


def edit_distance(matrix: EditMatrix) -> int:
    """``min_i w_{i,M} + N - M - i`` over the present cells of the last column."""
    if matrix.stop_column is not None:
        raise MatrixError(f"matrix halted at stop column {matrix.stop_column}")
    R = matrix.N - matrix.M
    last = matrix.cells[:, -1]
    rows = np.nonzero(last >= 0)[0]
    if rows.size == 0:
        raise MatrixError("no alignment satisfies the deletion-run bound")
    return int((last[rows] + R - rows).min())


def is_stop_column(matrix: EditMatrix, j: int, threshold: int) -> bool:
    """True iff every present cell of column ``j`` exceeds ``threshold - (N-M-i)``."""
    if not 1 <= j <= matrix.columns_computed:
        raise MatrixError(f"column {j} not computed")
    R = matrix.N - matrix.M
    col = matrix.cells[:, j - 1]
    rows = np.arange(col.size)
    ok = (col >= 0) & (col <= threshold - (R - rows))
    return not bool(ok.any())


def first_stop_column(matrix: EditMatrix, threshold: int) -> int | None:
    """Stop column a thresholded run would have reported, read off a full matrix."""
    for j in range(1, matrix.columns_computed + 1):
        if is_stop_column(matrix, j, threshold):
            return j
    return None


def presence_mask(N: int, M: int, kmax: int, open_tail: bool = False) -> np.ndarray:
    """Band of cells allowed by the deletion-run bound alone."""
    i = np.arange(N - M + 1)[:, None]
    j = np.arange(1, M + 1)[None, :]
    mask = i <= j * kmax
    if not open_tail:
        mask = mask & ((N - M - i) <= (M - j + 1) * kmax)
    return mask
