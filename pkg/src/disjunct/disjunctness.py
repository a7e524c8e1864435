"""Exact d-disjunctness verification, isolated-column peeling and deletion.

A matrix is d-disjunct when no column is contained in the union of d other
columns.  The checker decides this exactly per column: every other column
is restricted to its trace on the candidate column, dominated traces are
dropped, and the remaining cover problem is solved by depth-bounded
branch and bound.  Greedy covering would give false positives, so there
is deliberately no heuristic shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .matrix import BinaryMatrix, _iter_bits


@dataclass(frozen=True)
class Witness:
    """A concrete violation: ``column`` lies in the union of ``covering``."""

    column: int
    covering: tuple[int, ...]


@dataclass(frozen=True)
class DisjunctVerdict:
    """Result of a disjunctness check.

    ``vacuous`` flags the d >= n regime, where the property holds because
    there are not even d other columns to form a union.
    """

    is_disjunct: bool
    witness: Witness | None = None
    vacuous: bool = False


@dataclass(frozen=True)
class PeelResult:
    reduced: BinaryMatrix
    removed_column: int
    removed_rows: frozenset[int]


def _cover_search(masks: Sequence[int], j: int, depth: int) -> list[int] | None:
    """Find <= ``depth`` columns (other than j) whose union contains column j.

    Returns the covering column ids, or None when no such cover exists.
    Deterministic: branches on the uncovered row with the fewest covering
    traces (lowest row index on ties), candidate traces ordered by their
    representative column id.
    """
    cj = masks[j]
    if cj == 0:
        return []  # the empty column is covered by the empty union
    if depth <= 0:
        return None

    # traces of the other columns on the support of column j, one
    # representative column id (the lowest) per distinct trace
    rep: dict[int, int] = {}
    for k, mk in enumerate(masks):
        if k == j:
            continue
        trace = mk & cj
        if trace and trace not in rep:
            rep[trace] = k

    if not rep:
        return None

    # dominance pruning: a trace contained in another trace never helps
    order = sorted(rep, key=lambda m: -m.bit_count())
    traces: list[tuple[int, int]] = []
    for m in order:
        if any(m & ~big == 0 for big, _ in traces):
            continue
        traces.append((m, rep[m]))
    traces.sort(key=lambda mc: mc[1])

    rows = list(_iter_bits(cj))
    covering: dict[int, list[int]] = {r: [] for r in rows}
    for ti, (m, _) in enumerate(traces):
        for r in _iter_bits(m):
            covering[r].append(ti)
    if any(not lst for lst in covering.values()):
        return None  # some row of j is private against all other columns

    max_trace = max(m.bit_count() for m, _ in traces)
    dead: set[tuple[int, int]] = set()

    def dfs(uncovered: int, depth_left: int, chosen: list[int]) -> list[int] | None:
        if uncovered == 0:
            return chosen
        if depth_left == 0 or uncovered.bit_count() > depth_left * max_trace:
            return None
        key = (uncovered, depth_left)
        if key in dead:
            return None
        # fail-first: branch on the uncovered row with the fewest traces
        branch_row = -1
        branch_count = -1
        rest = uncovered
        while rest:
            low = rest & -rest
            r = low.bit_length() - 1
            rest ^= low
            c = len(covering[r])
            if branch_count < 0 or c < branch_count:
                branch_row, branch_count = r, c
        for ti in covering[branch_row]:
            m, col = traces[ti]
            result = dfs(uncovered & ~m, depth_left - 1, chosen + [col])
            if result is not None:
                return result
        dead.add(key)
        return None

    return dfs(cj, depth, [])


def is_d_disjunct(matrix: BinaryMatrix, d: int) -> DisjunctVerdict:
    """Exactly decide whether ``matrix`` is d-disjunct.

    On failure the verdict carries a witness: the lowest-index covered
    column together with <= d columns whose union contains it.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d >= matrix.n:
        return DisjunctVerdict(True, vacuous=True)
    masks = matrix.masks
    for j in range(matrix.n):
        cover = _cover_search(masks, j, d)
        if cover is not None:
            return DisjunctVerdict(False, Witness(j, tuple(cover)))
    return DisjunctVerdict(True)


def _min_cover_size(masks: Sequence[int], j: int, limit: int) -> int | None:
    """Size of the smallest cover of column j by other columns, or None.

    Iterative deepening up to ``limit``; exact because the underlying
    search is exact at every depth.
    """
    for depth in range(1, limit + 1):
        cover = _cover_search(masks, j, depth)
        if cover is not None:
            return max(1, len(cover))
    return None


def max_disjunct_order(matrix: BinaryMatrix) -> int:
    """Largest d >= 0 for which the matrix is d-disjunct, capped at n-1.

    0 means some column is contained in another.  Equivalent to running
    the checker for increasing d, but computed from per-column minimum
    cover sizes so the work is done once per column.
    """
    masks = matrix.masks
    best = matrix.n - 1
    for j in range(matrix.n):
        if best == 0:
            break
        # covers larger than best+1 cannot lower the answer
        size = _min_cover_size(masks, j, best)
        if size is not None:
            best = min(best, size - 1)
    return best


def find_isolated_columns(matrix: BinaryMatrix) -> frozenset[int]:
    """Columns owning a private row (a row contained in no other column)."""
    degrees = matrix.row_degrees()
    isolated: set[int] = set()
    for i in np.nonzero(degrees == 1)[0]:
        isolated.update(matrix.row_support(int(i)))
    return frozenset(isolated)


def peel_isolated(matrix: BinaryMatrix, j: int) -> PeelResult:
    """Remove isolated column j and all rows private to it.

    Preserves d-disjunctness: the removed rows belong to no other column,
    so no remaining column's support or potential covers change.
    """
    if not 0 <= j < matrix.n:
        raise ValueError(f"column index {j} out of range")
    if matrix.n < 2:
        raise ValueError("cannot peel the last column")
    degrees = matrix.row_degrees()
    col = matrix.column_mask(j)
    private = [r for r in _iter_bits(col) if degrees[r] == 1]
    if not private:
        raise ValueError(f"column {j} is not isolated")
    keep_rows = np.ones(matrix.t, dtype=bool)
    keep_rows[private] = False
    keep_cols = np.ones(matrix.n, dtype=bool)
    keep_cols[j] = False
    dense = matrix.dense()[keep_rows][:, keep_cols]
    return PeelResult(
        reduced=BinaryMatrix.from_dense(dense),
        removed_column=j,
        removed_rows=frozenset(private),
    )


def peel_to_core(matrix: BinaryMatrix) -> tuple[BinaryMatrix, int]:
    """Peel isolated columns until none remain (or one column is left).

    Returns the reduced matrix and the number of peeled columns.  Always
    peels the lowest-index isolated column first, so the result is
    deterministic.
    """
    peeled = 0
    while matrix.n >= 2:
        isolated = find_isolated_columns(matrix)
        if not isolated:
            break
        matrix = peel_isolated(matrix, min(isolated)).reduced
        peeled += 1
    return matrix, peeled


def delete_column_and_rows(matrix: BinaryMatrix, j: int) -> BinaryMatrix:
    """Remove column j and every row it contains.

    The result has (t - weight(j)) rows and n - 1 columns, surviving rows
    in their original order.  Applied to a d-disjunct matrix this yields a
    (d-1)-disjunct matrix.
    """
    if matrix.n < 2:
        raise ValueError("matrix must have at least 2 columns")
    if not 0 <= j < matrix.n:
        raise ValueError(f"column index {j} out of range")
    col = matrix.column_mask(j)
    keep_rows = np.ones(matrix.t, dtype=bool)
    keep_rows[list(_iter_bits(col))] = False
    keep_cols = np.ones(matrix.n, dtype=bool)
    keep_cols[j] = False
    dense = matrix.dense()[keep_rows][:, keep_cols]
    return BinaryMatrix.from_dense(dense)
