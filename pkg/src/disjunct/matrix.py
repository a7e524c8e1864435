"""Bit-packed binary incidence matrices and the .dmat text format.

A ``BinaryMatrix`` is a t x n 0/1 matrix stored column-major: each column
is the bit-packed set of row indices it contains.  Rows are tests, columns
are items; all analysis code iterates over columns and intersects them, so
the column-major packing is the natural layout.  Matrices are immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

WORD_BITS = 64

_HEADER_RE = re.compile(r"^(\d+) (\d+)$")
_ROW_RE = re.compile(r"^[01]*$")


class DmatFormatError(ValueError):
    """Malformed .dmat text; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _num_words(t: int) -> int:
    return max(1, (t + WORD_BITS - 1) // WORD_BITS)


def _mask_to_words(mask: int, num_words: int) -> np.ndarray:
    return np.frombuffer(mask.to_bytes(num_words * 8, "little"), dtype=np.uint64)


def _words_to_mask(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words).tobytes(), "little")


@dataclass(frozen=True)
class ColumnSupport:
    """A column viewed as its set of row indices, packed into one int.

    ``mask`` has bit i set iff row i is in the column; ``t`` is the number
    of rows of the owning matrix (0 is allowed for the empty sum).
    """

    t: int
    mask: int = 0

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("row count must be >= 0")
        if self.mask < 0 or self.mask >> self.t:
            raise ValueError("support contains row indices >= t")

    @classmethod
    def from_rows(cls, t: int, rows: Iterable[int]) -> "ColumnSupport":
        mask = 0
        for r in rows:
            if not 0 <= r < t:
                raise ValueError(f"row index {r} out of range for t={t}")
            mask |= 1 << r
        return cls(t, mask)

    @property
    def rows(self) -> frozenset[int]:
        return frozenset(_iter_bits(self.mask))

    @property
    def weight(self) -> int:
        return self.mask.bit_count()


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def boolean_sum(cols: Sequence[ColumnSupport]) -> ColumnSupport:
    """Union of column supports (the componentwise boolean OR)."""
    cols = list(cols)
    if not cols:
        return ColumnSupport(0, 0)
    t = cols[0].t
    mask = 0
    for c in cols:
        if c.t != t:
            raise ValueError("boolean_sum over columns with different row counts")
        mask |= c.mask
    return ColumnSupport(t, mask)


def contains(a: ColumnSupport, b: ColumnSupport) -> bool:
    """True iff the support of ``b`` is a subset of the support of ``a``."""
    if a.t != b.t:
        raise ValueError("containment between columns with different row counts")
    return b.mask & ~a.mask == 0


class BinaryMatrix:
    """Immutable t x n binary matrix with bit-packed columns.

    Column order is significant and preserved; duplicate and empty columns
    are representable (checkers report them as property violations rather
    than refusing the input).
    """

    __slots__ = ("t", "n", "_words", "_masks", "_row_degrees", "_dense_cache")

    # analysis operations are specified at desk scale; densifying above
    # this many cells is almost certainly a mistake
    _DENSE_LIMIT = 1 << 28

    def __init__(self, t: int, words: np.ndarray):
        # t == 0 is a legal degenerate case: deleting all rows intersecting
        # a full-weight column leaves a 0 x (n-1) matrix
        if t < 0:
            raise ValueError("row count must be >= 0")
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.ndim != 2 or words.shape[0] < 1:
            raise ValueError("matrix must have at least one column")
        if words.shape[1] != _num_words(t):
            raise ValueError(
                f"expected {_num_words(t)} words per column, got {words.shape[1]}"
            )
        if t == 0:
            if words.any():
                raise ValueError("columns contain row indices >= t")
        else:
            spill = t % WORD_BITS
            if spill and (words[:, -1] >> np.uint64(spill)).any():
                raise ValueError("columns contain row indices >= t")
        words.setflags(write=False)
        self.t = t
        self.n = words.shape[0]
        self._words = words
        self._masks: tuple[int, ...] | None = None
        self._row_degrees: np.ndarray | None = None
        self._dense_cache: np.ndarray | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_columns(
        cls, t: int, columns: Iterable[Iterable[int]]
    ) -> "BinaryMatrix":
        masks = [ColumnSupport.from_rows(t, rows).mask for rows in columns]
        return cls.from_masks(t, masks)

    @classmethod
    def from_masks(cls, t: int, masks: Sequence[int]) -> "BinaryMatrix":
        w = _num_words(t)
        words = np.empty((len(masks), w), dtype=np.uint64)
        for j, mask in enumerate(masks):
            if mask < 0 or mask >> t:
                raise ValueError(f"column {j} contains row indices >= t")
            words[j] = _mask_to_words(mask, w)
        return cls(t, words)

    @classmethod
    def from_dense(cls, array) -> "BinaryMatrix":
        dense = np.asarray(array)
        if dense.ndim != 2:
            raise ValueError("dense input must be 2-dimensional")
        dense = dense.astype(bool)
        t, n = dense.shape
        w = _num_words(t)
        packed = np.packbits(dense.T, axis=1, bitorder="little")
        padded = np.zeros((n, w * 8), dtype=np.uint8)
        padded[:, : packed.shape[1]] = packed
        return cls(t, padded.view(np.uint64))

    # -- accessors ----------------------------------------------------

    @property
    def words(self) -> np.ndarray:
        """Read-only (n, W) uint64 view of the packed columns."""
        return self._words

    @property
    def masks(self) -> tuple[int, ...]:
        """Column supports as arbitrary-precision int bitmasks."""
        if self._masks is None:
            self._masks = tuple(
                _words_to_mask(self._words[j]) for j in range(self.n)
            )
        return self._masks

    def column_mask(self, j: int) -> int:
        return self.masks[j]

    def column_support(self, j: int) -> ColumnSupport:
        return ColumnSupport(self.t, self.masks[j])

    def weight(self, j: int) -> int:
        return self.masks[j].bit_count()

    def weights(self) -> np.ndarray:
        return _kernels.column_weights(self._words)

    def row_support(self, i: int) -> frozenset[int]:
        """Set of columns with a 1 in row ``i``."""
        if not 0 <= i < self.t:
            raise ValueError(f"row index {i} out of range")
        bits = (self._words[:, i >> 6] >> np.uint64(i & 63)) & np.uint64(1)
        return frozenset(np.nonzero(bits)[0].tolist())

    def row_degrees(self) -> np.ndarray:
        """Number of columns containing each row."""
        if self._row_degrees is None:
            self._row_degrees = _kernels.row_degrees(self._words, self.t)
            self._row_degrees.setflags(write=False)
        return self._row_degrees

    def dense(self) -> np.ndarray:
        """Read-only (t, n) bool view; for desk-scale matrices only."""
        if self._dense_cache is None:
            if self.t * self.n > self._DENSE_LIMIT:
                raise ValueError("matrix too large to densify")
            bits = np.unpackbits(
                self._words.view(np.uint8), axis=1, bitorder="little", count=self.t
            )
            dense = bits.T.astype(bool)
            dense.setflags(write=False)
            self._dense_cache = dense
        return self._dense_cache

    # -- dunder -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (
            self.t == other.t
            and self.n == other.n
            and bool(np.array_equal(self._words, other._words))
        )

    def __hash__(self):
        return hash((self.t, self.n, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix(t={self.t}, n={self.n})"


# ---------------------------------------------------------------------------
# .dmat text format
# ---------------------------------------------------------------------------


def read_matrix(text: str) -> BinaryMatrix:
    """Parse .dmat text: header ``"t n"`` then t rows of n chars in {0,1}.

    Raises :class:`DmatFormatError` naming the offending line on any
    deviation, including a missing trailing newline.
    """
    if not text.endswith("\n"):
        raise DmatFormatError(max(1, text.count("\n") + 1), "missing trailing newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise DmatFormatError(1, "empty input")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise DmatFormatError(1, f"malformed header {lines[0]!r}")
    t, n = int(header.group(1)), int(header.group(2))
    if t < 1 or n < 1:
        raise DmatFormatError(1, "t and n must be positive")
    actual = len(lines) - 1
    if actual < t:
        raise DmatFormatError(len(lines) + 1, f"expected {t} rows, got {actual}")
    if actual > t:
        raise DmatFormatError(t + 2, f"expected {t} rows, got {actual}")
    dense = np.zeros((t, n), dtype=bool)
    for i, row in enumerate(lines[1:]):
        if not _ROW_RE.match(row):
            bad = next(ch for ch in row if ch not in "01")
            raise DmatFormatError(i + 2, f"invalid character {bad!r}")
        if len(row) != n:
            raise DmatFormatError(i + 2, f"expected {n} characters, got {len(row)}")
        dense[i] = np.frombuffer(row.encode("ascii"), dtype=np.uint8) == ord("1")
    return BinaryMatrix.from_dense(dense)


def write_matrix(matrix: BinaryMatrix) -> str:
    """Serialize to canonical .dmat text (round-trips with read_matrix)."""
    if matrix.t == 0:
        raise ValueError("cannot serialize a 0-row matrix")
    dense = matrix.dense()
    body = (dense.astype(np.uint8) + ord("0")).tobytes().decode("ascii")
    rows = [body[i * matrix.n : (i + 1) * matrix.n] for i in range(matrix.t)]
    return f"{matrix.t} {matrix.n}\n" + "\n".join(rows) + "\n"


def load_matrix(path) -> BinaryMatrix:
    with open(path, "r", encoding="ascii") as fh:
        return read_matrix(fh.read())


def save_matrix(matrix: BinaryMatrix, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(write_matrix(matrix))
