"""Pooling semantics: test outcomes for a positive set and the naive decoder.

A test is positive iff it contains a positive item, so the outcome vector
is the boolean sum of the positive columns.  The naive decoder returns
every item appearing in no negative test; on a d-disjunct matrix it
recovers any positive set of size at most d exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from . import _kernels
from .matrix import BinaryMatrix, _iter_bits, _mask_to_words


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its case budget."""


@dataclass(frozen=True)
class OutcomeVector:
    """Length-t outcome bit vector, packed; bit i is the result of test i."""

    t: int
    mask: int = 0

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("t must be >= 0")
        if self.mask < 0 or self.mask >> self.t:
            raise ValueError("outcome bits beyond t")

    @classmethod
    def from_bitstring(cls, text: str) -> "OutcomeVector":
        if any(ch not in "01" for ch in text):
            raise ValueError("outcome bitstring must contain only 0 and 1")
        mask = 0
        for i, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << i
        return cls(len(text), mask)

    def to_bitstring(self) -> str:
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(self.t))

    @property
    def positives(self) -> frozenset[int]:
        return frozenset(_iter_bits(self.mask))


def outcomes(matrix: BinaryMatrix, positives: Iterable[int]) -> OutcomeVector:
    """Outcome vector when exactly ``positives`` are the positive items."""
    mask = 0
    for j in positives:
        if not 0 <= j < matrix.n:
            raise ValueError(f"item index {j} out of range")
        mask |= matrix.column_mask(j)
    return OutcomeVector(matrix.t, mask)


def naive_decode(matrix: BinaryMatrix, outcome: OutcomeVector) -> frozenset[int]:
    """Items appearing in no negative test: {j : support(c_j) within positives}.

    Returns the full candidate set even when it has more than d members;
    callers compare its size against d when checking guarantees.
    """
    if outcome.t != matrix.t:
        raise ValueError(
            f"outcome length {outcome.t} does not match t={matrix.t}"
        )
    hits = _kernels.subset_columns(
        matrix.words, _mask_to_words(outcome.mask, matrix.words.shape[1])
    )
    return frozenset(np.nonzero(hits)[0].tolist())


@dataclass(frozen=True)
class IdentificationReport:
    ok: bool
    cases: int
    failure: tuple[int, ...] | None = None


def verify_identification(
    matrix: BinaryMatrix, d: int, max_cases: int = 2_000_000
) -> IdentificationReport:
    """Exhaustively check exact decoding of every positive set of size <= d.

    Enumerates positive sets by size then lexicographically (the empty set
    included) and reports the first failure in that order.  Raises
    :class:`BudgetExceededError` up front when the enumeration would
    exceed ``max_cases``; it never silently truncates.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    n = matrix.n
    total = sum(comb(n, k) for k in range(0, min(d, n) + 1))
    if total > max_cases:
        raise BudgetExceededError(
            f"{total} positive sets exceed the budget of {max_cases}"
        )
    checked = 0
    single_word = matrix.words.shape[1] == 1
    for k in range(0, min(d, n) + 1):
        if single_word:
            combos = np.fromiter(
                (j for combo in combinations(range(n), k) for j in combo),
                dtype=np.int64,
                count=comb(n, k) * k,
            ).reshape(comb(n, k), k)
            bad = _kernels.identification_scan(matrix.words[:, 0], combos)
            if bad != -1:
                return IdentificationReport(
                    ok=False,
                    cases=checked + bad + 1,
                    failure=tuple(int(x) for x in combos[bad]),
                )
            checked += combos.shape[0]
        else:
            masks = matrix.masks
            for combo in combinations(range(n), k):
                union = 0
                for j in combo:
                    union |= masks[j]
                decoded = frozenset(
                    j for j in range(n) if masks[j] & ~union == 0
                )
                checked += 1
                if decoded != frozenset(combo):
                    return IdentificationReport(
                        ok=False, cases=checked, failure=combo
                    )
    return IdentificationReport(ok=True, cases=checked)
