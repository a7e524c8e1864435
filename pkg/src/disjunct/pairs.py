"""Private 2-subset classification and the matching-number machinery.

A 2-subset of rows inside a column is private when no other column
contains both rows, non-private otherwise.  The non-private pairs of a
column form a graph on its support whose matching number is the lever of
the general row lower bound: a d-disjunct matrix with no isolated columns
cannot afford s pairwise disjoint non-private pairs inside a column of
weight d+s.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels
from .disjunctness import find_isolated_columns, is_d_disjunct
from .matrix import BinaryMatrix, _iter_bits


@dataclass(frozen=True)
class PairClassification:
    """Partition of the 2-subsets of one column into private/non-private."""

    column: int
    private_pairs: frozenset[tuple[int, int]]
    nonprivate_pairs: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class PairGraph:
    """Graph on the rows of one column whose edges are non-private pairs."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if a >= b:
                raise ValueError(f"edge ({a},{b}) must be ordered a < b")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"edge ({a},{b}) has endpoint outside vertex set")


def classify_pairs(matrix: BinaryMatrix, j: int) -> PairClassification:
    """Split the 2-subsets of column j into private and non-private."""
    if not 0 <= j < matrix.n:
        raise ValueError(f"column index {j} out of range")
    masks = matrix.masks
    cj = masks[j]
    counts = _kernels.intersection_counts(matrix.words, matrix.words[j])
    nonprivate: set[tuple[int, int]] = set()
    for k in np.nonzero(counts >= 2)[0]:
        k = int(k)
        if k == j:
            continue
        shared = sorted(_iter_bits(masks[k] & cj))
        nonprivate.update(combinations(shared, 2))
    support = sorted(_iter_bits(cj))
    all_pairs = set(combinations(support, 2))
    return PairClassification(
        column=j,
        private_pairs=frozenset(all_pairs - nonprivate),
        nonprivate_pairs=frozenset(nonprivate),
    )


def pair_graph(matrix: BinaryMatrix, j: int) -> PairGraph:
    """The non-private pair graph of column j."""
    cls = classify_pairs(matrix, j)
    support = frozenset(_iter_bits(matrix.column_mask(j)))
    return PairGraph(vertices=support, edges=cls.nonprivate_pairs)


def matching_number(graph: PairGraph) -> int:
    """Exact maximum matching size of a general (possibly non-bipartite) graph.

    Memoized recursion over the active-vertex bitmask: the lowest active
    vertex is either left unmatched or matched to one of its neighbours.
    Exponential in the worst case but exact, which is what counts here;
    the graphs analysed are column-sized.
    """
    verts = sorted(graph.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adjacency = [0] * len(verts)
    for a, b in graph.edges:
        ia, ib = index[a], index[b]
        adjacency[ia] |= 1 << ib
        adjacency[ib] |= 1 << ia

    memo: dict[int, int] = {}

    def best(active: int) -> int:
        while active:
            low = active & -active
            v = low.bit_length() - 1
            if adjacency[v] & active & ~low:
                break
            active ^= low  # v has no active neighbour, drop it
        else:
            return 0
        if active in memo:
            return memo[active]
        low = active & -active
        v = low.bit_length() - 1
        result = best(active ^ low)  # leave v unmatched
        partners = adjacency[v] & active & ~low
        while partners:
            ulow = partners & -partners
            partners ^= ulow
            result = max(result, 1 + best(active ^ low ^ ulow))
        memo[active] = result
        return result

    return best((1 << len(verts)) - 1)


def erdos_gallai_bound(k: int, mu: int) -> int:
    """Maximum edges of a graph on k vertices with matching number <= mu.

    The Erdos-Gallai bound max{C(2*mu+1, 2), C(k, 2) - C(k-mu, 2)}, valid
    for k >= 2*mu + 1.
    """
    if mu < 0:
        raise ValueError("mu must be >= 0")
    if k < 2 * mu + 1:
        raise ValueError(f"bound requires k >= 2*mu+1, got k={k}, mu={mu}")
    return max(comb(2 * mu + 1, 2), comb(k, 2) - comb(k - mu, 2))


def complete_graph_matchings(k: int) -> tuple[np.ndarray, np.ndarray]:
    """All matchings of the complete graph on k vertices, as edge bitmasks.

    Edges are indexed in lexicographic order of their vertex pairs.
    Returns (masks, sizes) including the empty matching.
    """
    pairs = list(combinations(range(k), 2))
    masks: list[int] = []
    sizes: list[int] = []

    def extend(start: int, used: int, mask: int, size: int) -> None:
        masks.append(mask)
        sizes.append(size)
        for e in range(start, len(pairs)):
            a, b = pairs[e]
            bits = (1 << a) | (1 << b)
            if used & bits:
                continue
            extend(e + 1, used | bits, mask | (1 << e), size + 1)

    extend(0, 0, 0, 0)
    return np.array(masks, dtype=np.uint32), np.array(sizes, dtype=np.uint8)


def matching_numbers_all_graphs(k: int) -> np.ndarray:
    """Matching number of every labeled graph on k vertices.

    Index g is the graph whose edge set is the bitmask g over the
    lexicographically ordered vertex pairs.  Tabulation limited to k <= 7
    (2^21 graphs).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 7:
        raise ValueError("tabulation limited to k <= 7")
    masks, sizes = complete_graph_matchings(k)
    return _kernels.matching_numbers_table(comb(k, 2), masks, sizes)


def max_edges_matching_bounded(k: int, mu: int) -> int:
    """Exact max{|E(G)| : G on k labeled vertices, matching number <= mu}.

    Brute force over all 2^C(k,2) graphs; the independent route against
    which the closed-form bound is checked.
    """
    if mu < 0:
        raise ValueError("mu must be >= 0")
    nu = matching_numbers_all_graphs(k)
    edge_counts = np.bitwise_count(np.arange(nu.size, dtype=np.uint32))
    eligible = edge_counts[nu <= mu]
    return int(eligible.max())


def formula_one(d: int, s: int) -> int:
    """Piecewise maximum governing the non-private pair budget.

    Equals C(d+s, 2) - C(d+1, 2) for 3s <= 2d+2 and C(2s-1, 2) for
    3s >= 2d+2; computed as the max of both branches so the piecewise
    split is a tested consequence, not an input.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if s < 1:
        raise ValueError("s must be >= 1")
    return max(comb(d + s, 2) - comb(d + 1, 2), comb(2 * s - 1, 2))


@dataclass(frozen=True)
class Lemma3Report:
    """Non-private pair bound check for one column of a d-disjunct matrix."""

    column: int
    weight: int
    s: int
    in_range: bool
    bound: int
    num_nonprivate: int
    matching: int
    bound_ok: bool
    matching_ok: bool
    warning: str | None = None


def verify_lemma3(
    matrix: BinaryMatrix,
    j: int,
    d: int,
    *,
    allow_out_of_range: bool = False,
    check_disjunct: bool = True,
) -> Lemma3Report:
    """Check |N(c)| <= m(d+s, 2, s-1) and nu(N(c)) <= s-1 for column j.

    Requires a d-disjunct matrix with no isolated columns and a column of
    weight d+s with 1 <= s <= d-1.  With ``allow_out_of_range`` the bound
    is still evaluated for s >= d, with a warning instead of an error;
    ``check_disjunct=False`` skips the (expensive) disjunctness
    precondition, e.g. to demonstrate the contrapositive on a known
    non-disjunct matrix.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 <= j < matrix.n:
        raise ValueError(f"column index {j} out of range")
    isolated = find_isolated_columns(matrix)
    if isolated:
        raise ValueError(
            f"matrix has isolated columns (e.g. column {min(isolated)})"
        )
    if check_disjunct and not is_d_disjunct(matrix, d).is_disjunct:
        raise ValueError(f"matrix is not {d}-disjunct")
    weight = matrix.weight(j)
    s = weight - d
    if s < 1:
        raise ValueError(
            f"column {j} has weight {weight} <= d={d}; no s >= 1 applies"
        )
    in_range = s <= d - 1
    warning = None
    if not in_range:
        if not allow_out_of_range:
            raise ValueError(
                f"column {j} weight {weight} gives s={s} outside 1..{d - 1}"
            )
        warning = f"hypothesis out of range: s={s} exceeds d-1={d - 1}"
    # m(d+s, 2, s-1) needs d+s >= 2s-1, i.e. s <= d+1; beyond that fall
    # back to the piecewise maximum the bound closes to
    if s <= d + 1:
        bound = erdos_gallai_bound(d + s, s - 1)
    else:
        bound = formula_one(d, s)
    graph = pair_graph(matrix, j)
    nu = matching_number(graph)
    num_nonprivate = len(graph.edges)
    return Lemma3Report(
        column=j,
        weight=weight,
        s=s,
        in_range=in_range,
        bound=bound,
        num_nonprivate=num_nonprivate,
        matching=nu,
        bound_ok=num_nonprivate <= bound,
        matching_ok=nu <= s - 1,
        warning=warning,
    )


@dataclass(frozen=True)
class PairBudget:
    """Total private pairs across columns against the global C(t,2) budget."""

    total: int
    budget: int
    ok: bool


def private_pair_budget(matrix: BinaryMatrix) -> PairBudget:
    """Sum of |P(c)| over all columns, bounded by C(t, 2).

    A private pair belongs to exactly one column, so ``ok`` is always
    true; a false value indicates an implementation bug.
    """
    total = sum(
        len(classify_pairs(matrix, j).private_pairs) for j in range(matrix.n)
    )
    budget = comb(matrix.t, 2)
    return PairBudget(total=total, budget=budget, ok=total <= budget)
