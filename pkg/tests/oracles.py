"""Independent brute-force oracles the library implementations are checked against.

Everything here is deliberately naive: plain enumeration over subsets,
no bit-packing tricks shared with the library, so a bug in the fast path
cannot hide in the oracle.
"""

from itertools import combinations


def brute_is_d_disjunct(masks, d):
    """Enumerate all (column, <=d other columns) cover candidates."""
    n = len(masks)
    for j in range(n):
        others = [k for k in range(n) if k != j]
        for size in range(0, d + 1):
            for group in combinations(others, size):
                union = 0
                for k in group:
                    union |= masks[k]
                if masks[j] & ~union == 0:
                    return False
    return True


def brute_matching_number(edges):
    """Max number of pairwise disjoint edges, by exhaustive extension."""
    edges = sorted(edges)

    def extend(start, used, size):
        best = size
        for e in range(start, len(edges)):
            a, b = edges[e]
            if a in used or b in used:
                continue
            best = max(best, extend(e + 1, used | {a, b}, size + 1))
        return best

    return extend(0, frozenset(), 0)


def antichain_exists(t, n):
    """Is there an antichain of n distinct nonempty subsets of {0..t-1}?

    Equivalent to the existence of a t x n 1-disjunct matrix; feasible
    for small t only.
    """
    subsets = list(range(1, 1 << t))
    for family in combinations(subsets, n):
        if all(
            a & ~b and b & ~a
            for a, b in combinations(family, 2)
        ):
            return True
    return False


def brute_private_pairs(dense, j):
    """Classify 2-subsets of column j by scanning every other column."""
    t, n = dense.shape
    rows = [i for i in range(t) if dense[i, j]]
    private, nonprivate = set(), set()
    for a, b in combinations(rows, 2):
        if any(dense[a, k] and dense[b, k] for k in range(n) if k != j):
            nonprivate.add((a, b))
        else:
            private.add((a, b))
    return private, nonprivate


def brute_decode(dense, outcome_rows):
    """Items absent from every negative test, straight off the dense matrix."""
    t, n = dense.shape
    return frozenset(
        j
        for j in range(n)
        if all(i in outcome_rows for i in range(t) if dense[i, j])
    )


def brute_max_edges_nu_at_most(k, mu):
    """max edges over all graphs on k labeled vertices with nu <= mu.

    Exhaustive over all 2^C(k,2) graphs with the naive matching oracle;
    only feasible for small k.
    """
    pairs = list(combinations(range(k), 2))
    best = 0
    for g in range(1 << len(pairs)):
        edges = [pairs[e] for e in range(len(pairs)) if g >> e & 1]
        if len(edges) <= best:
            continue
        if brute_matching_number(edges) <= mu:
            best = len(edges)
    return best
