"""Bit-parallel scans over the full tournament space at tiny orders.

A tournament on ``order`` vertices is encoded as a C(order, 2)-bit code:
bit :func:`~biramsey.model.pair_index`(u, v) is 1 when the arc runs
u -> v (ascending) and 0 when it runs v -> u.  Scanning all codes visits
every labeled tournament exactly once.

The scans rest on one fact: a vertex subset spans a transitive tournament
iff none of its triangles is a directed 3-cycle.  Per triangle (i, j, k)
with bits x = i<j, y = j<k, z = i<k, the triangle is cyclic iff x == y and
x != z, which vectorizes over every code at once with numpy.

These scans are an independent route to the same quantities as the
branch-and-bound solvers; the test suite cross-checks the two on samples.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .model import ArcState, SemicompleteDigraph, pair_count, pair_index
from .solvers import BudgetExceeded

__all__ = [
    "tournament_from_code",
    "tournament_to_code",
    "transitive_subset_census",
    "min_max_transitive_over_tournaments",
    "tt_free_tournament_codes",
    "every_tournament_contains_tt",
    "SCAN_ORDER_CAP",
]

SCAN_ORDER_CAP = 7  # 2^21 codes; order 8 would be 2^28


def tournament_from_code(code: int, order: int) -> SemicompleteDigraph:
    states = []
    for bit in range(pair_count(order)):
        states.append(ArcState.FORWARD if code >> bit & 1 else ArcState.BACKWARD)
    return SemicompleteDigraph(order, tuple(states))


def tournament_to_code(digraph: SemicompleteDigraph) -> int:
    if not digraph.is_tournament():
        raise ValueError("only tournaments have a scan code")
    code = 0
    for bit, s in enumerate(digraph.states):
        if s is ArcState.FORWARD:
            code |= 1 << bit
    return code


def _transitive_triangle_masks(order: int) -> list[np.ndarray]:
    """Per triangle, a bool vector over all codes: triangle is transitive."""
    codes = np.arange(1 << pair_count(order), dtype=np.uint32)
    bits = [((codes >> e) & 1).astype(np.bool_) for e in range(pair_count(order))]
    masks = []
    for i, j, k in combinations(range(order), 3):
        x = bits[pair_index(i, j, order)]
        y = bits[pair_index(j, k, order)]
        z = bits[pair_index(i, k, order)]
        cyclic = (x == y) & (x ^ z)
        masks.append(~cyclic)
    return masks


def transitive_subset_census(order: int) -> dict[int, np.ndarray]:
    """For each k >= 3, a bool vector over all codes: some k-subset is
    transitive.  Order capped at :data:`SCAN_ORDER_CAP`."""
    if order > SCAN_ORDER_CAP:
        raise BudgetExceeded(
            f"full scan at order {order} needs 2^{pair_count(order)} codes",
            estimate=1 << pair_count(order),
        )
    if order < 3:
        return {}
    triangle_ok = _transitive_triangle_masks(order)
    triangle_pos = {t: i for i, t in enumerate(combinations(range(order), 3))}
    census: dict[int, np.ndarray] = {}
    for k in range(3, order + 1):
        acc = np.zeros(1 << pair_count(order), dtype=np.bool_)
        for subset in combinations(range(order), k):
            ok = triangle_ok[triangle_pos[subset[:3]]].copy()
            for tri in combinations(subset, 3):
                if tri == subset[:3]:
                    continue
                ok &= triangle_ok[triangle_pos[tri]]
            acc |= ok
        census[k] = acc
    return census


def min_max_transitive_over_tournaments(order: int) -> tuple[int, SemicompleteDigraph]:
    """Worst-case transitive value over every tournament of the given order,
    plus the smallest-code tournament attaining it.

    This is the m = C(n, 2) cell of the worst-case table, computed by the
    bit-parallel route rather than per-instance solver calls.
    """
    if order < 3:
        inst = tournament_from_code(0, max(order, 1))
        return order, inst
    census = transitive_subset_census(order)
    max_tt = np.full(1 << pair_count(order), 2, dtype=np.uint8)
    for k in range(3, order + 1):
        max_tt[census[k]] = k
    value = int(max_tt.min())
    code = int(np.flatnonzero(max_tt == value)[0])
    return value, tournament_from_code(code, order)


def tt_free_tournament_codes(order: int, k: int) -> np.ndarray:
    """Codes of every tournament of the given order with no transitive
    k-subset (labeled, no isomorphism reduction)."""
    if k > order:
        return np.arange(1 << pair_count(order), dtype=np.int64)
    if k <= 2:
        return np.empty(0, dtype=np.int64)
    census = transitive_subset_census(order)
    return np.flatnonzero(~census[k])


def _subset_is_transitive(code: int, subset: tuple[int, ...], order: int) -> bool:
    for i, j, k in combinations(subset, 3):
        x = code >> pair_index(i, j, order) & 1
        y = code >> pair_index(j, k, order) & 1
        z = code >> pair_index(i, k, order) & 1
        if x == y and x != z:
            return False
    return True


def every_tournament_contains_tt(order: int, k: int) -> bool:
    """Exhaustively decide whether every tournament of the given order has a
    transitive k-subset.

    Orders up to :data:`SCAN_ORDER_CAP` are scanned directly.  Order
    SCAN_ORDER_CAP + 1 uses a one-vertex extension argument: any such
    tournament restricted to its first ``order - 1`` vertices is either
    already covered or one of the (few) TT_k-free smaller tournaments, and
    every arc pattern from a new vertex into each of those is checked.
    This covers all 2^C(order, 2) tournaments without enumerating them.
    """
    if k <= 2:
        return order >= k
    if order < k:
        return False
    if order <= SCAN_ORDER_CAP:
        return tt_free_tournament_codes(order, k).size == 0
    if order != SCAN_ORDER_CAP + 1:
        raise BudgetExceeded(
            f"order {order} is beyond the scan plus one-vertex-extension range",
            estimate=1 << pair_count(order),
        )
    base = order - 1
    free_codes = tt_free_tournament_codes(base, k)
    subsets = list(combinations(range(base), k - 1))
    for code in free_codes.tolist():
        transitive_rests = [
            rest for rest in subsets if _subset_is_transitive(code, rest, base)
        ]
        for pattern in range(1 << base):
            # pattern bit v set means arc v -> new vertex, else the reverse
            if not any(
                _extension_is_transitive(code, rest, pattern, base)
                for rest in transitive_rests
            ):
                return False
    return True


def _extension_is_transitive(
    code: int, rest: tuple[int, ...], pattern: int, base: int
) -> bool:
    """Transitivity of rest + {new vertex} given arcs pattern; the rest is
    already transitive, so only triangles through the new vertex matter."""
    # triangle (i, j, new): cyclic iff arc directions chain around
    for a, b in combinations(rest, 2):
        ab = code >> pair_index(a, b, base) & 1  # 1: a -> b
        a_new = pattern >> a & 1  # 1: a -> new
        b_new = pattern >> b & 1
        # cyclic iff a->b, b->new, new->a  or  b->a, a->new, new->b
        if ab and b_new and not a_new:
            return False
        if not ab and a_new and not b_new:
            return False
    return True
