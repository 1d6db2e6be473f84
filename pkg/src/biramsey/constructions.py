"""Extremal instance builders, each emitting a re-checkable certificate.

Every builder returns a :class:`ConstructionCert`: the instance, its exact
unicolored / one-way pair count, and a claimed ceiling on the maximum
monochromatic clique resp. transitive set.  The exact solver can re-verify
every certificate; ``equality=True`` marks the constructions whose ceiling
is known to be attained exactly.

Constructions:

* :func:`matching_coloring` - alternating red/blue near-matchings; ceiling
  n - floor(m/2), attained.
* :func:`triangle_digraph` - disjoint directed triangles; ceiling
  n - floor(m/3), attained.
* :func:`blowup` - partition into classes spanning tournaments, all cross
  pairs bioriented; ceiling is the sum of per-class optima.
* :func:`tournament_packing` - disjoint copies of a largest tournament with
  no transitive (k+1)-subset; ceiling k * n / order.
* :func:`lex_clique_packing` - two edge-disjoint clique unions (blue on
  consecutive blocks, red on blocks of the transposed order); ceiling
  n / (c+1), attained.
* :func:`mixed_coloring` / :func:`mixed_digraph` - two consecutive block
  sizes mixed by a weight, interpolating between pure packings; the floor
  losses are recorded explicitly as slack.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Mapping

import numpy as np

from .model import (
    ArcState,
    BicoloredGraph,
    EdgeColor,
    Instance,
    SemicompleteDigraph,
    pair_count,
    pair_index,
    random_tournament,
)
from .solvers import max_mono_clique, max_transitive_set

__all__ = [
    "ConstructionCert",
    "ExtremalTournament",
    "InfeasibleParams",
    "ClassSizeMismatch",
    "UnsupportedK",
    "DivisibilityViolation",
    "PackingCollision",
    "EXTREMAL_ORDER",
    "matching_coloring",
    "triangle_digraph",
    "blowup",
    "extremal_tournament",
    "tournament_packing",
    "lex_clique_packing",
    "mixed_coloring",
    "mixed_digraph",
    "verify_claims",
    "BUILDERS",
]


class InfeasibleParams(ValueError):
    pass


class ClassSizeMismatch(ValueError):
    pass


class UnsupportedK(ValueError):
    pass


class DivisibilityViolation(ValueError):
    pass


class PackingCollision(RuntimeError):
    """The red and blue packings touched the same pair; an internal bug."""


# order of the largest tournament with no transitive (k+1)-subset,
# i.e. one less than the smallest order forcing a transitive (k+1)-set
EXTREMAL_ORDER = {1: 1, 2: 3, 3: 7, 4: 13}


@dataclass(frozen=True)
class ConstructionCert:
    """A built instance plus its claimed (m, ceiling) pair.

    ``claimed_bound`` upper-bounds the instance's maximum monochromatic
    clique / transitive set; with ``equality`` the optimum attains it.
    """

    instance: Instance
    claimed_m: int
    claimed_bound: int
    provenance: str
    equality: bool = False
    direction: str = "upper-bound-on-guarantee"
    extras: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        actual = (
            self.instance.unicolored_count
            if isinstance(self.instance, BicoloredGraph)
            else self.instance.oneway_count
        )
        if actual != self.claimed_m:
            raise ValueError(
                f"{self.provenance}: built {actual} unicolored/one-way pairs, "
                f"claimed {self.claimed_m}"
            )


@dataclass(frozen=True)
class ExtremalTournament:
    """A tournament whose largest transitive subtournament has size k."""

    k: int
    order: int
    digraph: SemicompleteDigraph


def verify_claims(
    instance: Instance, claimed_m: int, claimed_bound: int, equality: bool
) -> list[str]:
    """Re-check a certificate's claims with the exact solver.

    Returns a list of violated invariants (empty when everything checks).
    """
    failures: list[str] = []
    if isinstance(instance, BicoloredGraph):
        actual_m = instance.unicolored_count
        optimum = max_mono_clique(instance).size
    else:
        actual_m = instance.oneway_count
        optimum = max_transitive_set(instance).size
    if actual_m != claimed_m:
        failures.append(f"m-accounting: instance has m={actual_m}, claimed {claimed_m}")
    if optimum > claimed_bound:
        failures.append(f"ceiling: solver optimum {optimum} exceeds claimed {claimed_bound}")
    if equality and optimum != claimed_bound:
        failures.append(f"equality: solver optimum {optimum} != claimed {claimed_bound}")
    return failures


# ---------------------------------------------------------------------------
# Small-m exact constructions


def matching_coloring(n: int, m: int) -> ConstructionCert:
    """Unicolored edges laid along a path (or, at m = n, a cycle) with
    alternating colors, so each color class is a matching; at m = n with n
    odd the red class has one shared endpoint, which does not move the
    ceiling.  No monochromatic clique exceeds n - floor(m/2), and one
    attains it.
    """
    if not 0 <= m <= n:
        raise InfeasibleParams(f"need 0 <= m <= n, got n={n}, m={m}")
    states = [EdgeColor.RED_BLUE] * pair_count(n)
    for i in range(m):
        u, v = i, i + 1
        if v == n:  # m == n closes the cycle
            u, v = 0, n - 1
        states[pair_index(u, v, n)] = EdgeColor.RED if i % 2 == 0 else EdgeColor.BLUE
    return ConstructionCert(
        instance=BicoloredGraph(n, tuple(states)),
        claimed_m=m,
        claimed_bound=n - m // 2,
        provenance="independent-color-classes",
        equality=True,
        extras={"n": n, "m": m},
    )


def triangle_digraph(n: int, m: int) -> ConstructionCert:
    """floor(m/3) disjoint directed triangles, the rest bioriented; a
    transitive set must drop a vertex per triangle, so the ceiling is
    n - floor(m/3), attained.

    When m is not divisible by 3 the 1-2 leftover arcs are emitted as an
    ascending path over otherwise-bioriented vertex choices, which creates
    no new cycles and keeps the pair count at exactly m.
    """
    if m < 0 or m > pair_count(n):
        raise InfeasibleParams(f"m={m} outside 0..C({n},2)")
    triangles, rest = divmod(m, 3)
    if 3 * triangles > n:
        raise InfeasibleParams(
            f"{triangles} disjoint triangles do not fit on {n} vertices"
        )
    arcs: set[tuple[int, int]] = set()
    for j in range(triangles):
        a = 3 * j
        arcs.update({(a, a + 1), (a + 1, a + 2), (a + 2, a)})
    if rest:
        leftovers = list(range(3 * triangles, n))
        if len(leftovers) < rest + 1:
            # borrow base vertices of distinct triangles; those pairs are
            # still bioriented and an ascending path cannot close a cycle
            borrow = (rest + 1) - len(leftovers)
            if borrow > triangles:
                raise InfeasibleParams(
                    f"no room for {rest} leftover one-way arcs on {n} vertices"
                )
            path = sorted(3 * j for j in range(borrow)) + leftovers
        else:
            path = leftovers[: rest + 1]
        for x, y in zip(path, path[1:]):
            arcs.add((x, y))
    return ConstructionCert(
        instance=SemicompleteDigraph.from_arcs(n, arcs),
        claimed_m=m,
        claimed_bound=n - triangles,
        provenance="disjoint-directed-triangles",
        equality=True,
        extras={"n": n, "m": m, "triangles": triangles},
    )


# ---------------------------------------------------------------------------
# Blow-up


def blowup(
    n: int,
    t: int,
    inner: "list[SemicompleteDigraph] | None" = None,
    seed: int = 0xB1C0,
) -> ConstructionCert:
    """Partition the vertices into t near-equal classes, each spanning a
    tournament, with every cross pair bioriented.

    Any transitive set meets each class in a transitive subset of its
    tournament, so the ceiling is the sum of per-class optima (computed
    here with the exact solver).  The bioriented fraction is at least
    1 - 1/t exactly.
    """
    if not 1 <= t <= n:
        raise InfeasibleParams(f"need 1 <= t <= n, got t={t}, n={n}")
    big = n % t
    sizes = [n // t + 1] * big + [n // t] * (t - big)
    if inner is None:
        inner = [random_tournament(s, np.random.default_rng([seed, i])) for i, s in enumerate(sizes)]
    if [d.n for d in inner] != sizes:
        raise ClassSizeMismatch(
            f"inner sizes {[d.n for d in inner]} do not match classes {sizes}"
        )
    for d in inner:
        if not d.is_tournament():
            raise ClassSizeMismatch("inner digraphs must be tournaments")
    arcs: set[tuple[int, int]] = set()
    offset = 0
    bound = 0
    for d in inner:
        for tail, head in d.one_way_arcs():
            arcs.add((tail + offset, head + offset))
        bound += max_transitive_set(d).size
        offset += d.n
    instance = SemicompleteDigraph.from_arcs(n, arcs)
    return ConstructionCert(
        instance=instance,
        claimed_m=sum(pair_count(s) for s in sizes),
        claimed_bound=bound,
        provenance="blow-up-partition",
        equality=False,
        extras={"n": n, "t": t, "class_sizes": sizes},
    )


# ---------------------------------------------------------------------------
# Extremal tournaments and their packings


def _subset_has_cyclic_triangle(digraph: SemicompleteDigraph, subset: tuple[int, ...]) -> bool:
    for a, b, c in combinations(subset, 3):
        ab = digraph.has_arc(a, b)
        bc = digraph.has_arc(b, c)
        ca = digraph.has_arc(c, a)
        if ab and bc and ca:
            return True
        if not (ab or bc or ca):
            return True
    return False


def _max_transitive_by_subsets(digraph: SemicompleteDigraph) -> int:
    """For tournaments only: largest k with some k-subset free of cyclic
    triangles.  Independent of the feedback-vertex-set solver."""
    best = min(digraph.n, 2)
    for k in range(3, digraph.n + 1):
        if any(
            not _subset_has_cyclic_triangle(digraph, s)
            for s in combinations(range(digraph.n), k)
        ):
            best = k
        else:
            break
    return best


def _circulant_tournament(order: int, offsets: frozenset[int]) -> SemicompleteDigraph:
    arcs = {
        (u, (u + d) % order)
        for u in range(order)
        for d in offsets
    }
    return SemicompleteDigraph.from_arcs(order, arcs)


def _search_order13() -> SemicompleteDigraph:
    """Find a 13-vertex tournament with no transitive 5-subset.

    Deterministic scan of the 64 circulant candidates (one offset choice
    per difference pair {d, 13-d}), each verified exhaustively over the
    1287 5-subsets; four of them qualify and the scan returns the first.
    """
    order = 13
    for code in range(64):
        offsets = frozenset(
            (d + 1) if code >> d & 1 else order - (d + 1) for d in range(6)
        )
        cand = _circulant_tournament(order, offsets)
        if _max_transitive_by_subsets(cand) == 4:
            return cand
    raise UnsupportedK("no circulant 13-vertex tournament avoids transitive 5-sets")


_CACHE_NAME = "extremal_tournament_k4_order13.json"


def extremal_tournament(
    k: int, search: bool = False, cache_dir: "str | Path | None" = None
) -> ExtremalTournament:
    """Largest tournament with no transitive (k+1)-subset.

    k = 1, 2, 3 are bundled (orders 1, 3, 7); k = 4 (order 13) is found by
    search behind the ``search`` flag and can be cached to ``cache_dir``.
    Every returned tournament is re-verified at load.
    """
    if k == 1:
        d = SemicompleteDigraph.from_arcs(1, set())
    elif k == 2:
        d = SemicompleteDigraph.from_arcs(3, {(0, 1), (1, 2), (2, 0)})
    elif k == 3:
        # quadratic-residue tournament: i -> i + {1, 2, 4} mod 7
        d = _circulant_tournament(7, frozenset({1, 2, 4}))
    elif k == 4:
        if not search:
            raise UnsupportedK("k=4 needs the search flag (order-13 tournament)")
        d = _load_or_search_order13(cache_dir)
    else:
        raise UnsupportedK(f"no extremal tournament bundled or searchable for k={k}")
    order = EXTREMAL_ORDER[k]
    if d.n != order or not d.is_tournament():
        raise UnsupportedK(f"internal: bad extremal tournament for k={k}")
    if k <= 3:
        found = max_transitive_set(d).size
    else:
        found = _max_transitive_by_subsets(d)
    if found != k:
        raise UnsupportedK(
            f"internal: extremal tournament for k={k} verified to {found}"
        )
    return ExtremalTournament(k, order, d)


def _load_or_search_order13(cache_dir: "str | Path | None") -> SemicompleteDigraph:
    from .exhaustive import tournament_from_code, tournament_to_code

    path = Path(cache_dir) / _CACHE_NAME if cache_dir is not None else None
    if path is not None and path.exists():
        code = json.loads(path.read_text())["code"]
        return tournament_from_code(code, 13)
    d = _search_order13()
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"order": 13, "code": tournament_to_code(d)}) + "\n")
    return d


def tournament_packing(n: int, k: int, search: bool = False) -> ConstructionCert:
    """Disjoint copies of the k-extremal tournament, cross pairs bioriented.

    With order q = one less than the forcing order, m = n(q-1)/2 and the
    ceiling is k * n / q, attained (each copy contributes exactly k).
    """
    extremal = extremal_tournament(k, search=search)
    q = extremal.order
    if n % q != 0:
        raise DivisibilityViolation(f"{q} must divide n, got n={n}")
    arcs: set[tuple[int, int]] = set()
    for copy in range(n // q):
        offset = copy * q
        for tail, head in extremal.digraph.one_way_arcs():
            arcs.add((tail + offset, head + offset))
    instance = SemicompleteDigraph.from_arcs(n, arcs)
    return ConstructionCert(
        instance=instance,
        claimed_m=n * (q - 1) // 2,
        claimed_bound=k * n // q,
        provenance="extremal-tournament-packing",
        equality=True,
        extras={"n": n, "k": k, "copy_order": q, "copies": n // q},
    )


# ---------------------------------------------------------------------------
# Clique self-packings


def lex_clique_packing(n: int, c: int) -> ConstructionCert:
    """Blue cliques on consecutive blocks of size c+1; red cliques on the
    blocks of the transposed (lexicographic) order.  Endpoints of a blue
    edge sit at least n/(c+1) >= c+1 apart in the transposed order, so no
    pair receives both colors; m = c*n and the ceiling n/(c+1) is attained
    by any transversal of the blue blocks.
    """
    if c < 0:
        raise InfeasibleParams("c must be nonnegative")
    size = c + 1
    if n % size != 0:
        raise DivisibilityViolation(f"c+1={size} must divide n={n}")
    blocks = n // size
    if size > blocks:
        raise InfeasibleParams(
            f"self-packing needs c+1 <= n/(c+1); got {size} > {blocks}"
        )
    states = [EdgeColor.RED_BLUE] * pair_count(n)

    def paint(members: list[int], color: EdgeColor) -> None:
        for u, v in combinations(sorted(members), 2):
            idx = pair_index(u, v, n)
            if states[idx] is not EdgeColor.RED_BLUE:
                raise PackingCollision(
                    f"pair ({u}, {v}) would receive both unicolors"
                )
            states[idx] = color

    for j in range(blocks):
        paint(list(range(j * size, (j + 1) * size)), EdgeColor.BLUE)
    # vertex j*size + i sits at transposed position i*blocks + j
    by_position = [0] * n
    for j in range(blocks):
        for i in range(size):
            by_position[i * blocks + j] = j * size + i
    for r in range(blocks):
        paint(by_position[r * size : (r + 1) * size], EdgeColor.RED)

    return ConstructionCert(
        instance=BicoloredGraph(n, tuple(states)),
        claimed_m=c * n,
        claimed_bound=blocks,
        provenance="clique-self-packing",
        equality=True,
        extras={"n": n, "c": c, "clique_size": size},
    )


def _mixed_blocks(n: int, k: int, gamma: Fraction) -> tuple[list[int], int]:
    """Block sizes for the mixed constructions: larger blocks first, then
    the isolated-vertex count."""
    if k < 2:
        raise InfeasibleParams("k must be at least 2")
    if not 0 <= gamma <= 1:
        raise InfeasibleParams("gamma must lie in [0, 1]")
    small = int(n * gamma / k)  # floor
    large = int(n * (1 - gamma) / (k + 1))
    sizes = [k + 1] * large + [k] * small
    isolated = n - sum(sizes)
    assert isolated >= 0
    return sizes, isolated


def mixed_coloring(n: int, k: int, gamma: "Fraction | int | float") -> ConstructionCert:
    """Self-packing of a union of k-cliques and (k+1)-cliques, mixed by the
    weight gamma (gamma = 1 degenerates to pure k-cliques).

    Blue cliques occupy consecutive blocks, larger blocks first; red
    cliques occupy blocks of the transposed order, which stays edge-disjoint
    whenever there are at least k+1 blocks.  The certificate records the
    clean weighted formula value next to the integer ceiling; their gap is
    the floor-loss slack.
    """
    gamma = Fraction(gamma)
    if (k + 1) ** 2 > n:
        raise InfeasibleParams(f"self-packing needs (k+1)^2 <= n, got k={k}, n={n}")
    sizes, isolated = _mixed_blocks(n, k, gamma)
    blocks = len(sizes)
    if blocks < k + 1:
        raise InfeasibleParams(
            f"need at least k+1={k + 1} blocks for the transposed packing, got {blocks}"
        )
    states = [EdgeColor.RED_BLUE] * pair_count(n)

    def paint(members: list[int], color: EdgeColor) -> None:
        for u, v in combinations(sorted(members), 2):
            idx = pair_index(u, v, n)
            if states[idx] is not EdgeColor.RED_BLUE:
                raise PackingCollision(f"pair ({u}, {v}) would receive both unicolors")
            states[idx] = color

    # blue: blocks of consecutive vertices, sizes descending
    starts = []
    offset = 0
    for s in sizes:
        starts.append(offset)
        offset += s
    covered = offset
    members_of = [list(range(st, st + s)) for st, s in zip(starts, sizes)]
    for members in members_of:
        paint(members, EdgeColor.BLUE)

    # transposed order: row i lists the i-th member of every block having one
    sequence: list[int] = []
    for row in range(k + 1):
        for j in range(blocks):
            if sizes[j] > row:
                sequence.append(members_of[j][row])
    assert len(sequence) == covered
    pos = 0
    for s in sizes:
        paint(sequence[pos : pos + s], EdgeColor.RED)
        pos += s

    formula = n * (gamma / k + (1 - gamma) / (k + 1))
    bound = blocks + isolated
    cert_m = 2 * sum(comb(s, 2) for s in sizes)
    return ConstructionCert(
        instance=BicoloredGraph(n, tuple(states)),
        claimed_m=cert_m,
        claimed_bound=bound,
        provenance="mixed-clique-self-packing",
        equality=False,
        extras={
            "n": n,
            "k": k,
            "gamma": str(gamma),
            "formula_value": str(formula),
            "slack": str(bound - formula),
            "block_sizes": sizes,
            "isolated": isolated,
        },
    )


def mixed_digraph(
    n: int, k: int, gamma: "Fraction | int | float", search: bool = False
) -> ConstructionCert:
    """Disjoint extremal tournaments of two consecutive orders plus isolated
    vertices, cross pairs bioriented; the per-copy optima sum to the integer
    ceiling, recorded next to the clean weighted formula value.
    """
    gamma = Fraction(gamma)
    if k < 2:
        raise InfeasibleParams("k must be at least 2")
    if not 0 <= gamma <= 1:
        raise InfeasibleParams("gamma must lie in [0, 1]")
    if k not in EXTREMAL_ORDER or (k + 1) not in EXTREMAL_ORDER:
        raise UnsupportedK(f"k={k} needs extremal tournaments for k and k+1")
    small = extremal_tournament(k, search=search)
    large = extremal_tournament(k + 1, search=search)
    copies_small = int(n * gamma / small.order)
    copies_large = int(n * (1 - gamma) / large.order)
    covered = copies_small * small.order + copies_large * large.order
    if covered > n:
        raise InfeasibleParams("copies do not fit")
    isolated = n - covered
    arcs: set[tuple[int, int]] = set()
    offset = 0
    for _ in range(copies_small):
        for tail, head in small.digraph.one_way_arcs():
            arcs.add((tail + offset, head + offset))
        offset += small.order
    for _ in range(copies_large):
        for tail, head in large.digraph.one_way_arcs():
            arcs.add((tail + offset, head + offset))
        offset += large.order
    instance = SemicompleteDigraph.from_arcs(n, arcs)
    bound = copies_small * k + copies_large * (k + 1) + isolated
    formula = n * (
        gamma * k / small.order + (1 - gamma) * (k + 1) / large.order
    )
    return ConstructionCert(
        instance=instance,
        claimed_m=copies_small * pair_count(small.order)
        + copies_large * pair_count(large.order),
        claimed_bound=bound,
        provenance="mixed-tournament-packing",
        equality=False,
        extras={
            "n": n,
            "k": k,
            "gamma": str(gamma),
            "formula_value": str(formula),
            "slack": str(bound - formula),
            "copies": [copies_small, copies_large],
            "isolated": isolated,
        },
    )


# name -> builder, for the command-line `construct` dispatch
BUILDERS = {
    "matching": matching_coloring,
    "triangles": triangle_digraph,
    "blowup": blowup,
    "packing": tournament_packing,
    "lex-cliques": lex_clique_packing,
    "mixed-coloring": mixed_coloring,
    "mixed-digraph": mixed_digraph,
}
