"""Exact solvers and desk-scale exhaustive oracles.

* :func:`max_mono_clique` - largest clique that is monochromatic in one
  color, over both colors (bicolored pairs belong to both).
* :func:`max_transitive_set` - largest vertex set whose induced one-way
  arcs are acyclic; equivalently n minus a minimum directed feedback
  vertex set of the one-way digraph.
* :func:`brute_force_f` / :func:`brute_force_F` - the worst-case values
  f(n, m) and F(n, m): minimum over every placement of m unicolored /
  one-way pairs and every color / orientation assignment of the maximum
  substructure, at tiny n.

All searches are deterministic; ties between optimal witnesses break to
the lexicographically smallest vertex set (and red before blue), so
outputs are reproducible across runs, platforms, and thread counts.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable

from .model import (
    ArcState,
    BicoloredGraph,
    EdgeColor,
    Instance,
    MonoCliqueWitness,
    SemicompleteDigraph,
    TransitiveWitness,
    Witness,
    iter_pairs,
    pair_count,
    serialize_instance,
)

__all__ = [
    "SolveResult",
    "OracleTable",
    "SizeLimitExceeded",
    "BudgetExceeded",
    "KindMismatch",
    "max_mono_clique",
    "max_transitive_set",
    "verify_witness",
    "brute_force_f",
    "brute_force_F",
    "max_mono_clique_by_enumeration",
    "max_transitive_set_by_enumeration",
    "CLIQUE_SIZE_CAP",
    "TRANSITIVE_SIZE_CAP",
    "DEFAULT_ORACLE_BUDGET",
]

CLIQUE_SIZE_CAP = 64
TRANSITIVE_SIZE_CAP = 40
DEFAULT_ORACLE_BUDGET = 10**8
_ORACLE_PAIR_CAP = 15  # C(n,2) cap for exhaustive enumeration


class SizeLimitExceeded(ValueError):
    """Instance larger than the solver's configured cap."""


class BudgetExceeded(ValueError):
    """Enumeration would exceed the configured budget; carries the estimate."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


class KindMismatch(TypeError):
    """Witness kind does not match the instance family."""


@dataclass(frozen=True)
class SolveResult:
    size: int
    witness: Witness
    nodes_explored: int


@dataclass(frozen=True)
class OracleTable:
    """One worst-case cell: the value and a serialized extremal instance."""

    n: int
    m: int
    value: int
    extremal_instance: str


# ---------------------------------------------------------------------------
# Maximum clique core (bitset branch and bound, greedy-coloring bound)


def _degeneracy_order(n: int, adj: list[int]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex, smallest id first."""
    remaining = (1 << n) - 1
    degs = [bin(adj[v] & remaining).count("1") for v in range(n)]
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if remaining >> v & 1 and (best < 0 or degs[v] < degs[best]):
                best = v
        order.append(best)
        remaining &= ~(1 << best)
        for u in range(n):
            if remaining >> u & 1 and adj[best] >> u & 1:
                degs[u] -= 1
    return order


class _CliqueSolver:
    """Max-clique searches over one adjacency relation, with a node counter.

    Vertices are relabeled internally by degeneracy order; all public masks
    and results use the original labels.
    """

    def __init__(self, n: int, adj: list[int]):
        self.n = n
        self.adj = adj
        order = _degeneracy_order(n, adj)
        self._to_int = [0] * n  # original -> internal
        for internal, original in enumerate(order):
            self._to_int[original] = internal
        self._adj_int = [0] * n
        for u in range(n):
            mask = 0
            a = adj[u]
            while a:
                v = (a & -a).bit_length() - 1
                a &= a - 1
                mask |= 1 << self._to_int[v]
            self._adj_int[self._to_int[u]] = mask
        self.nodes = 0

    def _translate(self, mask: int) -> int:
        out = 0
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out |= 1 << self._to_int[v]
        return out

    def max_size(self, candidates: int | None = None, at_least: int = 0) -> int:
        """Size of a maximum clique inside ``candidates`` (original labels)."""
        cand = self._translate(candidates) if candidates is not None else (1 << self.n) - 1
        self._best = at_least
        if cand:
            self._expand(cand, 0)
        return self._best

    def _expand(self, cand: int, size: int) -> None:
        self.nodes += 1
        adj = self._adj_int
        # greedy coloring: vertices listed with nondecreasing class number
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                bit = avail & -avail
                v = bit.bit_length() - 1
                avail &= ~adj[v]
                avail ^= bit
                rest ^= bit
                order.append(v)
                bounds.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= self._best:
                return
            v = order[i]
            nxt = cand & adj[v]
            if size + 1 > self._best:
                self._best = size + 1
            if nxt:
                self._expand(nxt, size + 1)
            cand ^= 1 << v

    def lex_min_maximum_clique(self) -> tuple[int, ...]:
        """Lexicographically smallest vertex set among maximum cliques."""
        target = self.max_size()
        chosen: list[int] = []
        common = (1 << self.n) - 1  # common neighborhood of chosen, original labels
        for v in range(self.n):
            if len(chosen) == target:
                break
            if not common >> v & 1:
                continue
            higher = ((1 << self.n) - 1) & ~((1 << (v + 1)) - 1)
            cand = common & self.adj[v] & higher
            if 1 + len(chosen) + self.max_size(cand) >= target:
                chosen.append(v)
                common &= self.adj[v]
        return tuple(chosen)


def _color_adjacency(graph: BicoloredGraph, color: EdgeColor) -> list[int]:
    """Bitmask adjacency of the simple graph whose edges include ``color``."""
    adj = [0] * graph.n
    for (u, v), s in zip(iter_pairs(graph.n), graph.states):
        if s is color or s is EdgeColor.RED_BLUE:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def max_mono_clique(graph: BicoloredGraph, size_cap: int = CLIQUE_SIZE_CAP) -> SolveResult:
    """Largest monochromatic clique over both colors.

    Ties break to larger size, then red over blue, then the
    lexicographically smallest vertex set.
    """
    if graph.n > size_cap:
        raise SizeLimitExceeded(f"n={graph.n} exceeds clique solver cap {size_cap}")
    red = _CliqueSolver(graph.n, _color_adjacency(graph, EdgeColor.RED))
    blue = _CliqueSolver(graph.n, _color_adjacency(graph, EdgeColor.BLUE))
    red_size = red.max_size()
    blue_size = blue.max_size()
    if red_size >= blue_size:
        vertices = red.lex_min_maximum_clique()
        witness = MonoCliqueWitness(vertices, EdgeColor.RED)
        size = red_size
    else:
        vertices = blue.lex_min_maximum_clique()
        witness = MonoCliqueWitness(vertices, EdgeColor.BLUE)
        size = blue_size
    return SolveResult(size, witness, red.nodes + blue.nodes)


def _max_mono_clique_size(graph: BicoloredGraph) -> tuple[int, int]:
    """(size, nodes) without witness extraction; oracle inner loop."""
    red = _CliqueSolver(graph.n, _color_adjacency(graph, EdgeColor.RED))
    blue = _CliqueSolver(graph.n, _color_adjacency(graph, EdgeColor.BLUE))
    r = red.max_size()
    b = blue.max_size(at_least=r)
    return max(r, b), red.nodes + blue.nodes


# ---------------------------------------------------------------------------
# Maximum transitive set (minimum directed feedback vertex set on the
# one-way digraph; bioriented pairs are simply absent arcs)


class _AcyclicSolver:
    """Maximum induced acyclic subset of a digraph given as out-masks.

    Branch and bound: find a shortest directed cycle of the current vertex
    set and branch on deleting each of its vertices.  ``forced`` vertices
    may not be deleted (used for lexicographic witness extraction).
    Pruning uses a greedy incumbent plus a vertex-disjoint cycle packing
    (each packed cycle forces one deletion).
    """

    def __init__(self, n: int, out: list[int]):
        self.n = n
        self.out = out
        self.nodes = 0
        self._memo: dict[tuple[int, int], int] = {}

    def _shortest_cycle(self, mask: int) -> tuple[int, ...] | None:
        """Shortest directed cycle within ``mask``; deterministic choice.

        One-way digraphs carry at most one arc per pair, so the shortest
        possible cycle has length 3; BFS depth is capped by the best cycle
        found so far.
        """
        best: tuple[int, ...] | None = None
        m = mask
        while m:
            s = (m & -m).bit_length() - 1
            m &= m - 1
            # BFS from s over arcs within mask, looking for a path back to s
            parent = {s: -1}
            frontier = [s]
            found = None
            depth = 0
            while frontier and found is None:
                depth += 1
                if best is not None and depth >= len(best):
                    break  # cannot improve on the incumbent from here
                nxt: list[int] = []
                for x in frontier:
                    targets = self.out[x] & mask
                    while targets:
                        y = (targets & -targets).bit_length() - 1
                        targets &= targets - 1
                        if y == s:
                            found = x
                            break
                        if y not in parent:
                            parent[y] = x
                            nxt.append(y)
                    if found is not None:
                        break
                frontier = nxt
            if found is not None:
                cycle = [found]
                while cycle[-1] != s:
                    cycle.append(parent[cycle[-1]])
                cycle.reverse()  # starts at s, follows arcs
                if best is None or len(cycle) < len(best):
                    best = tuple(cycle)
                    if len(best) == 3:
                        return best
        return best

    def _is_acyclic(self, mask: int) -> bool:
        # repeatedly peel vertices with no in-arcs inside the set
        remaining = mask
        while remaining:
            peel = 0
            m = remaining
            while m:
                bit = m & -m
                m ^= bit
                v = bit.bit_length() - 1
                has_in = False
                others = remaining & ~bit
                o = others
                while o:
                    b2 = o & -o
                    o ^= b2
                    if self.out[b2.bit_length() - 1] >> v & 1:
                        has_in = True
                        break
                if not has_in:
                    peel |= bit
            if not peel:
                return False
            remaining &= ~peel
        return True

    def _greedy_incumbent(self, allowed: int, forced: int) -> int:
        """A feasible acyclic superset of ``forced`` built greedily, or -1."""
        if not self._is_acyclic(forced):
            return -1
        chosen = forced
        rest = allowed & ~forced
        while rest:
            bit = rest & -rest
            rest ^= bit
            if self._is_acyclic(chosen | bit):
                chosen |= bit
        return chosen

    def max_acyclic(self, allowed: int, forced: int = 0) -> int:
        """Max size of an acyclic S with forced <= S <= allowed; -1 if none."""
        incumbent = self._greedy_incumbent(allowed, forced)
        if incumbent < 0:
            return -1  # the forced set itself contains a cycle
        if self._shortest_cycle(incumbent) is not None:
            raise AssertionError("acyclicity check disagrees with cycle search")
        self._best = bin(incumbent).count("1")
        self._search(allowed, forced)
        return self._best

    def _cycle_packing(self, allowed: int) -> list[tuple[int, ...]]:
        """Vertex-disjoint directed cycles, greedily shortest-first."""
        packing = []
        mask = allowed
        while True:
            cycle = self._shortest_cycle(mask)
            if cycle is None:
                return packing
            packing.append(cycle)
            for v in cycle:
                mask &= ~(1 << v)

    def _search(self, allowed: int, forced: int) -> None:
        self.nodes += 1
        size = bin(allowed).count("1")
        if size <= self._best:
            return
        key = (allowed, forced)
        cached = self._memo.get(key)
        if cached is not None and cached <= self._best:
            return
        packing = self._cycle_packing(allowed)
        if not packing:
            self._best = size
            self._memo[key] = size
            return
        if size - len(packing) <= self._best:
            # every packed cycle costs at least one deletion
            self._memo[key] = max(self._memo.get(key, -1), size - len(packing))
            return
        branchable = [v for v in packing[0] if not forced >> v & 1]
        if not branchable:
            return  # a cycle lies entirely inside the forced set
        for v in sorted(branchable):
            self._search(allowed & ~(1 << v), forced)
        self._memo[key] = self._best


def _one_way_out_masks(digraph: SemicompleteDigraph) -> list[int]:
    out = [0] * digraph.n
    for tail, head in digraph.one_way_arcs():
        out[tail] |= 1 << head
    return out


def _strongly_connected_components(n: int, out: list[int], mask: int) -> list[int]:
    """Tarjan SCCs of the sub-digraph on ``mask``; returns component masks."""
    index = {}
    low = {}
    on_stack = set()
    stack: list[int] = []
    components: list[int] = []
    counter = 0

    for root in range(n):
        if not mask >> root & 1 or root in index:
            continue
        work = [(root, iter(_bits(out[root] & mask)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(_bits(out[w] & mask))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp |= 1 << w
                    if w == v:
                        break
                components.append(comp)
    return components


def _bits(mask: int) -> Iterable[int]:
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


def _topological_order(vertices: tuple[int, ...], out: list[int]) -> tuple[int, ...]:
    """Deterministic topological order of the one-way arcs on ``vertices``
    (smallest vertex id first among available)."""
    vset = 0
    for v in vertices:
        vset |= 1 << v
    indeg = {v: 0 for v in vertices}
    for v in vertices:
        for w in _bits(out[v] & vset):
            indeg[w] += 1
    heap = [v for v in vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in _bits(out[v] & vset):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != len(vertices):
        raise ValueError("selected vertex set is not acyclic")
    return tuple(order)


def max_transitive_set(
    digraph: SemicompleteDigraph, size_cap: int = TRANSITIVE_SIZE_CAP
) -> SolveResult:
    """Largest vertex set whose induced one-way arcs form a DAG.

    The witness carries a topological order of the chosen set (bioriented
    pairs are unconstrained and ordered by vertex id).  Ties break to the
    lexicographically smallest vertex set.

    The size cap guards memory-style blowup, not runtime: the search is
    exact on an NP-hard problem and dense instances past roughly 30
    vertices can take minutes.
    """
    if digraph.n > size_cap:
        raise SizeLimitExceeded(f"n={digraph.n} exceeds transitive solver cap {size_cap}")
    out = _one_way_out_masks(digraph)
    solver = _AcyclicSolver(digraph.n, out)
    full = (1 << digraph.n) - 1
    chosen = 0
    # cycles never cross strongly connected components, so solve per SCC
    for comp in sorted(_strongly_connected_components(digraph.n, out, full)):
        if bin(comp).count("1") == 1:
            chosen |= comp
            continue
        target = solver.max_acyclic(comp)
        picked = 0
        picked_count = 0
        for v in _bits(comp):
            if picked_count == target:
                break
            higher = comp & ~((1 << (v + 1)) - 1)
            if solver.max_acyclic(picked | (1 << v) | higher, picked | (1 << v)) >= target:
                picked |= 1 << v
                picked_count += 1
        chosen |= picked
    vertices = tuple(_bits(chosen))
    order = _topological_order(vertices, out)
    witness = TransitiveWitness(vertices, order)
    return SolveResult(len(vertices), witness, solver.nodes)


def _max_transitive_size(digraph: SemicompleteDigraph) -> tuple[int, int]:
    """(size, nodes) without witness extraction; oracle inner loop."""
    out = _one_way_out_masks(digraph)
    solver = _AcyclicSolver(digraph.n, out)
    full = (1 << digraph.n) - 1
    total = 0
    for comp in _strongly_connected_components(digraph.n, out, full):
        cnt = bin(comp).count("1")
        total += cnt if cnt == 1 else solver.max_acyclic(comp)
    return total, solver.nodes


# ---------------------------------------------------------------------------
# Witness checking (pure, no solver state)


def verify_witness(instance: Instance, witness: Witness) -> bool:
    """True iff the witness satisfies its kind's invariant on the instance.

    Raises :class:`KindMismatch` when a clique witness is checked against a
    digraph or a transitive witness against a coloring.
    """
    if isinstance(witness, MonoCliqueWitness):
        if not isinstance(instance, BicoloredGraph):
            raise KindMismatch("clique witness on a non-coloring instance")
        if witness.vertices and witness.vertices[-1] >= instance.n:
            raise ValueError("witness vertex out of range")
        return all(
            instance.has_color(u, v, witness.color)
            for u, v in combinations(witness.vertices, 2)
        )
    if isinstance(witness, TransitiveWitness):
        if not isinstance(instance, SemicompleteDigraph):
            raise KindMismatch("transitive witness on a non-digraph instance")
        if witness.vertices and witness.vertices[-1] >= instance.n:
            raise ValueError("witness vertex out of range")
        position = {v: i for i, v in enumerate(witness.order)}
        for u, v in combinations(witness.vertices, 2):
            s = instance.state(u, v)
            if s is ArcState.BIORIENTED:
                continue
            tail, head = (u, v) if s is ArcState.FORWARD else (v, u)
            if position[tail] > position[head]:
                return False
        return True
    raise KindMismatch(f"unknown witness type {type(witness).__name__}")


# ---------------------------------------------------------------------------
# Reference subset-enumeration oracles (independent of the branch-and-bound
# paths; used to cross-check the solvers at small n)


def max_mono_clique_by_enumeration(graph: BicoloredGraph) -> int:
    """Maximum over all 2^n subsets; O(2^n) dynamic program per color."""
    n = graph.n
    best = 1
    for color in (EdgeColor.RED, EdgeColor.BLUE):
        adj = _color_adjacency(graph, color)
        ok = bytearray(1 << n)
        ok[0] = 1
        for mask in range(1, 1 << n):
            low = (mask & -mask).bit_length() - 1
            rest = mask & (mask - 1)
            if ok[rest] and rest & adj[low] == rest:
                ok[mask] = 1
                c = bin(mask).count("1")
                if c > best:
                    best = c
    return best


def _subset_is_acyclic(mask: int, out: list[int]) -> bool:
    # repeatedly peel vertices with no in-arcs inside the set
    remaining = mask
    while remaining:
        progress = False
        m = remaining
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            has_in = False
            others = remaining & ~bit
            o = others
            while o:
                b2 = o & -o
                u = b2.bit_length() - 1
                o ^= b2
                if out[u] >> v & 1:
                    has_in = True
                    break
            if not has_in:
                remaining ^= bit
                progress = True
        if not progress:
            return False
    return True


def max_transitive_set_by_enumeration(digraph: SemicompleteDigraph) -> int:
    """Maximum over all 2^n subsets, each checked for acyclicity."""
    out = _one_way_out_masks(digraph)
    n = digraph.n
    best = 1
    for mask in range(1, 1 << n):
        if bin(mask).count("1") > best and _subset_is_acyclic(mask, out):
            best = bin(mask).count("1")
    return best


# ---------------------------------------------------------------------------
# Exhaustive worst-case oracles


def oracle_budget_estimate(n: int, m: int) -> int:
    """Number of instances the oracle enumerates for a cell: every placement
    of m unicolored / one-way pairs times every 2^m assignment."""
    return comb(pair_count(n), m) * (2**m)


def _enumerate_cell(
    n: int,
    m: int,
    make_states: Callable[[tuple[int, ...], int], tuple],
    build: Callable[[int, tuple], Instance],
    solve_size: Callable[[Instance], tuple[int, int]],
    placement_range: tuple[int, int] | None = None,
) -> tuple[int, int, Instance]:
    """Scan (a slice of) a cell; returns (value, first attainer index, instance).

    The attainer index is global over the fixed enumeration order
    (placements lexicographic, assignment codes ascending), so merges over
    arbitrary slices reproduce the serial result.
    """
    total_pairs = pair_count(n)
    best = n + 1
    best_index = -1
    best_instance: Instance | None = None
    placements: Iterable = combinations(range(total_pairs), m)
    start, stop = 0, None
    if placement_range is not None:
        start, stop = placement_range
        from itertools import islice

        placements = islice(placements, start, stop)
    for p_idx, placement in enumerate(placements, start=start):
        for code in range(1 << m):
            states = make_states(placement, code)
            instance = build(n, states)
            size, _ = solve_size(instance)
            if size < best:
                best = size
                best_index = p_idx * (1 << m) + code
                best_instance = instance
                if best == 1:
                    break
        if best == 1:
            break
    assert best_instance is not None
    return best, best_index, best_instance


def _coloring_states(n: int):
    total = pair_count(n)

    def make(placement: tuple[int, ...], code: int) -> tuple:
        states = [EdgeColor.RED_BLUE] * total
        for bit, idx in enumerate(placement):
            states[idx] = EdgeColor.RED if code >> bit & 1 else EdgeColor.BLUE
        return tuple(states)

    return make


def _digraph_states(n: int):
    total = pair_count(n)

    def make(placement: tuple[int, ...], code: int) -> tuple:
        states = [ArcState.BIORIENTED] * total
        for bit, idx in enumerate(placement):
            states[idx] = ArcState.FORWARD if code >> bit & 1 else ArcState.BACKWARD
        return tuple(states)

    return make


def _check_oracle_pre(n: int, m: int, budget: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= m <= pair_count(n):
        raise ValueError(f"m={m} outside 0..C({n},2)")
    if pair_count(n) > _ORACLE_PAIR_CAP:
        raise BudgetExceeded(
            f"C({n},2)={pair_count(n)} exceeds the oracle pair cap {_ORACLE_PAIR_CAP}",
            estimate=oracle_budget_estimate(n, m),
        )
    estimate = oracle_budget_estimate(n, m)
    if estimate > budget:
        raise BudgetExceeded(
            f"cell (n={n}, m={m}) needs {estimate} solver calls, budget is {budget}",
            estimate=estimate,
        )


def brute_force_f(n: int, m: int, budget: int = DEFAULT_ORACLE_BUDGET) -> OracleTable:
    """Exhaustive worst-case monochromatic-clique value f(n, m)."""
    _check_oracle_pre(n, m, budget)
    value, _, instance = _enumerate_cell(
        n,
        m,
        _coloring_states(n),
        lambda nn, st: BicoloredGraph(nn, st),
        lambda inst: _max_mono_clique_size(inst),
    )
    return OracleTable(n, m, value, serialize_instance(instance))


def brute_force_F(n: int, m: int, budget: int = DEFAULT_ORACLE_BUDGET) -> OracleTable:
    """Exhaustive worst-case transitive-subtournament value F(n, m)."""
    _check_oracle_pre(n, m, budget)
    value, _, instance = _enumerate_cell(
        n,
        m,
        _digraph_states(n),
        lambda nn, st: SemicompleteDigraph(nn, st),
        lambda inst: _max_transitive_size(inst),
    )
    return OracleTable(n, m, value, serialize_instance(instance))


def oracle_cell_slice(
    n: int, m: int, family: str, start: int, stop: int
) -> tuple[int, int, str]:
    """Worker entry for parallel oracle runs: scan placements [start, stop).

    Returns (value, global attainer index, serialized instance); merging by
    (value, index) minimum reproduces the serial scan exactly.
    """
    if family == "coloring":
        value, idx, inst = _enumerate_cell(
            n,
            m,
            _coloring_states(n),
            lambda nn, st: BicoloredGraph(nn, st),
            lambda inst: _max_mono_clique_size(inst),
            placement_range=(start, stop),
        )
    elif family == "digraph":
        value, idx, inst = _enumerate_cell(
            n,
            m,
            _digraph_states(n),
            lambda nn, st: SemicompleteDigraph(nn, st),
            lambda inst: _max_transitive_size(inst),
            placement_range=(start, stop),
        )
    else:
        raise ValueError(f"unknown family {family!r}")
    return value, idx, serialize_instance(inst)
