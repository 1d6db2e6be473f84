"""Exact solvers against independent subset-enumeration oracles."""

import numpy as np
import pytest

from biramsey.constructions import lex_clique_packing, triangle_digraph
from biramsey.model import (
    ArcState,
    BicoloredGraph,
    EdgeColor,
    MonoCliqueWitness,
    SemicompleteDigraph,
    TransitiveWitness,
    random_coloring,
    random_semicomplete,
)
from biramsey.solvers import (
    BudgetExceeded,
    KindMismatch,
    SizeLimitExceeded,
    brute_force_F,
    brute_force_f,
    max_mono_clique,
    max_mono_clique_by_enumeration,
    max_transitive_set,
    max_transitive_set_by_enumeration,
    oracle_budget_estimate,
    verify_witness,
)

QR7 = SemicompleteDigraph.from_arcs(
    7, {(i, (i + d) % 7) for i in range(7) for d in (1, 2, 4)}
)


def test_all_bicolored_is_one_big_clique():
    g = BicoloredGraph(6, (EdgeColor.RED_BLUE,) * 15)
    res = max_mono_clique(g)
    assert res.size == 6
    assert res.witness.vertices == (0, 1, 2, 3, 4, 5)
    assert res.witness.color is EdgeColor.RED  # red wins ties


def test_lex_packing_instance_solves_to_three():
    cert = lex_clique_packing(9, 2)
    assert max_mono_clique(cert.instance).size == 3


def test_clique_solver_agrees_with_enumeration_on_50_random():
    rng = np.random.default_rng(2024)
    for trial in range(50):
        n = int(rng.integers(1, 17))
        g = random_coloring(n, int(rng.integers(0, 2**31)))
        res = max_mono_clique(g)
        assert res.size == max_mono_clique_by_enumeration(g)
        assert verify_witness(g, res.witness)
        assert res.witness.size == res.size


def test_transitive_tournament_solves_to_n():
    arcs = {(u, v) for u in range(6) for v in range(u + 1, 6)}
    d = SemicompleteDigraph.from_arcs(6, arcs)
    res = max_transitive_set(d)
    assert res.size == 6
    assert res.witness.order == (0, 1, 2, 3, 4, 5)


def test_three_triangles_solve_to_six():
    cert = triangle_digraph(9, 9)
    assert max_transitive_set(cert.instance).size == 6


def test_qr7_has_no_transitive_four_set():
    from itertools import combinations

    res = max_transitive_set(QR7)
    assert res.size == 3
    assert verify_witness(QR7, res.witness)
    # exhaustive: no 4-subset is acyclic
    out = {v: {(v + d) % 7 for d in (1, 2, 4)} for v in range(7)}
    for sub in combinations(range(7), 4):
        has_cycle = any(
            (b in out[a] and c in out[b] and a in out[c])
            or (a in out[b] and b in out[c] and c in out[a])
            for a, b, c in combinations(sub, 3)
        )
        assert has_cycle


def test_transitive_solver_agrees_with_enumeration_on_50_random():
    rng = np.random.default_rng(4711)
    for trial in range(50):
        n = int(rng.integers(1, 13))
        d = random_semicomplete(n, int(rng.integers(0, 2**31)))
        res = max_transitive_set(d)
        assert res.size == max_transitive_set_by_enumeration(d)
        assert verify_witness(d, res.witness)


def test_transitive_solver_agrees_with_enumeration_at_n14():
    from biramsey.constructions import tournament_packing
    from biramsey.model import random_tournament

    packed = tournament_packing(14, 3).instance
    assert max_transitive_set(packed).size == max_transitive_set_by_enumeration(packed)
    t = random_tournament(14, 1414)
    assert max_transitive_set(t).size == max_transitive_set_by_enumeration(t)


def test_witness_is_lexicographically_smallest_and_deterministic():
    for seed in (0, 1, 2):
        g = random_coloring(10, seed)
        first = max_mono_clique(g)
        second = max_mono_clique(g)
        assert first.witness == second.witness
        d = random_semicomplete(10, seed)
        assert max_transitive_set(d).witness == max_transitive_set(d).witness


def _all_subsets_of_size(n, size):
    from itertools import combinations

    return combinations(range(n), size)


def test_clique_witness_matches_brute_force_tie_rule():
    # larger size, then red before blue, then lexicographically smallest set
    from itertools import combinations

    for seed in range(20):
        g = random_coloring(7, seed + 600)
        res = max_mono_clique(g)
        best = None
        for color in (EdgeColor.RED, EdgeColor.BLUE):
            for sub in _all_subsets_of_size(7, res.size):
                ok = all(g.has_color(u, v, color) for u, v in combinations(sub, 2))
                if ok:
                    key = (color is EdgeColor.BLUE, sub)
                    if best is None or key < best:
                        best = key
        assert best is not None
        expected_color = EdgeColor.BLUE if best[0] else EdgeColor.RED
        assert (res.witness.color, res.witness.vertices) == (expected_color, best[1])


def test_transitive_witness_vertex_set_is_lex_min_among_optima():
    from biramsey.solvers import _one_way_out_masks, _subset_is_acyclic

    for seed in range(20):
        d = random_semicomplete(7, seed + 900)
        res = max_transitive_set(d)
        out = _one_way_out_masks(d)
        best = None
        for sub in _all_subsets_of_size(7, res.size):
            mask = sum(1 << v for v in sub)
            if _subset_is_acyclic(mask, out):
                best = sub
                break  # combinations yield in lexicographic order
        assert best == res.witness.vertices


def test_size_caps():
    g = BicoloredGraph(3, (EdgeColor.RED,) * 3)
    with pytest.raises(SizeLimitExceeded):
        max_mono_clique(g, size_cap=2)
    d = SemicompleteDigraph(3, (ArcState.BIORIENTED,) * 3)
    with pytest.raises(SizeLimitExceeded):
        max_transitive_set(d, size_cap=2)


# --- witness checking --------------------------------------------------------


def test_verify_witness_examples():
    all_red = BicoloredGraph(4, (EdgeColor.RED,) * 6)
    assert verify_witness(all_red, MonoCliqueWitness((0, 1, 2, 3), EdgeColor.RED))
    assert not verify_witness(all_red, MonoCliqueWitness((0, 1, 2, 3), EdgeColor.BLUE))
    cyc = SemicompleteDigraph.from_arcs(3, {(0, 1), (1, 2), (2, 0)})
    assert not verify_witness(cyc, TransitiveWitness((0, 1, 2), (0, 1, 2)))
    assert verify_witness(cyc, TransitiveWitness((0, 1), (0, 1)))


def test_verify_witness_kind_mismatch():
    all_red = BicoloredGraph(4, (EdgeColor.RED,) * 6)
    with pytest.raises(KindMismatch):
        verify_witness(all_red, TransitiveWitness((0, 1), (0, 1)))
    d = SemicompleteDigraph(3, (ArcState.BIORIENTED,) * 3)
    with pytest.raises(KindMismatch):
        verify_witness(d, MonoCliqueWitness((0, 1), EdgeColor.RED))


def test_solver_witnesses_verify_on_many_random_instances():
    rng = np.random.default_rng(99)
    for trial in range(250):
        n = int(rng.integers(1, 12))
        seed = int(rng.integers(0, 2**31))
        g = random_coloring(n, seed)
        assert verify_witness(g, max_mono_clique(g).witness)
        d = random_semicomplete(n, seed)
        assert verify_witness(d, max_transitive_set(d).witness)


# --- worst-case oracles ------------------------------------------------------


def test_oracle_at_m_zero_is_n():
    for n in (1, 2, 3, 4, 5):
        assert brute_force_f(n, 0).value == n
        assert brute_force_F(n, 0).value == n


def test_oracle_small_m_formulas():
    assert brute_force_f(5, 4).value == 3
    assert brute_force_F(5, 4).value == 4
    assert brute_force_f(3, 3).value == 2


def test_oracle_extremal_instance_attains_value():
    from biramsey.model import parse_instance

    table = brute_force_f(4, 3)
    inst = parse_instance(table.extremal_instance)
    assert max_mono_clique(inst).size == table.value
    table = brute_force_F(4, 3)
    inst = parse_instance(table.extremal_instance)
    assert max_transitive_set(inst).size == table.value


def test_oracle_monotone_and_sandwich_on_n4():
    total = 6
    values = [
        (brute_force_f(4, m).value, brute_force_F(4, m).value)
        for m in range(total + 1)
    ]
    for m in range(1, total + 1):
        assert values[m][0] <= values[m - 1][0]
        assert values[m][1] <= values[m - 1][1]
    for f_val, big_f in values:
        assert f_val <= big_f


def test_oracle_budget_errors():
    with pytest.raises(BudgetExceeded) as info:
        brute_force_f(7, 0)  # C(7,2) = 21 > 15 pair-slot cap
    assert info.value.estimate >= 1
    with pytest.raises(BudgetExceeded) as info:
        brute_force_F(6, 8, budget=10)
    assert info.value.estimate == oracle_budget_estimate(6, 8)


def test_oracle_is_deterministic():
    a = brute_force_F(4, 4)
    b = brute_force_F(4, 4)
    assert a == b


def test_node_counts_stay_modest_on_structured_instances():
    # the exposed counters guard the pruning machinery: orders of magnitude
    # of headroom over observed counts, tight enough to catch a broken
    # bound or a lost component decomposition
    from biramsey.constructions import lex_clique_packing, tournament_packing
    from biramsey.model import random_tournament

    r = max_transitive_set(tournament_packing(14, 3).instance)
    assert r.nodes_explored < 20_000
    r = max_mono_clique(lex_clique_packing(16, 3).instance)
    assert r.nodes_explored < 10_000
    r = max_transitive_set(random_tournament(20, 99))
    assert r.nodes_explored < 2_000_000
