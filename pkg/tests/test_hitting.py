import itertools
import random

import pytest

from rtvd.digraph import Digraph, count_transitive_arcs, without_vertices
from rtvd.errors import GraphClassError
from rtvd.generators import gen_in_tournament, gen_out_tournament
from rtvd.hitting import (
    HittingInstance,
    kernelize_hitting,
    solve_hitting,
    to_hitting_instance,
    tvd_in_tournament,
)
from rtvd.oracle import min_rtvd_oracle

THREE_CYCLE = Digraph(3, [(0, 1), (1, 2), (2, 0)])
ACYCLIC_TRIANGLE = Digraph(3, [(0, 1), (1, 2), (0, 2)])
TT4 = Digraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def hitting_decision_bruteforce(inst: HittingInstance) -> bool:
    if inst.k < 0:
        return False
    for r in range(min(inst.k, len(inst.universe)) + 1):
        for cand in itertools.combinations(inst.universe, r):
            cs = set(cand)
            if all(s & cs for s in inst.sets):
                return True
    return False


def random_hitting_instance(rng) -> HittingInstance:
    universe = range(rng.randint(2, 10))
    sets = []
    for _ in range(rng.randint(0, 12)):
        size = rng.choice((2, 3))
        if len(universe) >= size:
            sets.append(frozenset(rng.sample(list(universe), size)))
    return HittingInstance.build(universe, sets, rng.randint(0, 3))


def test_to_hitting_examples():
    assert to_hitting_instance(THREE_CYCLE, 0).sets == ()
    inst = to_hitting_instance(ACYCLIC_TRIANGLE, 1)
    assert inst.sets == (frozenset({0, 1, 2}),)
    assert to_hitting_instance(TT4, 2).universe == (0, 1, 2, 3)
    assert len(to_hitting_instance(TT4, 2).sets) == 4
    with pytest.raises(GraphClassError):
        to_hitting_instance(Digraph(4, [(0, 2), (1, 2), (0, 3), (1, 3)]), 1)


def test_solve_hitting_examples():
    assert solve_hitting(HittingInstance.build(range(3), [], 0)) == frozenset()
    inst = HittingInstance.build(range(3), [frozenset({0, 1, 2})], 1)
    assert solve_hitting(inst) == frozenset({0})
    inst = HittingInstance.build(
        range(6), [frozenset({0, 1, 2}), frozenset({3, 4, 5})], 1
    )
    assert solve_hitting(inst) is None


def test_solve_hitting_is_minimum_and_lex(rng):
    for _ in range(150):
        inst = random_hitting_instance(rng)
        got = solve_hitting(inst)
        feasible = [
            frozenset(c)
            for r in range(min(inst.k, len(inst.universe)) + 1)
            for c in itertools.combinations(inst.universe, r)
            if all(s & set(c) for s in inst.sets)
        ]
        if not feasible:
            assert got is None
        else:
            best = min(feasible, key=lambda s: (len(s), sorted(s)))
            assert got is not None
            assert (len(got), sorted(got)) == (len(best), sorted(best))


def test_kernelize_examples():
    inst = HittingInstance.build(range(5), [], 2)
    red = kernelize_hitting(inst)
    assert red.instance.sets == () and not red.forced and not red.infeasible
    # pair in more than k 3-sets collapses to the pair
    inst = HittingInstance.build(
        range(5), [frozenset({0, 1, 2}), frozenset({0, 1, 3})], 1
    )
    red = kernelize_hitting(inst)
    assert frozenset({0, 1}) in red.instance.sets
    assert all(len(s) == 2 for s in red.instance.sets)
    # element in more than k 2-sets is forced
    inst = HittingInstance.build(
        range(5), [frozenset({0, 1}), frozenset({0, 2})], 1
    )
    red = kernelize_hitting(inst)
    assert red.forced == frozenset({0})
    assert red.instance.k == 0 and red.instance.sets == ()


def test_kernelize_mixed_two_and_three_sets_regression():
    # an element in k^2 + 1 mixed sets must NOT be forced outright: here
    # {v, x} hits everything without u, and forcing u would flip the
    # decision; the forcing thresholds count 2-sets and 3-sets separately
    sets = [
        frozenset({0, 1}),        # {u, v}
        frozenset({0, 1, 5}),
        frozenset({0, 1, 6}),
        frozenset({0, 2, 7}),     # {u, x, .}
        frozenset({0, 2, 8}),
        frozenset({1, 3}),        # {v, .} and {x, .} are hit for free
        frozenset({2, 4}),
    ]
    inst = HittingInstance.build(range(9), sets, 2)
    assert hitting_decision_bruteforce(inst)  # {1, 2} works
    red = kernelize_hitting(inst)
    got = False if red.infeasible else hitting_decision_bruteforce(red.instance)
    assert got


def test_kernelize_preserves_decision(rng):
    for _ in range(250):
        inst = random_hitting_instance(rng)
        red = kernelize_hitting(inst)
        want = hitting_decision_bruteforce(inst)
        if red.infeasible:
            got = False
        else:
            got = hitting_decision_bruteforce(red.instance)
        assert got == want, (inst.sets, inst.k)


def test_branching_matches_bruteforce(rng):
    for _ in range(120):
        universe = range(rng.randint(3, 8))
        sets = []
        for _ in range(rng.randint(0, 5)):
            size = rng.choice((2, 3))
            sets.append(frozenset(rng.sample(list(universe), size)))
        inst = HittingInstance.build(universe, sets, rng.randint(0, 4))
        assert (solve_hitting(inst) is not None) == hitting_decision_bruteforce(inst)


def test_tvd_examples():
    assert tvd_in_tournament(THREE_CYCLE, 0).size == 0
    sol = tvd_in_tournament(ACYCLIC_TRIANGLE, 1)
    assert sol is not None and sol.size == 1
    two = Digraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert tvd_in_tournament(two, 1) is None
    assert tvd_in_tournament(two, 2).size == 2


def test_tvd_output_is_transitive_free_up_to_n12():
    # feasibility contract alone, past the oracle comparison range
    for seed in range(12):
        n = 11 + seed % 2
        D = gen_in_tournament(n, seed, structured=True)
        sol = tvd_in_tournament(D, n)
        assert sol is not None
        assert count_transitive_arcs(without_vertices(D, sol.deleted)) == 0


def test_tvd_matches_oracle_sampled():
    for seed in range(60):
        n = 5 + seed % 6
        if seed % 2:
            D = gen_in_tournament(n, seed, structured=seed % 4 == 1)
        else:
            D = gen_out_tournament(n, seed, structured=seed % 4 == 0)
        sol = tvd_in_tournament(D, n)
        assert sol is not None
        assert count_transitive_arcs(without_vertices(D, sol.deleted)) == 0
        opt = min_rtvd_oracle(D, 0).size
        assert sol.size == opt
        if opt:
            assert tvd_in_tournament(D, opt - 1) is None
