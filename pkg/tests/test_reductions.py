import random

import pytest

from rtvd.digraph import Digraph, topological_ordering, transitive_arcs
from rtvd.errors import CapExceededError
from rtvd.generators import gen_dag
from rtvd.oracle import decide_rtvd_oracle, min_rtvd_oracle
from rtvd.reductions import (
    MulticutInstance,
    UndirectedGraph,
    expected_transitive_arcs,
    multicut_oracle,
    multicut_to_tvd,
    vc_to_rtvd,
    vertex_cover_oracle,
)

from conftest import small_graph_corpus

K3 = UndirectedGraph.build(3, [(0, 1), (0, 2), (1, 2)])


def random_multicut(rng, n=7, max_pairs=2, k=1) -> MulticutInstance | None:
    """Random instance with dedicated source/sink terminals: a DAG core
    with r fresh sources wired in and r fresh sinks wired out."""
    r = rng.randint(1, max_pairs)
    core_n = max(1, n - 2 * r)
    core = gen_dag(core_n, 0.45, rng.randrange(1 << 30))
    arcs = set(map(tuple, core.arcs))
    reach = {}
    for v in range(core_n):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in range(core_n):
                if (u, w) in arcs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach[v] = seen
    pairs = []
    for i in range(r):
        s = core_n + i
        t = core_n + r + i
        c_in = rng.randrange(core_n)
        c_out = rng.choice(sorted(reach[c_in]))
        arcs.add((s, c_in))
        arcs.add((c_out, t))
        for v in range(core_n):  # extra fan-in/out for variety
            if rng.random() < 0.2:
                arcs.add((s, v))
            if rng.random() < 0.2:
                arcs.add((v, t))
        pairs.append((s, t))
    D = Digraph(core_n + 2 * r, arcs)
    try:
        return MulticutInstance(dag=D, terminals=tuple(pairs), k=k)
    except ValueError:
        return None


def test_vc_examples():
    single = UndirectedGraph.build(2, [(0, 1)])
    inst = vc_to_rtvd(single, 1, 0)
    assert inst.digraph.n == 3
    assert min_rtvd_oracle(inst.digraph, 0).size == 1
    inst = vc_to_rtvd(K3, 2, 0)
    assert min_rtvd_oracle(inst.digraph, 0).size == 2
    empty = UndirectedGraph.build(4, [])
    inst = vc_to_rtvd(empty, 2, 0)
    assert inst.digraph.m == 0
    assert min_rtvd_oracle(inst.digraph, 0).size == 0


def test_vc_output_is_dag():
    for G in small_graph_corpus():
        for ell in (0, 1, 2):
            inst = vc_to_rtvd(G, 2, ell)
            topological_ordering(inst.digraph)  # raises on a cycle


def test_vc_oracle():
    assert vertex_cover_oracle(K3, 2)
    assert not vertex_cover_oracle(K3, 1)
    with pytest.raises(CapExceededError):
        vertex_cover_oracle(UndirectedGraph.build(15, []), 1)


def test_vc_reduction_decision_equivalence():
    for G in small_graph_corpus()[:6]:
        for k in range(0, min(G.n, 4) + 1):
            want = vertex_cover_oracle(G, k)
            inst = vc_to_rtvd(G, k, 0)
            got, _ = decide_rtvd_oracle(inst, max_n=inst.digraph.n)
            assert got == want, (sorted(map(sorted, G.edges)), k)


def test_vc_gadget_budget_is_exact():
    # the gadget triangles leave exactly ell unavoidable transitive arcs
    for ell in (1, 2):
        inst = vc_to_rtvd(UndirectedGraph.build(2, [(0, 1)]), 0, ell)
        arcs = transitive_arcs(inst.digraph)
        assert len(arcs) == 1 + ell  # edge arc + one per gadget


def test_multicut_invariants():
    with pytest.raises(ValueError):
        MulticutInstance(dag=Digraph(2, [(0, 1)]), terminals=((0, 1),), k=0)
    with pytest.raises(ValueError):
        MulticutInstance(dag=Digraph(3, [(0, 1)]), terminals=((0, 2),), k=0)


def test_multicut_example():
    mc = MulticutInstance(
        dag=Digraph(3, [(0, 1), (1, 2)]), terminals=((0, 2),), k=1
    )
    inst = multicut_to_tvd(mc)
    assert inst.digraph.n == 9
    assert inst.ell == 0 and inst.k == 1
    got = transitive_arcs(inst.digraph)
    assert got == expected_transitive_arcs(mc)
    assert len(got) == 5
    assert min_rtvd_oracle(inst.digraph, 0).size == 1
    assert multicut_oracle(mc)


def test_multicut_empty_terminals():
    mc = MulticutInstance(dag=gen_dag(5, 0.4, 1), terminals=(), k=1)
    inst = multicut_to_tvd(mc)
    assert transitive_arcs(inst.digraph) == frozenset()
    assert min_rtvd_oracle(inst.digraph, 0).size == 0


def test_multicut_structural_equality_random(rng):
    checked = 0
    for _ in range(80):
        mc = random_multicut(rng, n=rng.randint(4, 7), max_pairs=2, k=rng.randint(0, 2))
        if mc is None:
            continue
        inst = multicut_to_tvd(mc)
        assert transitive_arcs(inst.digraph) == expected_transitive_arcs(mc)
        assert topological_ordering(inst.digraph)
        checked += 1
    assert checked >= 40


def test_multicut_decision_equivalence(rng):
    checked = 0
    for _ in range(40):
        mc = random_multicut(rng, n=rng.randint(4, 6), max_pairs=2, k=rng.randint(0, 2))
        if mc is None:
            continue
        inst = multicut_to_tvd(mc)
        got, _ = decide_rtvd_oracle(inst, max_n=inst.digraph.n)
        want = multicut_oracle(mc)
        assert got == want, (sorted(mc.dag.arcs), mc.terminals, mc.k)
        checked += 1
    assert checked >= 25


def test_multicut_oracle_examples(rng):
    mc = MulticutInstance(
        dag=Digraph(3, [(0, 1), (1, 2)]), terminals=((0, 2),), k=1
    )
    assert multicut_oracle(mc)
    mc0 = MulticutInstance(
        dag=Digraph(3, [(0, 1), (1, 2)]), terminals=((0, 2),), k=0
    )
    assert not multicut_oracle(mc0)
