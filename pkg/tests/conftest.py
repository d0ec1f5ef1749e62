"""Shared test fixtures and independent oracles.

The reachability oracle here enumerates simple paths explicitly, with no
bitmask machinery, so the package's transitive-arc code is checked
against a genuinely separate implementation.
"""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from rtvd.digraph import Arc, Digraph


def simple_paths_exist(D: Digraph, src: int, dst: int, forbidden_arc=None) -> bool:
    """Is there a directed simple path src -> dst avoiding forbidden_arc?"""
    adj = {u: sorted(v for (t, v) in D.arcs if t == u) for u in range(D.n)}

    def dfs(u, visited):
        for v in adj[u]:
            if forbidden_arc is not None and (u, v) == tuple(forbidden_arc):
                continue
            if v == dst:
                return True
            if v not in visited:
                visited.add(v)
                if dfs(v, visited):
                    return True
                visited.remove(v)
        return False

    return dfs(src, {src})


def transitive_arcs_by_paths(D: Digraph) -> set[Arc]:
    """Independent per-arc oracle: enumerate simple paths around each arc."""
    return {
        arc
        for arc in D.arcs
        if simple_paths_exist(D, arc.tail, arc.head, forbidden_arc=arc)
    }


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    arcs = [
        (u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p
    ]
    return Digraph(n, arcs)


@st.composite
def digraphs(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Digraph(n, arcs)


# curated undirected corpus for the vertex-cover reduction tests
def small_graph_corpus():
    from rtvd.reductions import UndirectedGraph

    def path(n):
        return UndirectedGraph.build(n, [(i, i + 1) for i in range(n - 1)])

    def cycle(n):
        return UndirectedGraph.build(
            n, [(i, (i + 1) % n) for i in range(n)]
        )

    def complete(n):
        return UndirectedGraph.build(n, list(itertools.combinations(range(n), 2)))

    prism = UndirectedGraph.build(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )
    cube = UndirectedGraph.build(
        8,
        [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6),
         (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)],
    )
    star = UndirectedGraph.build(4, [(0, 1), (0, 2), (0, 3)])
    rng = random.Random(20240)
    randoms = []
    for n, p in ((6, 0.4), (7, 0.35), (8, 0.3)):
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        randoms.append(UndirectedGraph.build(n, edges))
    return [
        complete(3),
        complete(4),
        prism,
        cube,
        path(2),
        path(3),
        path(4),
        cycle(5),
        star,
        *randoms,
    ]


@pytest.fixture
def rng():
    return random.Random(987654321)
