"""Hardness-reduction constructors, used as instance generators and as
cross-validation oracles.

Two constructions are provided:

* vertex cover -> relaxed transitive-free deletion on DAGs: every edge
  becomes a length-2 detour plus a shortcut arc, so an uncovered edge is
  exactly a surviving transitive arc; optional gadget triangles absorb a
  transitive-arc budget of ell.
* vertex multicut on DAGs -> zero-budget deletion: every original arc is
  subdivided, terminal pairs get shortcut arcs, and k+1 endpoint copies
  make deleting terminals useless.

Both are total constructions; the special graph classes the hardness
claims need (cubic planar, etc.) matter only for the claims, not for
validity, so the tests run them on arbitrary small inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraph import Arc, Digraph, _closure_from, _full_mask
from .errors import CapExceededError
from .oracle import Instance

VC_ORACLE_MAX_N = 14
MULTICUT_ORACLE_MAX_N = 14


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[frozenset[int]]

    @staticmethod
    def build(n: int, edges) -> "UndirectedGraph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            norm.add(frozenset((u, v)))
        return UndirectedGraph(n=n, edges=frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class MulticutInstance:
    """A DAG, terminal pairs (each non-adjacent but connected), and a
    budget of non-terminal deletions.

    Every source terminal must have in-degree zero and every sink terminal
    out-degree zero.  This keeps terminals off the interior of any witness
    path, which the constructed instance needs: a shortcut arc of one pair
    reachable from another pair's source would otherwise stand in for a
    cut path and break the equivalence.  (Example: pairs (b, c), (a, c)
    with arcs a->b and a disjoint b->c route; cutting the routes leaves
    a -> b -> shortcut -> c as a surviving witness for (a, c).)
    """

    dag: Digraph
    terminals: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        from .digraph import topological_ordering

        topological_ordering(self.dag)  # CycleError if not a DAG
        if self.k < 0:
            raise ValueError("budget must be non-negative")
        full = _full_mask(self.dag.n)
        for s, t in self.terminals:
            if Arc(s, t) in self.dag.arcs:
                raise ValueError(f"terminal pair ({s}, {t}) must not be an arc")
            reach = _closure_from(self.dag.out_masks, 1 << s, full)
            if not (reach >> t) & 1 or s == t:
                raise ValueError(f"terminal {t} must be reachable from {s}")
            if self.dag.in_masks[s]:
                raise ValueError(f"source terminal {s} must have in-degree 0")
            if self.dag.out_masks[t]:
                raise ValueError(f"sink terminal {t} must have out-degree 0")

    @property
    def terminal_vertices(self) -> frozenset[int]:
        return frozenset(v for pair in self.terminals for v in pair)


# ---------------------------------------------------------------------------
# vertex cover -> relaxed deletion


@dataclass(frozen=True)
class VcLayout:
    """Stable vertex numbering of the constructed digraph: originals keep
    their ids, one detour vertex per edge (sorted edge order), then one
    (top, mid, bottom) triple per gadget index."""

    n_original: int
    edge_vertex: dict
    gadget_triples: tuple[tuple[int, int, int], ...]


def vc_layout(G: UndirectedGraph, ell: int) -> VcLayout:
    edges = G.sorted_edges()
    edge_vertex = {e: G.n + i for i, e in enumerate(edges)}
    base = G.n + len(edges)
    triples = tuple(
        (base + 3 * j, base + 3 * j + 1, base + 3 * j + 2) for j in range(ell)
    )
    return VcLayout(n_original=G.n, edge_vertex=edge_vertex, gadget_triples=triples)


def vc_to_rtvd(G: UndirectedGraph, k: int, ell: int) -> Instance:
    """Instance whose decision at budgets (k, ell) matches vertex cover
    at budget k.

    Per edge (i, j), i < j: arcs (i, x), (x, j), (i, j) through a fresh
    detour vertex x.  For ell >= 1, ell gadget triangles each contribute
    one unavoidable transitive arc and hang off the lowest original vertex.
    """
    layout = vc_layout(G, ell)
    arcs = []
    for i, j in G.sorted_edges():
        x = layout.edge_vertex[(i, j)]
        arcs += [(i, x), (x, j), (i, j)]
    for top, mid, bottom in layout.gadget_triples:
        arcs += [(top, bottom), (top, mid), (mid, bottom)]
        if G.n > 0:
            arcs.append((bottom, 0))
    n = G.n + len(G.edges) + 3 * ell
    return Instance(digraph=Digraph(n, arcs), k=min(k, n), ell=ell)


def vertex_cover_oracle(G: UndirectedGraph, k: int, max_n: int = VC_ORACLE_MAX_N) -> bool:
    """Exact decision by subset enumeration."""
    if G.n > max_n:
        raise CapExceededError(f"vertex cover oracle capped at n={max_n}")
    edges = G.sorted_edges()
    for r in range(min(k, G.n) + 1):
        for cover in itertools.combinations(range(G.n), r):
            cs = set(cover)
            if all(u in cs or v in cs for u, v in edges):
                return True
    return False


# ---------------------------------------------------------------------------
# vertex multicut -> zero-budget deletion


@dataclass(frozen=True)
class MulticutLayout:
    """Stable numbering: originals keep their ids, one subdivision vertex
    per arc (sorted arc order), then per terminal pair the k+1 source
    copies followed by the k+1 sink copies."""

    n_original: int
    arc_vertex: dict
    source_copies: tuple[tuple[int, ...], ...]
    sink_copies: tuple[tuple[int, ...], ...]


def multicut_layout(mc: MulticutInstance) -> MulticutLayout:
    arcs = sorted(mc.dag.arcs)
    arc_vertex = {a: mc.dag.n + i for i, a in enumerate(arcs)}
    base = mc.dag.n + len(arcs)
    copies = mc.k + 1
    sources, sinks = [], []
    for i in range(len(mc.terminals)):
        start = base + i * 2 * copies
        sources.append(tuple(range(start, start + copies)))
        sinks.append(tuple(range(start + copies, start + 2 * copies)))
    return MulticutLayout(
        n_original=mc.dag.n,
        arc_vertex=arc_vertex,
        source_copies=tuple(sources),
        sink_copies=tuple(sinks),
    )


def multicut_to_tvd(mc: MulticutInstance) -> Instance:
    """Zero-budget instance whose decision matches the multicut decision.

    Every original arc (u, v) is subdivided through a fresh vertex; each
    terminal pair (s, t) gets the shortcut arc (s, t) plus k+1 copies of
    each endpoint, wired to all of the other side's copies and to the
    subdivision vertices of s's out-arcs / t's in-arcs.  The transitive
    arcs of the result are exactly the shortcut and copy-to-copy arcs.
    """
    layout = multicut_layout(mc)
    arcs = [(s, t) for s, t in mc.terminals]
    for u, v in sorted(mc.dag.arcs):
        x = layout.arc_vertex[Arc(u, v)]
        arcs += [(u, x), (x, v)]
    for i, (s, t) in enumerate(mc.terminals):
        srcs, snks = layout.source_copies[i], layout.sink_copies[i]
        arcs += [(a, b) for a in srcs for b in snks]
        for u in mc.dag.out_adj[s]:
            x = layout.arc_vertex[Arc(s, u)]
            arcs += [(a, x) for a in srcs]
        for w in mc.dag.in_adj[t]:
            x = layout.arc_vertex[Arc(w, t)]
            arcs += [(x, b) for b in snks]
    n = mc.dag.n + len(mc.dag.arcs) + 2 * (mc.k + 1) * len(mc.terminals)
    return Instance(digraph=Digraph(n, arcs), k=mc.k, ell=0)


def expected_transitive_arcs(mc: MulticutInstance) -> frozenset[Arc]:
    """The transitive-arc set the construction is designed to produce."""
    layout = multicut_layout(mc)
    expected = {Arc(s, t) for s, t in mc.terminals}
    for i in range(len(mc.terminals)):
        for a in layout.source_copies[i]:
            for b in layout.sink_copies[i]:
                expected.add(Arc(a, b))
    return frozenset(expected)


def multicut_oracle(mc: MulticutInstance, max_n: int = MULTICUT_ORACLE_MAX_N) -> bool:
    """Exact decision by enumerating non-terminal deletion sets."""
    if mc.dag.n > max_n:
        raise CapExceededError(f"multicut oracle capped at n={max_n}")
    candidates = sorted(set(range(mc.dag.n)) - mc.terminal_vertices)
    full = _full_mask(mc.dag.n)
    for r in range(min(mc.k, len(candidates)) + 1):
        for cut in itertools.combinations(candidates, r):
            keep = full
            for v in cut:
                keep &= ~(1 << v)
            masks = [m & keep for m in mc.dag.out_masks]
            if all(
                not (_closure_from(masks, 1 << s, keep) >> t) & 1
                for s, t in mc.terminals
            ):
                return True
    return False
