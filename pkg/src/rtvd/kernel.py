"""Kernelization for relaxed transitive-free deletion on in-tournaments.

Pipeline: pack vertex-disjoint acyclic triangles greedily (too many means
an immediate NO), catalog the triangles meeting the packing in one or two
vertices with per-vertex / per-arc caps, and keep, besides the catalog
vertices, a cut-preserving set for every arc among them so that witness
paths for transitivity can always be rerouted inside the kernel.

Size-bounded cut-preserving sets are pluggable: the default provider
returns the whole vertex set (always correct, never size-bounded); the
flow provider returns the union of k+1 internally vertex-disjoint paths
when they exist, falling back to the whole set otherwise.  Out-tournament
inputs are handled by reversing all arcs first (reversal preserves
transitive-arc structure).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .digraph import (
    AcyclicTriangle,
    Arc,
    Digraph,
    enumerate_acyclic_triangles,
    induced_subgraph,
    is_in_tournament,
)
from .errors import GraphClassError
from .oracle import Instance

CutPreservingProvider = Callable[[Digraph, int, int, int], frozenset]


@dataclass(frozen=True)
class TrianglePacking:
    """Vertex-disjoint acyclic triangles, maximal under greedy extension
    in lexicographic order."""

    triangles: tuple[AcyclicTriangle, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for t in self.triangles for v in t)


@dataclass(frozen=True)
class TriangleCatalog:
    """The packing plus capped lists of triangles meeting it in exactly one
    vertex (per vertex) or exactly two (per arc between them)."""

    base: TrianglePacking
    one_point: tuple[AcyclicTriangle, ...]
    two_point: tuple[AcyclicTriangle, ...]

    @property
    def vertices(self) -> frozenset[int]:
        tris = self.base.triangles + self.one_point + self.two_point
        return frozenset(v for t in tris for v in t)


def greedy_packing(D: Digraph, k: int, ell: int) -> TrianglePacking | None:
    """Maximal disjoint packing in lexicographic triangle order, or None
    (a NO verdict) when it exceeds ell + k + 1.

    The threshold is deliberately the lenient reading: strictly more than
    ell + k + 1 disjoint triangles leave more than ell transitive arcs
    after any k deletions, so NO is always sound.
    """
    if not is_in_tournament(D):
        raise GraphClassError("kernelization requires an in-tournament")
    used: set[int] = set()
    packed = []
    for t in enumerate_acyclic_triangles(D):
        if used.isdisjoint(t):
            packed.append(t)
            used.update(t)
    if len(packed) > ell + k + 1:
        return None
    return TrianglePacking(triangles=tuple(packed))


def build_catalog(
    D: Digraph, packing: TrianglePacking, k: int, ell: int
) -> TriangleCatalog:
    """Per-vertex and per-arc triangle lists, truncated to the
    lexicographically smallest k + ell + 1 entries each."""
    cap = k + ell + 1
    base_vertices = packing.vertices
    packed = set(packing.triangles)
    by_vertex: dict[int, list] = {}
    by_arc: dict[Arc, list] = {}
    for t in enumerate_acyclic_triangles(D):
        if t in packed:
            continue
        hit = base_vertices & set(t)
        if len(hit) == 1:
            by_vertex.setdefault(next(iter(hit)), []).append(t)
        elif len(hit) == 2:
            # the two packed vertices are joined by one of the triangle's
            # own arcs; catalog under that oriented arc
            arcs = (Arc(t.a, t.b), Arc(t.b, t.c), Arc(t.a, t.c))
            key = next(a for a in arcs if set(a) == hit)
            by_arc.setdefault(key, []).append(t)
    one_point = []
    for v in sorted(by_vertex):
        one_point.extend(sorted(by_vertex[v])[:cap])
    two_point = []
    for arc in sorted(by_arc):
        two_point.extend(sorted(by_arc[arc])[:cap])
    return TriangleCatalog(
        base=packing, one_point=tuple(one_point), two_point=tuple(two_point)
    )


# ---------------------------------------------------------------------------
# cut-preserving providers


def whole_graph_provider(D: Digraph, x: int, y: int, k: int) -> frozenset:
    """Trivially cut-preserving: with nothing outside the set, every path
    already lives inside it."""
    return frozenset(range(D.n))


def vertex_disjoint_paths(
    D: Digraph, x: int, y: int, limit: int
) -> list[tuple[int, ...]]:
    """Up to ``limit`` internally vertex-disjoint x->y paths (max-flow with
    split vertices, BFS augmentation).  The direct arc, when present,
    counts as one of the paths."""
    if x == y:
        raise ValueError("endpoints must differ")
    n = D.n
    # node-splitting: v_in = 2v, v_out = 2v+1; interior capacity one
    src, snk = 2 * x + 1, 2 * y
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        if v not in (x, y):
            cap[(2 * v, 2 * v + 1)] = 1
    for u, v in D.arcs:
        cap[(2 * u + 1, 2 * v)] = 1
    adj: dict[int, list[int]] = {}
    for a, b in cap:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    flow: dict[tuple[int, int], int] = {}
    paths_found = 0
    while paths_found < limit:
        # BFS for an augmenting path in the residual graph
        parent = {src: None}
        queue = [src]
        while queue and snk not in parent:
            nxt = []
            for a in queue:
                for b in adj.get(a, ()):
                    if b in parent:
                        continue
                    residual = cap.get((a, b), 0) - flow.get((a, b), 0)
                    residual += flow.get((b, a), 0)
                    if residual > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if snk not in parent:
            break
        b = snk
        while parent[b] is not None:
            a = parent[b]
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        paths_found += 1
    # decompose the flow into vertex paths
    paths = []
    for _ in range(paths_found):
        path = [x]
        node = src
        while node != snk:
            succ = next(b for b in adj.get(node, ()) if flow.get((node, b), 0) > 0)
            flow[(node, succ)] -= 1
            node = succ
            if node % 2 == 0:
                path.append(node // 2)
        paths.append(tuple(path))
    return paths


def flow_provider(D: Digraph, x: int, y: int, k: int) -> frozenset:
    """Union of k+1 internally disjoint x->y paths when the minimum vertex
    cut allows it; whole-graph fallback otherwise."""
    paths = vertex_disjoint_paths(D, x, y, k + 1)
    if len(paths) < k + 1:
        return frozenset(range(D.n))
    return frozenset(v for p in paths for v in p)


def cut_preserving_set(
    provider: CutPreservingProvider, D: Digraph, x: int, y: int, k: int
) -> frozenset:
    z = frozenset(provider(D, x, y, k))
    if not ({x, y} <= z):
        raise ValueError("provider returned a set missing an endpoint")
    return z


# ---------------------------------------------------------------------------
# kernel assembly


def _canonical_no_instance() -> Instance:
    # A constant-size NO instance: one acyclic triangle, no budgets.
    D = Digraph(3, [(0, 1), (1, 2), (0, 2)])
    return Instance(digraph=D, k=0, ell=0)


def assemble_kernel(
    D: Digraph,
    k: int,
    ell: int,
    provider: CutPreservingProvider = whole_graph_provider,
) -> Instance:
    """Induced sub-instance on the catalog vertices plus the per-arc
    cut-preserving sets; decision-equivalent to (D, k, ell).

    A packing verdict yields a canonical constant-size NO instance, the
    usual kernelization convention.  Vertices of the kernel are relabeled
    to 0..|X|-1 in increasing original-id order.
    """
    packing = greedy_packing(D, k, ell)
    if packing is None:
        return _canonical_no_instance()
    catalog = build_catalog(D, packing, k, ell)
    core = catalog.vertices
    kept = set(core)
    for u, v in sorted(D.arcs):
        if u in core and v in core:
            kept |= cut_preserving_set(provider, D, u, v, k)
    sub = induced_subgraph(D, kept)
    # a budget beyond the kernel's vertex count adds nothing
    return Instance(digraph=sub, k=min(k, sub.n), ell=ell)
