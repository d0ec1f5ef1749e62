"""Core digraph type, transitive-arc machinery, recognizers, and orderings.

Vertices are the ids ``0 .. n-1``.  A :class:`Digraph` is an immutable value:
"mutation" helpers (:func:`without_vertices`, :func:`induced_subgraph`,
:func:`reverse`) return new digraphs, so a digraph may be shared freely
across workers.

An arc ``(u, v)`` is *transitive* when ``v`` stays reachable from ``u``
after the arc itself is removed, i.e. when some directed path of length at
least two runs from ``u`` to ``v``.  A digraph with no transitive arc is
*transitive-free*; every solver in this package minimizes vertex deletions
subject to a budget of allowed transitive arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import CapExceededError, CycleError, GraphClassError


class Arc(NamedTuple):
    tail: int
    head: int


class AcyclicTriangle(NamedTuple):
    """Vertex triple (a, b, c) with arcs (a,b), (b,c), (a,c) present.

    Canonical form: (a, c) is the transitive arc and b the midpoint.
    """

    a: int
    b: int
    c: int


def _bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class Digraph:
    """Simple digraph: no self-loops, no duplicate arcs, ids 0..n-1.

    Both orientations of a pair may be present (a 2-cycle); parallel arcs
    may not.  Adjacency indices and bitmask views are derived lazily and
    cached; instances are treated as immutable.
    """

    __slots__ = ("n", "arcs", "_cache")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            normalized.add(Arc(u, v))
        self.n = n
        self.arcs = frozenset(normalized)
        self._cache = {}

    @classmethod
    def _unchecked(cls, n: int, arcs: frozenset) -> "Digraph":
        # Fast path for generators/enumerators that produce known-valid arcs.
        self = cls.__new__(cls)
        self.n = n
        self.arcs = arcs
        self._cache = {}
        return self

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        try:
            return self._cache["out_adj"]
        except KeyError:
            adj = [[] for _ in range(self.n)]
            for u, v in self.arcs:
                adj[u].append(v)
            res = tuple(tuple(sorted(a)) for a in adj)
            self._cache["out_adj"] = res
            return res

    @property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        try:
            return self._cache["in_adj"]
        except KeyError:
            adj = [[] for _ in range(self.n)]
            for u, v in self.arcs:
                adj[v].append(u)
            res = tuple(tuple(sorted(a)) for a in adj)
            self._cache["in_adj"] = res
            return res

    @property
    def out_masks(self) -> list[int]:
        try:
            return self._cache["out_masks"]
        except KeyError:
            masks = [0] * self.n
            for u, v in self.arcs:
                masks[u] |= 1 << v
            self._cache["out_masks"] = masks
            return masks

    @property
    def in_masks(self) -> list[int]:
        try:
            return self._cache["in_masks"]
        except KeyError:
            masks = [0] * self.n
            for u, v in self.arcs:
                masks[v] |= 1 << u
            self._cache["in_masks"] = masks
            return masks

    @property
    def und_masks(self) -> list[int]:
        """Adjacency of the underlying undirected graph, as bitmasks."""
        try:
            return self._cache["und_masks"]
        except KeyError:
            out, inn = self.out_masks, self.in_masks
            masks = [out[i] | inn[i] for i in range(self.n)]
            self._cache["und_masks"] = masks
            return masks

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_masks[u] >> v) & 1 == 1

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={len(self.arcs)})"


@dataclass(frozen=True)
class ReachProfile:
    """Unique topological ordering of a connected acyclic local tournament.

    ``order[i]`` is the vertex at position ``i`` (0-based positions) and
    ``reach_end[i]`` is the largest position holding an out-neighbor of
    ``order[i]`` (``i`` itself when that vertex has no out-neighbor).  The
    positions ``i .. reach_end[i]`` induce an acyclic (i.e. transitive)
    tournament equal to the closed out-neighborhood of ``order[i]``.
    """

    order: tuple[int, ...]
    reach_end: tuple[int, ...]

    def position(self, v: int) -> int:
        return self.order.index(v)


# ---------------------------------------------------------------------------
# reachability / transitive-arc core


def _closure_from(out_masks: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from the ``start`` mask inside ``allowed``,
    including the start vertices themselves."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for i in _bits(frontier):
            nxt |= out_masks[i]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _transitive_scan(out_masks, keep, cap=None, collect=False):
    """Count (and optionally collect) transitive arcs of the sub-digraph
    induced on the vertex bitmask ``keep``.

    A length >= 2 path from u can never reuse the arc (u, v) itself, so
    (u, v) is transitive iff v is reachable from some other out-neighbor
    of u in the graph with u removed.  When ``cap`` is given, the scan
    stops as soon as the count exceeds it.
    """
    count = 0
    found = [] if collect else None
    for u in _bits(keep):
        outs = out_masks[u] & keep
        if outs & (outs - 1) == 0:
            continue  # fewer than two out-neighbors: no transitive arc at u
        allowed = keep ^ (1 << u)
        reach = {w: _closure_from(out_masks, 1 << w, allowed) for w in _bits(outs)}
        for v in _bits(outs):
            bv = 1 << v
            for w in _bits(outs ^ bv):
                if reach[w] & bv:
                    count += 1
                    if collect:
                        found.append(Arc(u, v))
                    break
            if cap is not None and count > cap:
                return count, found
    return count, found


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def is_transitive_arc(D: Digraph, e: tuple[int, int]) -> bool:
    """True iff head is still reachable from tail once arc ``e`` is removed."""
    e = Arc(*e)
    if e not in D.arcs:
        raise ValueError(f"arc {tuple(e)} not present in the digraph")
    u, v = e
    starts = D.out_masks[u] & ~(1 << v)
    if not starts:
        return False
    reach = _closure_from(D.out_masks, starts, _full_mask(D.n) ^ (1 << u))
    return (reach >> v) & 1 == 1


def transitive_arcs(D: Digraph) -> frozenset[Arc]:
    """All transitive arcs of ``D``."""
    _, found = _transitive_scan(D.out_masks, _full_mask(D.n), collect=True)
    return frozenset(found)


def count_transitive_arcs(D: Digraph) -> int:
    count, _ = _transitive_scan(D.out_masks, _full_mask(D.n))
    return count


def _count_induced_capped(D: Digraph, keep_mask: int, cap: int) -> int:
    """Transitive-arc count of D restricted to ``keep_mask``, early-exiting
    at ``cap + 1``.  Internal helper shared by the brute-force solvers."""
    count, _ = _transitive_scan(D.out_masks, keep_mask, cap=cap)
    return count


def enumerate_acyclic_triangles(D: Digraph) -> list[AcyclicTriangle]:
    """All canonical triples (a, b, c) with arcs (a,b), (b,c), (a,c),
    sorted lexicographically."""
    out = D.out_masks
    inn = D.in_masks
    triangles = []
    for a, c in D.arcs:
        mids = out[a] & inn[c] & ~(1 << a) & ~(1 << c)
        for b in _bits(mids):
            triangles.append(AcyclicTriangle(a, b, c))
    triangles.sort()
    return triangles


# ---------------------------------------------------------------------------
# class recognizers


def _both_masks(D: Digraph) -> list[int]:
    try:
        return D._cache["both_masks"]
    except KeyError:
        res = [m1 & m2 for m1, m2 in zip(D.out_masks, D.in_masks)]
        D._cache["both_masks"] = res
        return res


def _neighborhoods_are_tournaments(D: Digraph, nbhds: Sequence[int]) -> bool:
    und = D.und_masks
    both = _both_masks(D)
    for nbhd in nbhds:
        for a in _bits(nbhd):
            others = nbhd & ~(1 << a)
            if others & ~und[a]:
                return False  # some pair in the neighborhood is non-adjacent
            if others & both[a]:
                return False  # some pair joined in both directions
    return True


def is_tournament(D: Digraph) -> bool:
    """Exactly one arc between every vertex pair."""
    if len(D.arcs) != D.n * (D.n - 1) // 2:
        return False
    full = _full_mask(D.n)
    und = D.und_masks
    return all(und[v] == full ^ (1 << v) for v in range(D.n))


def is_in_tournament(D: Digraph) -> bool:
    """Every in-neighborhood induces a tournament."""
    return _neighborhoods_are_tournaments(D, D.in_masks)


def is_out_tournament(D: Digraph) -> bool:
    """Every out-neighborhood induces a tournament."""
    return _neighborhoods_are_tournaments(D, D.out_masks)


def is_local_tournament(D: Digraph) -> bool:
    return is_in_tournament(D) and is_out_tournament(D)


def is_connected(D: Digraph) -> bool:
    """Connectivity of the underlying undirected graph (true for n <= 1)."""
    if D.n <= 1:
        return True
    seen = _closure_from(D.und_masks, 1, _full_mask(D.n))
    return seen == _full_mask(D.n)


def connected_components(D: Digraph) -> list[tuple[int, ...]]:
    """Vertex sets of the underlying graph's components, each sorted."""
    full = _full_mask(D.n)
    remaining = full
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = _closure_from(D.und_masks, start, full)
        comp &= remaining
        comps.append(tuple(_bits(comp)))
        remaining &= ~comp
    return comps


# ---------------------------------------------------------------------------
# orderings


def topological_ordering(D: Digraph) -> tuple[int, ...]:
    """A topological ordering (smallest-id tie-break), or CycleError with a
    directed-cycle witness."""
    import heapq

    indeg = [0] * D.n
    for _, v in D.arcs:
        indeg[v] += 1
    ready = [v for v in range(D.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in D.out_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) < D.n:
        raise CycleError(_find_cycle(D, set(range(D.n)) - set(order)))
    return tuple(order)


def _find_cycle(D: Digraph, within: set) -> list[int]:
    # Each unprocessed vertex kept a positive in-degree, so walking
    # backwards through `within` must eventually revisit a vertex.
    seen_at = {}
    path = []
    v = min(within)
    while v not in seen_at:
        seen_at[v] = len(path)
        path.append(v)
        v = next(w for w in D.in_adj[v] if w in within)
    # path holds arcs path[i+1] -> path[i] plus v -> path[-1]; reversing
    # the tail yields a forward-arc cycle
    return list(reversed(path[seen_at[v]:]))


def is_acyclic(D: Digraph) -> bool:
    try:
        topological_ordering(D)
        return True
    except CycleError:
        return False


def reach_profile(D: Digraph) -> ReachProfile:
    """Unique ordering + per-position reach of a connected acyclic local
    tournament.

    Raises CycleError when cyclic, GraphClassError when not a local
    tournament, not connected, or (defensively) when no Hamiltonian path
    realizes a unique ordering.
    """
    order = topological_ordering(D)  # CycleError on cycles
    if not is_local_tournament(D):
        raise GraphClassError("digraph is not a local tournament")
    if not is_connected(D):
        raise GraphClassError("digraph is not connected")
    out = D.out_masks
    for i in range(D.n - 1):
        if not (out[order[i]] >> order[i + 1]) & 1:
            raise GraphClassError(
                "no Hamiltonian path: topological ordering is not unique"
            )
    pos = {v: i for i, v in enumerate(order)}
    reach_end = []
    for i, v in enumerate(order):
        nbrs = D.out_adj[v]
        reach_end.append(max((pos[w] for w in nbrs), default=i))
    return ReachProfile(order=order, reach_end=tuple(reach_end))


# ---------------------------------------------------------------------------
# single-connectivity


def is_singly_connected(D: Digraph) -> bool:
    """At most one directed simple path between every ordered vertex pair.

    Acyclic digraphs use a path-count DP saturating at two; cyclic ones
    fall back to per-pair DFS path enumeration with early exit, which is
    exact but intended for desk-scale inputs only.
    """
    try:
        order = topological_ordering(D)
    except CycleError:
        return _singly_connected_dfs(D)
    counts = [[0] * D.n for _ in range(D.n)]
    for u in reversed(order):
        row = counts[u]
        for w in D.out_adj[u]:
            row[w] += 1
            wrow = counts[w]
            for v in range(D.n):
                if wrow[v]:
                    row[v] += wrow[v]
            for v in range(D.n):
                if row[v] > 2:
                    row[v] = 2
        if any(c >= 2 for c in row):
            return False
    return True


def _singly_connected_dfs(D: Digraph) -> bool:
    out = D.out_adj

    def paths_to(u, target, visited, budget):
        # number of simple u->target paths, capped at `budget`
        found = 0
        for w in out[u]:
            if w == target:
                found += 1
            elif w not in visited:
                visited.add(w)
                found += paths_to(w, target, visited, budget - found)
                visited.remove(w)
            if found >= budget:
                return found
        return found

    for u in range(D.n):
        for v in range(D.n):
            if u != v and paths_to(u, v, {u}, 2) >= 2:
                return False
    return True


# ---------------------------------------------------------------------------
# independence number


def independence_number(D: Digraph, max_n: int = 30) -> int:
    """Exact independence number of the underlying undirected graph.

    Branch-and-bound; refuses inputs beyond ``max_n`` vertices, in which
    case the caller must supply a bound externally.
    """
    if D.n > max_n:
        raise CapExceededError(
            f"exact independence number capped at n={max_n}; "
            "supply alpha from an external source"
        )
    und = D.und_masks
    best = 0

    def expand(candidates: int, size: int):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        v = (candidates & -candidates).bit_length() - 1
        expand(candidates & ~(1 << v) & ~und[v], size + 1)
        expand(candidates & ~(1 << v), size)

    expand(_full_mask(D.n), 0)
    return best


# ---------------------------------------------------------------------------
# derived digraphs


def without_vertices(D: Digraph, removed: Iterable[int]) -> Digraph:
    """D with the given vertices isolated (ids preserved).

    Isolated vertices cannot lie on any path, so transitive-arc queries on
    the result agree with true vertex deletion while keeping ids stable.
    """
    rem = set(removed)
    if not rem <= set(range(D.n)):
        raise ValueError("removed vertices out of range")
    arcs = frozenset(a for a in D.arcs if a.tail not in rem and a.head not in rem)
    return Digraph._unchecked(D.n, arcs)


def induced_subgraph(D: Digraph, vertices: Iterable[int]) -> Digraph:
    """Induced subgraph with vertices relabeled to 0..|X|-1 in sorted order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < D.n):
        raise ValueError("vertices out of range")
    index = {v: i for i, v in enumerate(vs)}
    arcs = frozenset(
        Arc(index[u], index[v]) for u, v in D.arcs if u in index and v in index
    )
    return Digraph._unchecked(len(vs), arcs)


def reverse(D: Digraph) -> Digraph:
    """All arcs flipped.  Transitive arcs map to their reversals, so counts
    are preserved; in-tournaments map to out-tournaments and back."""
    return Digraph._unchecked(D.n, frozenset(Arc(v, u) for u, v in D.arcs))
