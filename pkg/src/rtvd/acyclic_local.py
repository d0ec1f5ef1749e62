"""Exact minimum deletion on connected acyclic local tournaments (ALTs).

Structure used throughout: an ALT has a unique topological ordering in
which every out-neighborhood is a contiguous run of positions inducing a
transitive tournament (see :func:`rtvd.digraph.reach_profile`).  Writing
``r[i]`` for the last such position of the vertex at position ``i``, two
consequences drive everything here:

* ``r`` is nondecreasing, and an arc ``(i, j)`` exists iff ``j <= r[i]``;
* for any retained position set ``K``, a retained arc ``(i, j)`` is
  transitive in the retained graph iff some retained position lies
  strictly between ``i`` and ``j``.  In particular the retained graph is
  transitive-free iff no triple ``a < b < c`` in ``K`` has ``c <= r[a]``.

The zero-budget core (:func:`min_tvd_alt`) maximizes the retained set by a
DP over (second-last, last) retained positions; monotone ``r`` collapses
each transition to a prefix maximum, so the whole table fills in O(n^2)
against the O(n^3) contract.  There is always an optimum retaining both
the first and last vertex of the ordering (an optimum deleting an
endpoint can swap it for the surviving neighbor closest to it), so the
DP pins both, which also lets the relaxed pipeline protect interval
boundaries.

The relaxed solver (:func:`min_rtvd_alt`) guesses which transitive arcs F
survive and which single interior vertex per guessed arc survives with
them, force-deletes everything those guesses determine, splits the rest
into protected-boundary intervals solved by the zero-budget core, and
keeps the best validated candidate over all guesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraph import (
    Arc,
    Digraph,
    ReachProfile,
    induced_subgraph,
    reach_profile,
    transitive_arcs,
)
from .oracle import Solution

_NEG = -(1 << 30)


# ---------------------------------------------------------------------------
# zero-budget core: maximum legal retained set


def _max_kept_small(r):
    """Pure-python retained-set DP; positions 0 and n-1 force-kept."""
    n = len(r)
    if n <= 2:
        return list(range(n))
    best = [[_NEG] * n for _ in range(n)]
    parent = [[-2] * n for _ in range(n)]
    for b in range(1, n):
        best[0][b] = 2
        parent[0][b] = -1
    for b in range(1, n - 1):
        pm = [_NEG] * b
        parg = [-2] * b
        cur, curi = _NEG, -2
        for a in range(b):
            if best[a][b] > cur:
                cur, curi = best[a][b], a
            pm[a] = cur
            parg[a] = curi
        rowb = best[b]
        parb = parent[b]
        ptr = 0  # a-indices with r[a] < c, advanced as c grows (r nondecreasing)
        for c in range(b + 1, n):
            while ptr < b and r[ptr] < c:
                ptr += 1
            if ptr and pm[ptr - 1] + 1 > rowb[c]:
                rowb[c] = pm[ptr - 1] + 1
                parb[c] = parg[ptr - 1]
    a_star = max(range(n - 1), key=lambda a: best[a][n - 1])
    kept = [n - 1, a_star]
    a, b = a_star, n - 1
    while parent[a][b] != -1:
        p = parent[a][b]
        kept.append(p)
        a, b = p, a
    kept.reverse()
    return kept


def _max_kept_numpy(r):
    import numpy as np

    n = len(r)
    rarr = np.asarray(r, dtype=np.int32)
    best = np.full((n, n), _NEG, dtype=np.int32)
    parent = np.full((n, n), -2, dtype=np.int32)
    best[0, 1:] = 2
    parent[0, 1:] = -1
    for b in range(1, n - 1):
        col = best[:b, b].astype(np.int64)
        pm = np.maximum.accumulate(col)
        idx = np.arange(b)
        parg = np.maximum.accumulate(np.where(col == pm, idx, -1))
        cvals = np.arange(b + 1, n)
        cnt = np.searchsorted(rarr[:b], cvals, side="left")
        ok = cnt > 0
        last = np.clip(cnt - 1, 0, b - 1)
        vals = np.where(ok, pm[last] + 1, _NEG).astype(np.int32)
        pars = np.where(ok, parg[last], -2).astype(np.int32)
        better = vals > best[b, b + 1:]
        best[b, b + 1:][better] = vals[better]
        parent[b, b + 1:][better] = pars[better]
    a_star = int(np.argmax(best[: n - 1, n - 1]))
    kept = [n - 1, a_star]
    a, b = a_star, n - 1
    while parent[a][b] != -1:
        p = int(parent[a][b])
        kept.append(p)
        a, b = p, a
    kept.reverse()
    return kept


def _max_kept_positions(r):
    if len(r) <= 128:
        return _max_kept_small(r)
    return _max_kept_numpy(r)


def _kept_transitive_positions(r, kept):
    """Transitive arcs of the graph retained on sorted positions ``kept``,
    as position pairs.  A retained arc (i, j) is transitive iff a retained
    position sits strictly between i and j."""
    out = []
    for x in range(len(kept)):
        rx = r[kept[x]]
        for z in range(x + 2, len(kept)):
            if kept[z] > rx:
                break
            out.append((kept[x], kept[z]))
    return out


def min_tvd_alt(D: Digraph) -> Solution:
    """Minimum deletions making a connected ALT transitive-free.

    The first and last vertices of the unique ordering are never deleted.
    Preconditions (connected acyclic local tournament) are enforced by
    :func:`reach_profile` and its errors propagate.
    """
    rp = reach_profile(D)
    kept = _max_kept_positions(rp.reach_end)
    kept_ids = {rp.order[i] for i in kept}
    deleted = frozenset(range(D.n)) - kept_ids
    assert not _kept_transitive_positions(rp.reach_end, kept)
    return Solution(deleted=deleted, remaining_transitive=())


# ---------------------------------------------------------------------------
# relaxed pipeline


@dataclass(frozen=True)
class ExtInstance:
    """Deletion problem with protected vertices and allowed transitive arcs.

    ``protected`` may not be deleted; after deletion, every surviving
    transitive arc must belong to ``allowed`` (whose endpoints all lie in
    ``protected``).  Feasibility is not guaranteed: solvers return None
    for hopeless instances.
    """

    digraph: Digraph
    protected: frozenset[int]
    allowed: frozenset[Arc]

    def __post_init__(self):
        object.__setattr__(self, "protected", frozenset(self.protected))
        object.__setattr__(self, "allowed", frozenset(Arc(*a) for a in self.allowed))
        if not self.protected <= set(range(self.digraph.n)):
            raise ValueError("protected vertices out of range")
        for arc in self.allowed:
            if arc not in self.digraph.arcs:
                raise ValueError(f"allowed arc {tuple(arc)} not in the digraph")
            if arc.tail not in self.protected or arc.head not in self.protected:
                raise ValueError("allowed arcs must join protected vertices")
        inner = sorted(self.protected)
        sub = induced_subgraph(self.digraph, inner)
        back = {i: v for i, v in enumerate(inner)}
        for u, v in transitive_arcs(sub):
            if Arc(back[u], back[v]) not in self.allowed:
                raise ValueError(
                    "protected set carries a transitive arc outside the allowed set"
                )


@dataclass(frozen=True)
class IntervalSubinstance:
    """Ordering positions lo..hi whose interior avoids protected vertices;
    the boundary vertices are force-kept by the zero-budget core."""

    lo: int
    hi: int
    kept_forced: tuple[int, ...]


def _forced_positions(n, r, w_pos, f_pos):
    """Positions outside the protected set that no consistent solution may
    retain (the 'necessary vertices' of the guess)."""
    forced = set()
    w_sorted = sorted(w_pos)
    f_incident = {p for arc in f_pos for p in arc}
    # Interior of each allowed arc: at most one survivor, already guessed
    # into the protected set, so every other interior vertex must go.
    for i, j in f_pos:
        for t in range(i + 1, j):
            if t not in w_pos:
                forced.add(t)
    # Any unprotected vertex completing a triangle with two protected
    # vertices whose transitive arc is not allowed must go.
    for w1, w2 in itertools.combinations(w_sorted, 2):
        for t in range(n):
            if t in w_pos:
                continue
            a, b, c = sorted((w1, w2, t))
            if c <= r[a] and (a, c) not in f_pos:
                forced.add(t)
    # Patterns around a protected vertex untouched by allowed arcs: keeping
    # t would complete a forbidden transitive arc at that vertex.
    for p in w_sorted:
        if p in f_incident:
            continue
        for w in w_sorted:
            if w == p:
                continue
            if p < w and w <= r[p]:
                forced.update(
                    t for t in range(p + 1, w) if t not in w_pos
                )
            elif w < p and p <= r[w]:
                forced.update(
                    t for t in range(w + 1, p) if t not in w_pos
                )
    return forced


def _interval_bounds(n, w_sorted):
    if n == 0:
        return []
    if not w_sorted:
        return [(0, n - 1)]
    bounds = []
    if w_sorted[0] > 0:
        bounds.append((0, w_sorted[0]))
    for a, b in zip(w_sorted, w_sorted[1:]):
        bounds.append((a, b))
    if w_sorted[-1] < n - 1:
        bounds.append((w_sorted[-1], n - 1))
    return bounds


def _runs(positions, r):
    """Split sorted positions into maximal runs connected in the retained
    graph: consecutive retained positions x, y belong together iff y <= r[x]
    (no earlier position can reach past a break, since r is monotone)."""
    runs = []
    cur = []
    for t in positions:
        if cur and t > r[cur[-1]]:
            runs.append(cur)
            cur = []
        cur.append(t)
    if cur:
        runs.append(cur)
    return runs


def _solve_run(run, r, memo):
    key = tuple(run)
    try:
        return memo[key]
    except KeyError:
        pass
    # local reach: last run-index reachable from each run position
    local_r = []
    ptr = 0
    for idx, t in enumerate(run):
        ptr = max(ptr, idx)
        while ptr + 1 < len(run) and run[ptr + 1] <= r[t]:
            ptr += 1
        local_r.append(ptr)
    kept_local = _max_kept_positions(local_r)
    kept = set(run[i] for i in kept_local)
    deleted = tuple(t for t in run if t not in kept)
    memo[key] = deleted
    return deleted


def _solve_ext_positions(n, r, w_pos, f_pos, memo):
    """Candidate deletion set (positions) for one guess, or None when the
    recount shows a surviving transitive arc outside the allowed set."""
    forced = _forced_positions(n, r, w_pos, f_pos)
    deleted = set(forced)
    for lo, hi in _interval_bounds(n, sorted(w_pos)):
        segment = [t for t in range(lo, hi + 1) if t not in forced]
        for run in _runs(segment, r):
            deleted.update(_solve_run(run, r, memo))
    if deleted & w_pos:
        return None  # defensive: protected vertices must survive
    kept = [t for t in range(n) if t not in deleted]
    residual = _kept_transitive_positions(r, kept)
    if any(arc not in f_pos for arc in residual):
        return None
    return deleted, residual


def compute_forced_set(ext: ExtInstance) -> frozenset[int]:
    """Vertices every solution consistent with the guess must delete."""
    rp = reach_profile(ext.digraph)
    pos = {v: i for i, v in enumerate(rp.order)}
    w_pos = {pos[v] for v in ext.protected}
    f_pos = {(pos[a.tail], pos[a.head]) for a in ext.allowed}
    forced = _forced_positions(ext.digraph.n, rp.reach_end, w_pos, f_pos)
    return frozenset(rp.order[t] for t in forced)


def split_intervals(ext: ExtInstance, forced: frozenset[int]) -> list[IntervalSubinstance]:
    """Maximal protected-free intervals of the ordering (boundaries kept)."""
    rp = reach_profile(ext.digraph)
    pos = {v: i for i, v in enumerate(rp.order)}
    w_sorted = sorted(pos[v] for v in ext.protected)
    return [
        IntervalSubinstance(lo=lo, hi=hi, kept_forced=(rp.order[lo], rp.order[hi]))
        for lo, hi in _interval_bounds(ext.digraph.n, w_sorted)
    ]


def solve_ext(ext: ExtInstance) -> Solution | None:
    """Solve one guess: forced deletions plus per-interval zero-budget
    solves, validated by recounting the surviving transitive arcs."""
    rp = reach_profile(ext.digraph)
    pos = {v: i for i, v in enumerate(rp.order)}
    w_pos = {pos[v] for v in ext.protected}
    f_pos = {(pos[a.tail], pos[a.head]) for a in ext.allowed}
    result = _solve_ext_positions(ext.digraph.n, rp.reach_end, w_pos, f_pos, {})
    if result is None:
        return None
    deleted, residual = result
    return _solution_from_positions(rp, deleted, residual)


def _solution_from_positions(rp: ReachProfile, deleted, residual) -> Solution:
    ids = frozenset(rp.order[t] for t in deleted)
    cert = tuple(sorted(Arc(rp.order[i], rp.order[j]) for i, j in residual))
    return Solution(deleted=ids, remaining_transitive=cert)


def min_rtvd_alt(D: Digraph, ell: int) -> Solution:
    """Minimum deletions leaving at most ``ell`` transitive arcs on a
    connected ALT, by exhaustive guessing of the surviving arcs.

    Guesses range over subsets F of the transitive arcs of D (an arc
    transitive after deletions was already transitive in D) and, per
    guessed arc, over which single interior vertex survives alongside it.
    The degenerate guess (no survivors) always yields a valid candidate,
    so a solution is always returned; optimality comes from exhausting
    the guesses the hypothetical optimum is consistent with.
    """
    if ell < 0:
        raise ValueError("ell must be non-negative")
    rp = reach_profile(D)
    n, r = D.n, rp.reach_end
    trans_pos = [
        (i, j) for i in range(n) for j in range(i + 2, r[i] + 1)
    ]  # exactly the transitive arcs, in position space
    if len(trans_pos) <= ell:
        return _solution_from_positions(rp, (), trans_pos)

    memo = {}
    best = None  # ((size, sorted deleted ids), deleted positions, residual)
    for fsize in range(ell + 1):
        for f_guess in itertools.combinations(trans_pos, fsize):
            f_pos = set(f_guess)
            v_f = {p for arc in f_pos for p in arc}
            options = [
                [None] + [t for t in range(i + 1, j) if t not in v_f]
                for i, j in f_guess
            ]
            seen_x = set()
            for choice in itertools.product(*options):
                x = frozenset(t for t in choice if t is not None)
                if len(x) > ell or x in seen_x:
                    continue
                seen_x.add(x)
                w_pos = v_f | x
                if not _guess_consistent(r, w_pos, f_pos):
                    continue
                result = _solve_ext_positions(n, r, w_pos, f_pos, memo)
                if result is None:
                    continue
                deleted, residual = result
                key = (len(deleted), tuple(sorted(rp.order[t] for t in deleted)))
                if best is None or key < best[0]:
                    best = (key, deleted, residual)
    assert best is not None  # the empty guess always validates
    return _solution_from_positions(rp, best[1], best[2])


def _guess_consistent(r, w_pos, f_pos):
    # Every transitive arc of the graph induced on the guessed survivors
    # must itself be one of the guessed arcs.
    w = sorted(w_pos)
    for x in range(len(w)):
        rx = r[w[x]]
        for z in range(x + 2, len(w)):
            if w[z] > rx:
                break
            if (w[x], w[z]) not in f_pos:
                return False
    return True
