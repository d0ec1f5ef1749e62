"""Seeded, reproducible generators for the digraph classes the solvers target.

All randomness flows through ``random.Random(seed)`` (the stdlib Mersenne
Twister), so identical parameters always produce identical arc sets within
one Python version; cross-language bit-equality is not promised.

Connected acyclic local tournaments are parameterized exactly by their
*reach functions*: in the unique topological ordering, the out-neighborhood
of the vertex at position ``i`` is the contiguous run of positions
``i+1 .. r[i]``, and ``r`` is nondecreasing.  Enumerating nondecreasing
reach functions therefore enumerates this class exhaustively, which the
test suite uses for small-n sweeps.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .digraph import Arc, Digraph, is_in_tournament, is_out_tournament
from .errors import GeneratorBudgetError

REJECTION_MAX_N = 14
_REJECTION_ATTEMPTS = 5000


@dataclass(frozen=True)
class ReachFunction:
    """Per ordering position i (0-based), the last position r[i] holding an
    out-neighbor; nondecreasing, with i <= r[i] <= n-1.  Connectivity of
    the generated digraph is equivalent to r[i] >= i+1 for every i < n-1.
    """

    r: tuple[int, ...]

    def __post_init__(self):
        n = len(self.r)
        for i, ri in enumerate(self.r):
            if not i <= ri <= n - 1:
                raise ValueError(f"r[{i}]={ri} outside [{i}, {n - 1}]")
            if i and ri < self.r[i - 1]:
                raise ValueError("reach function must be nondecreasing")

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def connected(self) -> bool:
        return all(self.r[i] >= i + 1 for i in range(self.n - 1))


def gen_acyclic_local_tournament(reach: ReachFunction) -> Digraph:
    """Arcs (i, j) exactly for i < j <= r[i]: a (connected, when the reach
    function says so) acyclic local tournament with the identity ordering."""
    arcs = frozenset(
        Arc(i, j) for i in range(reach.n) for j in range(i + 1, reach.r[i] + 1)
    )
    return Digraph._unchecked(reach.n, arcs)


def all_reach_functions(n: int, connected: bool = True) -> Iterator[ReachFunction]:
    """Every valid reach function on n positions, lexicographically."""
    if n == 0:
        yield ReachFunction(r=())
        return
    lo = 1 if connected else 0

    def rec(prefix):
        i = len(prefix)
        if i == n - 1:
            yield ReachFunction(r=prefix + (n - 1,))
            return
        start = max(prefix[-1] if prefix else 0, i + lo)
        for ri in range(start, n):
            yield from rec(prefix + (ri,))

    if n == 1:
        yield ReachFunction(r=(0,))
        return
    yield from rec(())


def random_reach_function(
    n: int, seed: int, max_span: int | None = None
) -> ReachFunction:
    """A random nondecreasing reach function for a connected instance.
    ``max_span`` caps r[i] - i, keeping large instances sparse."""
    rng = random.Random(seed)
    r = []
    prev = 0
    for i in range(n - 1):
        hi = n - 1 if max_span is None else min(n - 1, i + max_span)
        lo = max(prev, i + 1)
        r.append(rng.randint(lo, max(lo, hi)))
        prev = r[-1]
    r.append(n - 1)
    return ReachFunction(r=tuple(r[:n]))


def gen_tournament(n: int, seed: int) -> Digraph:
    """Each unordered pair oriented by a seeded coin flip."""
    rng = random.Random(seed)
    arcs = frozenset(
        Arc(u, v) if rng.getrandbits(1) else Arc(v, u)
        for u, v in itertools.combinations(range(n), 2)
    )
    return Digraph._unchecked(n, arcs)


def gen_dag(n: int, p: float, seed: int) -> Digraph:
    """Random vertex order; each forward pair becomes an arc with
    probability p.  Acyclic by construction."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                arcs.add(Arc(order[i], order[j]))
    return Digraph._unchecked(n, frozenset(arcs))


def _gen_by_rejection(n, seed, p, recognizer, label):
    if n > REJECTION_MAX_N:
        raise GeneratorBudgetError(
            f"rejection sampling capped at n={REJECTION_MAX_N}; "
            "use structured mode for larger graphs"
        )
    rng = random.Random(seed)
    slots = [Arc(u, v) for u in range(n) for v in range(n) if u != v]
    for _ in range(_REJECTION_ATTEMPTS):
        arcs = frozenset(a for a in slots if rng.random() < p)
        D = Digraph._unchecked(n, arcs)
        if recognizer(D):
            return D
    raise GeneratorBudgetError(
        f"no {label} found in {_REJECTION_ATTEMPTS} samples (n={n}, p={p})"
    )


def _gen_structured(n, seed, recognizer):
    # Start from a random connected acyclic local tournament (a member of
    # both classes), then add backward arcs wherever the predicate survives.
    rng = random.Random(seed)
    base = gen_acyclic_local_tournament(random_reach_function(n, rng.randrange(2**30)))
    arcs = set(base.arcs)
    candidates = [
        Arc(j, i) for i in range(n) for j in range(i + 1, n) if Arc(i, j) not in arcs
    ]
    rng.shuffle(candidates)
    D = Digraph._unchecked(n, frozenset(arcs))
    for arc in candidates:
        trial = Digraph._unchecked(n, frozenset(arcs | {arc}))
        if recognizer(trial):
            arcs.add(arc)
            D = trial
    return D


def _auto_p(n: int) -> float:
    # keep expected neighborhood size near one so tournaments-in-every-
    # neighborhood stay likely enough for rejection to land
    return min(0.3, 1.2 / max(n, 1))


def gen_in_tournament(
    n: int, seed: int, p: float | None = None, structured: bool = False
) -> Digraph:
    """A recognizer-validated in-tournament.

    Default mode rejection-samples random digraphs with arc probability
    ``p`` (capped at small n; defaults to a density that keeps acceptance
    likely); structured mode perturbs a random acyclic local tournament
    with backward arcs and works at any size.
    """
    if structured:
        return _gen_structured(n, seed, is_in_tournament)
    return _gen_by_rejection(n, seed, p if p is not None else _auto_p(n),
                             is_in_tournament, "in-tournament")


def gen_out_tournament(
    n: int, seed: int, p: float | None = None, structured: bool = False
) -> Digraph:
    """Out-tournament counterpart of :func:`gen_in_tournament`."""
    if structured:
        return _gen_structured(n, seed, is_out_tournament)
    return _gen_by_rejection(n, seed, p if p is not None else _auto_p(n),
                             is_out_tournament, "out-tournament")
