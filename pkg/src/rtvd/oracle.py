"""Ground-truth brute-force solvers and exhaustive enumerators.

Everything here trades speed for trustworthiness: subsets are enumerated
exhaustively in a fixed order (by cardinality, then lexicographically) so
witnesses are deterministic, and size caps fail loudly instead of silently
degrading.  Every specialized solver in the package is tested against
these oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraph import (
    Arc,
    Digraph,
    _count_induced_capped,
    _full_mask,
    transitive_arcs,
    without_vertices,
)
from .errors import CapExceededError

ORACLE_MAX_N = 14
ALL_TOURNAMENTS_MAX_N = 6
ALL_DIGRAPHS_MAX_N = 4


@dataclass(frozen=True)
class Instance:
    """A digraph with a deletion budget ``k`` and a transitive-arc budget
    ``ell``."""

    digraph: Digraph
    k: int
    ell: int

    def __post_init__(self):
        if self.k < 0 or self.ell < 0:
            raise ValueError("budgets must be non-negative")
        if self.k > self.digraph.n:
            raise ValueError("deletion budget exceeds vertex count")


@dataclass(frozen=True)
class Solution:
    """A deleted vertex set plus the certificate of what it leaves behind."""

    deleted: frozenset[int]
    remaining_transitive: tuple[Arc, ...]

    @property
    def size(self) -> int:
        return len(self.deleted)


def solution_for(D: Digraph, deleted) -> Solution:
    """Build a Solution with its certificate recomputed from scratch."""
    deleted = frozenset(deleted)
    cert = tuple(sorted(transitive_arcs(without_vertices(D, deleted))))
    return Solution(deleted=deleted, remaining_transitive=cert)


def verify_solution(inst: Instance, deleted) -> tuple[bool, tuple[Arc, ...]]:
    """Check a candidate deletion set against an instance.

    Returns (ok, certificate) where the certificate lists the transitive
    arcs remaining after deletion.  ``ok`` requires both budgets to hold.
    """
    deleted = frozenset(deleted)
    if not deleted <= set(range(inst.digraph.n)):
        raise ValueError("deleted set contains unknown vertices")
    cert = tuple(sorted(transitive_arcs(without_vertices(inst.digraph, deleted))))
    ok = len(deleted) <= inst.k and len(cert) <= inst.ell
    return ok, cert


def _subsets_by_size(universe, max_size=None):
    max_size = len(universe) if max_size is None else max_size
    for r in range(max_size + 1):
        yield from itertools.combinations(universe, r)


def min_rtvd_oracle(D: Digraph, ell: int, max_n: int = ORACLE_MAX_N) -> Solution:
    """Minimum-size deletion set leaving at most ``ell`` transitive arcs,
    by exhaustive subset enumeration (smallest size, then lexicographic)."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if D.n > max_n:
        raise CapExceededError(
            f"oracle capped at n={max_n} (got n={D.n}); raise max_n explicitly"
        )
    full = _full_mask(D.n)
    for deleted in _subsets_by_size(range(D.n)):
        keep = full
        for v in deleted:
            keep &= ~(1 << v)
        if _count_induced_capped(D, keep, ell) <= ell:
            return solution_for(D, deleted)
    raise AssertionError("unreachable: deleting all vertices is always feasible")


def decide_rtvd_oracle(
    inst: Instance, max_n: int = ORACLE_MAX_N
) -> tuple[bool, Solution | None]:
    """Decision version: is there a deletion set within both budgets?

    Enumerates deletion sets only up to size k (same order as the
    optimizer), so the witness, when one exists, is the optimizer's."""
    D = inst.digraph
    if D.n > max_n:
        raise CapExceededError(
            f"oracle capped at n={max_n} (got n={D.n}); raise max_n explicitly"
        )
    full = _full_mask(D.n)
    for deleted in _subsets_by_size(range(D.n), max_size=min(inst.k, D.n)):
        keep = full
        for v in deleted:
            keep &= ~(1 << v)
        if _count_induced_capped(D, keep, inst.ell) <= inst.ell:
            return True, solution_for(D, deleted)
    return False, None


# ---------------------------------------------------------------------------
# exhaustive enumerators


def all_tournaments(n: int, max_n: int = ALL_TOURNAMENTS_MAX_N):
    """Every labeled tournament on n vertices, exactly once."""
    if n > max_n:
        raise CapExceededError(f"all_tournaments capped at n={max_n}")
    pairs = list(itertools.combinations(range(n), 2))
    for orientation in itertools.product((False, True), repeat=len(pairs)):
        arcs = frozenset(
            Arc(u, v) if fwd else Arc(v, u)
            for (u, v), fwd in zip(pairs, orientation)
        )
        yield Digraph._unchecked(n, arcs)


def all_digraphs(n: int, max_n: int = ALL_DIGRAPHS_MAX_N):
    """Every labeled simple digraph on n vertices (each of the n(n-1)
    ordered pairs independently present), exactly once."""
    if n > max_n:
        raise CapExceededError(f"all_digraphs capped at n={max_n}")
    slots = [Arc(u, v) for u in range(n) for v in range(n) if u != v]
    for chosen in itertools.product((False, True), repeat=len(slots)):
        arcs = frozenset(itertools.compress(slots, chosen))
        yield Digraph._unchecked(n, arcs)
