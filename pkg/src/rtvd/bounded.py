"""Exact minimum deletion on tournaments and bounded-independence digraphs.

Both solvers rest on the same fact: a digraph from the relevant class that
keeps too many vertices necessarily carries more than the allowed number
of transitive arcs, so the *retained* set of an optimal solution has
bounded size.  Enumerating retained sets from that cap downward and
returning the first feasible one is therefore exact, and polynomial for
fixed budgets.

For tournaments the cap combines two bounds: any tournament on 4(t+1)
vertices has more than t transitive arcs (delete-down from the 4-vertex
base case), and any tournament on 4*sqrt(t) vertices has at least t.
The square-root bound is applied at t = ell + 1 and rounded up, which is
safe under either reading of the threshold's rounding.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .digraph import Digraph, _count_induced_capped, _full_mask, is_tournament
from .errors import GraphClassError
from .oracle import Solution, solution_for


@dataclass(frozen=True)
class RetainBound:
    """Largest size a retained vertex set with at most ``ell`` transitive
    arcs can have, for the class at hand."""

    cap: int


def tournament_retain_cap(ell: int) -> RetainBound:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    return RetainBound(cap=min(4 * ell + 3, math.ceil(4 * math.sqrt(ell + 1))))


def alpha_retain_cap(alpha: int, ell: int) -> RetainBound:
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    return RetainBound(cap=alpha * (2 * alpha + 3) * (ell + 1) + ell)


def _solve_by_retained_core(D: Digraph, ell: int, cap: int) -> Solution:
    full = _full_mask(D.n)
    if _count_induced_capped(D, full, ell) <= ell:
        return solution_for(D, ())
    for r in range(min(D.n, cap), -1, -1):
        for retained in itertools.combinations(range(D.n), r):
            keep = 0
            for v in retained:
                keep |= 1 << v
            if _count_induced_capped(D, keep, ell) <= ell:
                deleted = [v for v in range(D.n) if not (keep >> v) & 1]
                return solution_for(D, deleted)
    raise AssertionError("unreachable: the empty retained set is always feasible")


def solve_tournament(D: Digraph, ell: int) -> Solution:
    """Minimum deletion set on a tournament, by retained-core enumeration.

    Checks D itself first, then retained sets of size cap, cap-1, ... with
    lexicographic tie-break on the retained set.
    """
    if not is_tournament(D):
        raise GraphClassError("solve_tournament requires a tournament")
    return _solve_by_retained_core(D, ell, tournament_retain_cap(ell).cap)


def solve_alpha_bounded(D: Digraph, alpha: int, ell: int) -> Solution:
    """Minimum deletion set on a digraph whose underlying independence
    number is at most ``alpha`` (caller-asserted).

    An ``alpha`` that overshoots the true independence number only slows
    the search down; an undershoot voids the optimality guarantee, though
    the returned set is still feasible (the empty retained set always is).
    """
    return _solve_by_retained_core(D, ell, alpha_retain_cap(alpha, ell).cap)
