"""Zero-budget solver for in-/out-tournaments via hitting sets.

On an in-tournament (or out-tournament), a digraph is transitive-free
exactly when it contains no acyclic-triangle pattern, so deleting vertices
to destroy all transitive arcs is the same as hitting every triangle's
vertex triple.  That yields a 3-way branching solver (3^k worst case) and
the standard quadratic kernel rules for sets of size at most three.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import (
    Digraph,
    enumerate_acyclic_triangles,
    is_in_tournament,
    is_out_tournament,
)
from .errors import GraphClassError
from .oracle import Solution, solution_for


@dataclass(frozen=True)
class HittingInstance:
    """Hit every set (each of size 2 or 3) with at most ``k`` elements.

    Size-2 sets only arise from kernelization.  Sets are deduplicated and
    stored sorted for deterministic traversal.
    """

    universe: tuple[int, ...]
    sets: tuple[frozenset[int], ...]
    k: int

    @staticmethod
    def build(universe, sets, k) -> "HittingInstance":
        uni = tuple(sorted(set(universe)))
        dedup = {frozenset(s) for s in sets}
        for s in dedup:
            if not 2 <= len(s) <= 3:
                raise ValueError("hitting sets must have size 2 or 3")
            if not s <= set(uni):
                raise ValueError("hitting set outside the universe")
        ordered = tuple(sorted(dedup, key=sorted))
        return HittingInstance(universe=uni, sets=ordered, k=k)


@dataclass(frozen=True)
class KernelizedHitting:
    """Reduced instance plus bookkeeping: ``forced`` elements belong to
    every solution of the original and are already charged against its
    budget; ``infeasible`` marks budgets driven below zero."""

    instance: HittingInstance
    forced: frozenset[int]
    infeasible: bool


def to_hitting_instance(D: Digraph, k: int) -> HittingInstance:
    """Universe = vertices, one set per acyclic-triangle vertex triple."""
    if not (is_in_tournament(D) or is_out_tournament(D)):
        raise GraphClassError(
            "triangle reduction requires an in-tournament or out-tournament"
        )
    triples = {frozenset(t) for t in enumerate_acyclic_triangles(D)}
    return HittingInstance.build(range(D.n), triples, k)


def solve_hitting(inst: HittingInstance) -> frozenset[int] | None:
    """Smallest (then lexicographically smallest) hitting set within the
    budget, or None.  Branches three ways on an unhit set, depth <= k."""
    if inst.k < 0:
        return None
    sets = inst.sets
    best: list = [None]

    def search(chosen: set, idx: int):
        # invariant: every set before idx is hit by `chosen`
        unhit = None
        for i in range(idx, len(sets)):
            if not (sets[i] & chosen):
                unhit = i
                break
        if unhit is None:
            cand = tuple(sorted(chosen))
            if best[0] is None or (len(cand), cand) < (len(best[0]), best[0]):
                best[0] = cand
            return
        if len(chosen) >= inst.k:
            return
        if best[0] is not None and len(chosen) >= len(best[0]):
            return  # one more element can no longer beat or tie-improve
        for v in sorted(sets[unhit]):
            chosen.add(v)
            search(chosen, unhit + 1)
            chosen.remove(v)

    search(set(), 0)
    if best[0] is None:
        return None
    return frozenset(best[0])


def kernelize_hitting(inst: HittingInstance) -> KernelizedHitting:
    """Exhaustively applied reduction rules, sound for budgets up to k:

    (a) a pair inside more than k 3-sets must be hit, so those sets
        collapse to the pair;
    (b) an element in more than k 2-sets, or more than k^2 3-sets once
        (a) is exhausted, lies in every solution: it is forced, removed,
        and the budget decremented;
    (c) duplicates are dropped throughout.
    """
    sets = {frozenset(s) for s in inst.sets}
    k = inst.k
    forced = set()
    while k >= 0:
        # rule (a), repeated until stable: the k^2 threshold of rule (b)
        # is only sound once every pair sits in at most k 3-sets
        changed = False
        pair_hits: dict[frozenset, list] = {}
        for s in sets:
            if len(s) == 3:
                for pair in _pairs(s):
                    pair_hits.setdefault(pair, []).append(s)
        for pair, hit in pair_hits.items():
            if len(hit) > k and all(s in sets for s in hit):
                for s in hit:
                    sets.discard(s)
                sets.add(pair)
                changed = True
        if changed:
            continue
        # rule (b)
        two_count: dict[int, int] = {}
        three_count: dict[int, int] = {}
        for s in sets:
            counter = two_count if len(s) == 2 else three_count
            for v in s:
                counter[v] = counter.get(v, 0) + 1
        forceable = sorted(
            v
            for v in set(two_count) | set(three_count)
            if two_count.get(v, 0) > k or three_count.get(v, 0) > k * k
        )
        if not forceable:
            break
        v = forceable[0]
        forced.add(v)
        sets = {s for s in sets if v not in s}
        k -= 1
    reduced = HittingInstance.build(inst.universe, sets, max(k, 0))
    return KernelizedHitting(
        instance=reduced, forced=frozenset(forced), infeasible=k < 0
    )


def _pairs(s):
    a, b, c = sorted(s)
    return (frozenset((a, b)), frozenset((a, c)), frozenset((b, c)))


def tvd_in_tournament(D: Digraph, k: int) -> Solution | None:
    """Minimum transitive-free deletion set of size <= k on an
    in-/out-tournament, or None when the budget is insufficient."""
    base = to_hitting_instance(D, k)
    reduced = kernelize_hitting(base)
    if reduced.infeasible:
        return None
    hit = solve_hitting(reduced.instance)
    if hit is None:
        return None
    solution = solution_for(D, reduced.forced | hit)
    assert not solution.remaining_transitive
    return solution
