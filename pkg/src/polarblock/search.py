"""Exact combinatorial search over generator incidence.

One branch-and-bound engine drives every exact question: minimum
generator blocking sets (hitting sets on the meets relation), complete
enumeration of minimal blocking sets up to a size bound, exact minimum
set covers, smallest maximal partial spreads (hitting sets with pairwise
disjoint members) and the plane blocking-set oracle.

The engine is deterministic: it branches on an uncovered row with the
fewest remaining hitters (lexicographic tie-break), visits candidates in
index order and partitions the space by banning earlier siblings, so node
counts and witness order are reproducible.  The lower bound is a greedy
packing of uncovered rows with pairwise disjoint hitter sets.  Budgets
(node count and wall time) make incompleteness explicit, never silent.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations

from .gf import field_of_order, is_prime
from .projective import enumerate_pg_points, nullspace
from .spaces import PolarSpace
from . import analysis

DEFAULT_BUDGET_NODES = 10 ** 8


def default_budget_secs() -> float:
    return float(os.environ.get("POLARBLOCK_BUDGET_SECS", 600.0))


@dataclass
class SearchResult:
    optimum: int | None
    witnesses: list[tuple[int, ...]]
    complete: bool
    nodes: int
    seconds: float

    def to_json(self) -> dict:
        return {
            "optimum": self.optimum,
            "complete": self.complete,
            "witnesses": [list(w) for w in self.witnesses],
            "nodes": self.nodes,
            "seconds": self.seconds,
        }


@dataclass
class EnumerationResult:
    sets: list[tuple[int, ...]]
    complete: bool
    nodes: int
    seconds: float


class _BudgetStop(Exception):
    pass


def _run_engine(rows, universe_mask: int, *, max_size: int, mode: str,
                conflicts=None, forbid=None, forbid_through=None,
                first_only: bool = False,
                budget_nodes: int = DEFAULT_BUDGET_NODES,
                budget_secs: float | None = None):
    """Core exact search.

    rows: bitmask per constraint row (candidates hitting that row).
    mode 'min': optimum + all optimum-size hitting sets of size <= max_size.
    mode 'leaves': every leaf hitting set of size <= max_size (a superset
    of all inclusion-minimal ones).
    conflicts[c]: candidates unusable once c is chosen (disjointness).
    forbid/forbid_through: completed chosen sets must not contain any
    forbid mask (checked incrementally through the candidate index).
    """
    if budget_secs is None:
        budget_secs = default_budget_secs()
    deadline = time.monotonic() + budget_secs
    t0 = time.monotonic()
    state = {"nodes": 0, "best": max_size, "done": False}
    sols: list[tuple[int, ...]] = []
    rows = list(rows)

    def rec(chosen, chosen_mask, allowed, uncovered):
        state["nodes"] += 1
        if state["nodes"] > budget_nodes:
            raise _BudgetStop
        if state["nodes"] % 2048 == 0 and time.monotonic() > deadline:
            raise _BudgetStop
        if not uncovered:
            size = len(chosen)
            if mode == "min":
                if size < state["best"]:
                    state["best"] = size
                    sols.clear()
                    sols.append(tuple(sorted(chosen)))
                elif size == state["best"]:
                    sols.append(tuple(sorted(chosen)))
            else:
                sols.append(tuple(sorted(chosen)))
            if first_only:
                state["done"] = True
            return
        limit = state["best"] if mode == "min" else max_size
        rem = limit - len(chosen)
        if rem <= 0:
            return
        # row selection: fewest remaining hitters, first index breaks ties
        best_row = -1
        best_cand = 0
        best_count = None
        for ri in uncovered:
            ra = rows[ri] & allowed
            if ra == 0:
                return
            c = ra.bit_count()
            if best_count is None or c < best_count:
                best_count = c
                best_cand = ra
                best_row = ri
                if c == 1:
                    break
        # greedy packing bound: rows with pairwise disjoint hitter sets
        lb = 0
        acc = 0
        for ri in uncovered:
            ra = rows[ri] & allowed
            if ra & acc == 0:
                lb += 1
                if lb > rem:
                    return
                acc |= ra
        cand = best_cand
        local_allowed = allowed
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            new_mask = chosen_mask | low
            if forbid_through is not None:
                full = False
                for fi in forbid_through[c]:
                    if forbid[fi] & ~new_mask == 0:
                        full = True
                        break
                if full:
                    local_allowed &= ~low
                    continue
            child_allowed = local_allowed & ~low
            if conflicts is not None:
                child_allowed &= ~conflicts[c]
            chosen.append(c)
            rec(chosen, new_mask,
                child_allowed,
                [ri for ri in uncovered if not (rows[ri] >> c) & 1])
            chosen.pop()
            if state["done"]:
                return
            local_allowed &= ~low

    complete = True
    try:
        rec([], 0, universe_mask, list(range(len(rows))))
    except _BudgetStop:
        complete = False
    seconds = time.monotonic() - t0
    sols.sort()
    return sols, complete, state["nodes"], seconds


def _lex_pencil(space: PolarSpace) -> tuple[int, ...]:
    """The pencil through the (r-2)-subspace spanned by the first r-1 rows
    of the lexicographically least generator; a guaranteed blocking set."""
    from .projective import canonicalize

    g0 = space.generators[0]
    if space.rank == 1:
        return tuple(range(space.num_generators))
    v = canonicalize(space.field, space.n, g0.rows[: space.rank - 1])
    thru = space.generators_through(v)
    return tuple(sorted(thru))


def min_blocking(space: PolarSpace, upper_bound: int | None = None,
                 budget_nodes: int = DEFAULT_BUDGET_NODES,
                 budget_secs: float | None = None) -> SearchResult:
    """Exact minimum generator blocking sets: optimum size and every
    minimum-size set, certified by exhausted branch-and-bound."""
    seed = None
    if upper_bound is None:
        seed = _lex_pencil(space)
        if not analysis.is_blocking(space, seed):
            raise AssertionError("pencil seed is not blocking")
        upper_bound = len(seed)
    sols, complete, nodes, seconds = _run_engine(
        space.meets, space.all_gens_mask, max_size=upper_bound, mode="min",
        budget_nodes=budget_nodes, budget_secs=budget_secs)
    optimum = len(sols[0]) if sols else None
    if not complete and optimum is None and seed is not None:
        # nothing found before the budget: the seed is the known upper bound
        optimum = len(seed)
        sols = [tuple(seed)]
    return SearchResult(optimum, sols, complete, nodes, seconds)


def minimum_minimal_blocking_sets(space: PolarSpace,
                                  result: SearchResult) -> list[tuple[int, ...]]:
    """Filter a min_blocking result to the sets that are minimal (all
    members essential)."""
    return [w for w in result.witnesses if analysis.is_minimal(space, w)]


def enumerate_minimal(space: PolarSpace, max_size: int,
                      budget_nodes: int = DEFAULT_BUDGET_NODES,
                      budget_secs: float | None = None) -> EnumerationResult:
    """All minimal blocking sets of size <= max_size (raw list, no
    isomorph rejection).  Leaves of the bounded search tree cover every
    inclusion-minimal hitting set; the essentiality filter keeps exactly
    the minimal ones."""
    sols, complete, nodes, seconds = _run_engine(
        space.meets, space.all_gens_mask, max_size=max_size, mode="leaves",
        budget_nodes=budget_nodes, budget_secs=budget_secs)
    out = [w for w in sols if analysis.is_minimal(space, w)]
    return EnumerationResult(out, complete, nodes, seconds)


def min_cover(points, lines, upper_bound: int | None = None,
              budget_nodes: int = DEFAULT_BUDGET_NODES,
              budget_secs: float | None = None) -> SearchResult:
    """Exact minimum set cover: every point in some chosen line.

    points: iterable of point ids; lines: list of point-id collections.
    Witnesses are index tuples into the lines list.
    """
    pts = list(points)
    pidx = {p: i for i, p in enumerate(pts)}
    nlines = len(lines)
    line_masks = []
    for l in lines:
        m = 0
        for p in l:
            m |= 1 << pidx[p]
        line_masks.append(m)
    rows = []
    for i, p in enumerate(pts):
        r = 0
        for li in range(nlines):
            if (line_masks[li] >> i) & 1:
                r |= 1 << li
        rows.append(r)
    if upper_bound is None:
        # deterministic greedy cover as a feasible seed
        covered = 0
        chosen = []
        all_pts = (1 << len(pts)) - 1
        while covered != all_pts:
            gain, pick = -1, None
            for li in range(nlines):
                g = (line_masks[li] & ~covered).bit_count()
                if g > gain:
                    gain, pick = g, li
            if gain <= 0:
                raise ValueError("lines do not cover the points")
            chosen.append(pick)
            covered |= line_masks[pick]
        upper_bound = len(chosen)
    sols, complete, nodes, seconds = _run_engine(
        rows, (1 << nlines) - 1, max_size=upper_bound, mode="min",
        budget_nodes=budget_nodes, budget_secs=budget_secs)
    optimum = len(sols[0]) if sols else None
    return SearchResult(optimum, sols, complete, nodes, seconds)


def min_cover_of_space(space: PolarSpace, **kw) -> SearchResult:
    """Minimum cover of the space's points by its generators."""
    return min_cover(range(space.num_points), space.gen_points, **kw)


def _greedy_maximal_partial_spread(space: PolarSpace) -> tuple[int, ...]:
    chosen = []
    used = 0
    for g in range(space.num_generators):
        if space.gen_point_mask[g] & used == 0:
            chosen.append(g)
            used |= space.gen_point_mask[g]
    return tuple(chosen)


def min_maximal_partial_spread(space: PolarSpace, bound: int | None = None,
                               budget_nodes: int = DEFAULT_BUDGET_NODES,
                               budget_secs: float | None = None) -> SearchResult:
    """Smallest maximal partial spread: pairwise disjoint generators that
    block every generator (maximality and blocking coincide)."""
    if bound is None:
        bound = len(_greedy_maximal_partial_spread(space))
    sols, complete, nodes, seconds = _run_engine(
        space.meets, space.all_gens_mask, max_size=bound, mode="min",
        conflicts=space.meets, budget_nodes=budget_nodes,
        budget_secs=budget_secs)
    optimum = len(sols[0]) if sols else None
    return SearchResult(optimum, sols, complete, nodes, seconds)


# -- plane blocking-set oracle -------------------------------------------------


@dataclass
class EpsilonResult:
    q: int
    exists: bool | None
    size: int | None
    epsilon: int | None
    witness: tuple | None
    source: str
    complete: bool = True
    note: str = ""


def _pg2_incidence(q: int):
    field = field_of_order(q)
    pts = enumerate_pg_points(2, field)
    lines = []
    for c in enumerate_pg_points(2, field):
        sub = nullspace(field, [c], 2)
        line = tuple(i for i, p in enumerate(pts) if sub.contains_point(p))
        lines.append(line)
    return pts, lines


def smallest_nontrivial_pg2(q: int,
                            budget_nodes: int = DEFAULT_BUDGET_NODES,
                            budget_secs: float | None = None) -> EpsilonResult:
    """Smallest blocking set of PG(2,q) containing no line, by exact
    search for q <= 9; the prime formula eps = (q+1)/2 beyond that."""
    if q > 9:
        if is_prime(q):
            eps = (q + 1) // 2
            return EpsilonResult(q, True, q + 1 + eps, eps, None,
                                 "prime-formula",
                                 note="outside oracle range; prime q formula")
        raise ValueError(
            f"q = {q} outside the oracle range and not prime: no epsilon")
    pts, lines = _pg2_incidence(q)
    npts = len(pts)
    line_masks = []
    for l in lines:
        m = 0
        for p in l:
            m |= 1 << p
        line_masks.append(m)
    rows = line_masks  # hitting candidates for a line are its points
    forbid_through = [[] for _ in range(npts)]
    for li, l in enumerate(lines):
        for p in l:
            forbid_through[p].append(li)
    total_nodes = 0
    total_secs = 0.0
    for target in range(q + 2, npts + 1):
        sols, complete, nodes, seconds = _run_engine(
            rows, (1 << npts) - 1, max_size=target, mode="min",
            forbid=line_masks, forbid_through=forbid_through,
            first_only=True, budget_nodes=budget_nodes,
            budget_secs=budget_secs)
        total_nodes += nodes
        total_secs += seconds
        if not complete:
            return EpsilonResult(q, None, None, None, None, "search",
                                 complete=False,
                                 note=f"budget exceeded at target {target}")
        if sols:
            size = len(sols[0])
            return EpsilonResult(q, True, size, size - (q + 1), sols[0],
                                 "search")
    return EpsilonResult(q, False, None, None, None, "search",
                         note="every blocking set contains a line")


# -- random generation and brute-force oracles ---------------------------------


def greedy_then_minimize(space: PolarSpace, rng) -> tuple[int, ...]:
    """A random blocking set minimized by lex-least removable stripping."""
    chosen: list[int] = []
    hit = 0
    while hit != space.all_gens_mask:
        unhit = [g for g in range(space.num_generators)
                 if not (hit >> g) & 1]
        target = unhit[int(rng.integers(len(unhit)))]
        hitters = []
        m = space.meets[target]
        while m:
            low = m & -m
            hitters.append(low.bit_length() - 1)
            m ^= low
        pick = hitters[int(rng.integers(len(hitters)))]
        if pick not in chosen:
            chosen.append(pick)
            hit |= space.meets[pick]
    return analysis.minimize_blocking_set(space, chosen)


def no_blocking_below(space: PolarSpace, size: int) -> bool:
    """Brute-force certificate: no blocking set of size < size exists.
    Independent of the branch-and-bound; desk-scale spaces only."""
    for k in range(1, size):
        for combo in combinations(range(space.num_generators), k):
            if analysis.is_blocking(space, combo):
                return False
    return True
