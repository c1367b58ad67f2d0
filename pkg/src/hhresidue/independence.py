"""Exact maximum independent sets and the Maxine max-degree-deletion
heuristic.

Two exact routes to the independence number cross-check each other: a
branch-and-bound on a maximum-degree vertex with a greedy clique-cover
bound, and an exhaustive bitmask sweep. Maxine can be run with a fixed
tie-breaking strategy or branched over every choice of maximum-degree
vertex, collecting the full set of achievable independent-set sizes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, iter_bits

ALPHA_MAX_N = 24
BITMASK_MAX_N = 20
ALL_MIS_MAX_N = 12
BRANCH_MAX_N = 9


def independence_number(g: Graph, max_n: int = ALPHA_MAX_N) -> int:
    """Exact independence number by branch and bound: branch on a vertex of
    maximum degree (include or exclude), prune with a greedy clique-cover
    upper bound."""
    if g.n > max_n:
        raise ValueError(f"graph order {g.n} exceeds branch-and-bound bound {max_n}")
    n, adj = g.n, g.adj
    if n == 0:
        return 0
    best = 0

    def clique_cover_bound(mask: int) -> int:
        count = 0
        rem = mask
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            clique = low
            cand = adj[v] & rem
            while cand:
                ub = cand & -cand
                u = ub.bit_length() - 1
                clique |= ub
                cand &= adj[u]
            rem &= ~clique
            count += 1
        return count

    def explore(mask: int, size: int) -> None:
        nonlocal best
        vbest, dbest = -1, -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            dv = (adj[v] & mask).bit_count()
            if dv > dbest:
                vbest, dbest = v, dv
        if dbest <= 0:
            total = size + mask.bit_count()
            if total > best:
                best = total
            return
        if size + clique_cover_bound(mask) <= best:
            return
        explore(mask & ~adj[vbest] & ~(1 << vbest), size + 1)
        explore(mask & ~(1 << vbest), size)

    explore((1 << n) - 1, 0)
    return best


def independence_number_bitmask(g: Graph, max_n: int = BITMASK_MAX_N) -> int:
    """Exhaustive oracle: sweep all 2^n vertex subsets, extending the
    independence record one lowest bit at a time. Independent of the
    branch-and-bound route."""
    if g.n > max_n:
        raise ValueError(f"graph order {g.n} exceeds bitmask-oracle bound {max_n}")
    n, adj = g.n, g.adj
    if n == 0:
        return 0
    size = [0] * (1 << n)  # independent-set size, or -1 when not independent
    best = 0
    for m in range(1, 1 << n):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        s = size[rest]
        if s >= 0 and not adj[v] & rest:
            s += 1
            size[m] = s
            if s > best:
                best = s
        else:
            size[m] = -1
    return best


def maximum_independent_sets(g: Graph, max_n: int = ALL_MIS_MAX_N) -> list[tuple[int, ...]]:
    """Every independent set of maximum size, each as a sorted vertex
    tuple, listed in lexicographic order."""
    if g.n > max_n:
        raise ValueError(f"graph order {g.n} exceeds exhaustive bound {max_n}")
    n, adj = g.n, g.adj
    if n == 0:
        return [()]
    size = [0] * (1 << n)
    best = 0
    for m in range(1, 1 << n):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        s = size[rest]
        if s >= 0 and not adj[v] & rest:
            s += 1
            size[m] = s
            if s > best:
                best = s
        else:
            size[m] = -1
    sets = [tuple(iter_bits(m)) for m in range(1 << n) if size[m] == best]
    return sorted(sets)


@dataclass(frozen=True)
class MaxineOutcome:
    """One Maxine run: the deletion order and the surviving independent
    set. Each deleted vertex had maximum degree at its deletion time, and
    the graph then still had at least one edge."""

    deletions: tuple[int, ...]
    survivors: tuple[int, ...]
    size: int


def _max_degree_candidates(adj: tuple[int, ...], mask: int) -> tuple[int, list[int]]:
    dmax = -1
    cands: list[int] = []
    for v in iter_bits(mask):
        dv = (adj[v] & mask).bit_count()
        if dv > dmax:
            dmax = dv
            cands = [v]
        elif dv == dmax:
            cands.append(v)
    return dmax, cands


def maxine_run(g: Graph, strategy: str = "first", seed: int | None = None) -> MaxineOutcome:
    """Delete a maximum-degree vertex while any edge remains; survivors
    form an independent set.

    strategy picks among tied maximum-degree vertices: "first" or "last"
    take the lowest/highest original label, "random" draws from a
    random.Random seeded with ``seed``.
    """
    if strategy not in ("first", "last", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = random.Random(seed) if strategy == "random" else None
    adj = g.adj
    mask = (1 << g.n) - 1
    deletions: list[int] = []
    while True:
        dmax, cands = _max_degree_candidates(adj, mask)
        if dmax <= 0:
            break
        if strategy == "first":
            v = cands[0]
        elif strategy == "last":
            v = cands[-1]
        else:
            v = rng.choice(cands)
        deletions.append(v)
        mask ^= 1 << v
    survivors = tuple(iter_bits(mask))
    return MaxineOutcome(tuple(deletions), survivors, len(survivors))


@dataclass(frozen=True)
class MaxineBranchSummary:
    """All outcomes of Maxine over every choice of maximum-degree vertex at
    every step. branch_count is the number of distinct deletion sequences;
    exploration deduplicates on the residual vertex set, which determines
    the remainder of any run."""

    achievable_sizes: tuple[int, ...]
    min_size: int
    max_size: int
    branch_count: int


def maxine_all_branches(g: Graph, max_n: int = BRANCH_MAX_N) -> MaxineBranchSummary:
    """Exact set of independent-set sizes achievable by Maxine on g."""
    if g.n > max_n:
        raise ValueError(f"graph order {g.n} exceeds branch-exploration bound {max_n}")
    adj = g.adj
    memo: dict[int, tuple[frozenset[int], int]] = {}

    def explore(mask: int) -> tuple[frozenset[int], int]:
        got = memo.get(mask)
        if got is not None:
            return got
        dmax, cands = _max_degree_candidates(adj, mask)
        if dmax <= 0:
            result = (frozenset((mask.bit_count(),)), 1)
        else:
            sizes: set[int] = set()
            paths = 0
            for v in cands:
                sub_sizes, sub_paths = explore(mask ^ (1 << v))
                sizes |= sub_sizes
                paths += sub_paths
            result = (frozenset(sizes), paths)
        memo[mask] = result
        return result

    sizes, paths = explore((1 << g.n) - 1)
    ordered = tuple(sorted(sizes))
    return MaxineBranchSummary(ordered, ordered[0], ordered[-1], paths)
