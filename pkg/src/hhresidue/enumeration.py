"""Exhaustive generation of all isomorphism classes of small graphs.

Representatives of order n are grown from those of order n-1 by attaching a
new vertex with every possible neighborhood and deduplicating on canonical
form; every graph on n vertices arises this way from the class of itself
minus one vertex, so the sweep is complete. Results are cached per order
and listed in canonical-key order, so repeated sweeps are cheap and
deterministic.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graphs import Graph, canonical_form, is_isomorphic, iter_bits

ENUMERATION_MAX_N = 8

_cache: dict[int, list[Graph]] = {}


def enumerate_graphs(n: int) -> list[Graph]:
    """All isomorphism classes of simple graphs on n vertices, one
    representative each, in canonical-key order. Supports 1 <= n <= 8."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"order {n} outside supported range 1..{ENUMERATION_MAX_N}")
    cached = _cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        reps = [Graph(1)]
    else:
        seen: dict[tuple[int, int], Graph] = {}
        new_bit = 1 << (n - 1)
        for g in enumerate_graphs(n - 1):
            base = list(g.adj)
            for pattern in range(1 << (n - 1)):
                adj = base.copy()
                adj.append(pattern)
                for u in iter_bits(pattern):
                    adj[u] |= new_bit
                h = Graph._from_adj(n, tuple(adj))
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
        reps = [seen[k] for k in sorted(seen)]
    _cache[n] = reps
    return reps


def graphs_up_to(n_max: int) -> Iterator[Graph]:
    """All representatives of orders 1..n_max, smaller orders first."""
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n)


def isomorphism_class_count_labeled(n: int, max_n: int = 5) -> int:
    """Independent count oracle: enumerate all 2^C(n,2) labeled graphs and
    deduplicate by pairwise isomorphism tests (no canonical forms, no
    augmentation). Exponential; intended for n <= 5."""
    if not 0 <= n <= max_n:
        raise ValueError(f"order {n} outside oracle range 0..{max_n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    reps_by_degseq: dict[tuple[int, ...], list[Graph]] = {}
    count = 0
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        bucket = reps_by_degseq.setdefault(g.degree_sequence(), [])
        if not any(is_isomorphic(g, r) for r in bucket):
            bucket.append(g)
            count += 1
    return count
