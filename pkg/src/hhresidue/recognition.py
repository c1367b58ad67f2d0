"""Recognizers built on the vertex-level Havel-Hakimi property.

A vertex has the Havel-Hakimi property when it has maximum degree and none
of its neighbors has smaller degree than any of its non-neighbors; deleting
such a vertex changes the degree sequence exactly like one reduction step.
A graph is *strong Havel-Hakimi* when every maximum-degree vertex of every
induced subgraph has the property. Two independent recognizers are
provided: the definitional subset sweep, and a scan for the nine minimal
forbidden induced subgraphs. The module also tests the five-vertex
configuration whose absence characterizes matrogenic graphs, and threshold
graphs via their {2K2, C4, P4}-free characterization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catalog import FORBIDDEN_SUBGRAPHS, complete, cycle, disjoint_union, path
from .graphs import Graph, induced_subgraph, is_isomorphic, iter_bits

DEFINITIONAL_MAX_N = 12


def has_hh_property(g: Graph, v: int) -> bool:
    """True iff v has maximum degree and min degree over N(v) is at least
    the max degree over the non-neighbors of v (vacuous when either side
    is empty)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    deg = g.degrees
    if deg[v] != max(deg):
        return False
    nbr = g.adj[v]
    nbr_degs = [deg[u] for u in iter_bits(nbr)]
    non_degs = [deg[u] for u in range(g.n) if u != v and not nbr >> u & 1]
    if not nbr_degs or not non_degs:
        return True
    return min(nbr_degs) >= max(non_degs)


def is_strong_havel_hakimi_definitional(g: Graph, max_n: int = DEFINITIONAL_MAX_N) -> bool:
    """Definitional oracle: sweep every nonempty vertex subset and demand
    the Havel-Hakimi property of every maximum-degree vertex within it.
    Cost 2^n * poly(n), hence the scale bound."""
    if g.n > max_n:
        raise ValueError(f"graph order {g.n} exceeds definitional-oracle bound {max_n}")
    n, adj = g.n, g.adj
    for mask in range(1, 1 << n):
        verts = list(iter_bits(mask))
        degs = [(adj[v] & mask).bit_count() for v in verts]
        dmax = max(degs)
        for v, dv in zip(verts, degs):
            if dv != dmax:
                continue
            nbm = adj[v] & mask
            non = mask & ~nbm & ~(1 << v)
            if not nbm or not non:
                continue
            mn = min((adj[u] & mask).bit_count() for u in iter_bits(nbm))
            mx = max((adj[u] & mask).bit_count() for u in iter_bits(non))
            if mn < mx:
                return False
    return True


@dataclass(frozen=True)
class ForbiddenWitness:
    """An induced occurrence of a forbidden graph: its catalog name and the
    host vertices inducing it (sorted)."""

    name: str
    vertices: tuple[int, ...]


def contains_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """First vertex subset of g (lexicographic order) inducing a copy of h,
    or None."""
    k = h.n
    if k > g.n:
        return None
    if k == 0:
        return ()
    target = h.degree_sequence()
    for sub in itertools.combinations(range(g.n), k):
        mask = 0
        for v in sub:
            mask |= 1 << v
        degs = tuple(sorted(((g.adj[v] & mask).bit_count() for v in sub), reverse=True))
        if degs != target:
            continue
        if is_isomorphic(induced_subgraph(g, sub), h):
            return sub
    return None


_FORB_BY_SIZE: dict[int, list[tuple[str, Graph, tuple[int, ...]]]] = {}
for _name, _fg in FORBIDDEN_SUBGRAPHS.items():
    _FORB_BY_SIZE.setdefault(_fg.n, []).append((_name, _fg, _fg.degree_sequence()))


def strong_hh_witness(g: Graph) -> ForbiddenWitness | None:
    """Scan for an induced forbidden subgraph: subsets by increasing size
    (5 before 6), lexicographically within a size, catalog order within a
    subset. Returns the first hit, or None when g is in the class."""
    for size in sorted(_FORB_BY_SIZE):
        if size > g.n:
            break
        members = _FORB_BY_SIZE[size]
        for sub in itertools.combinations(range(g.n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            degs = tuple(sorted(((g.adj[v] & mask).bit_count() for v in sub), reverse=True))
            for name, fg, fdegs in members:
                if degs == fdegs and is_isomorphic(induced_subgraph(g, sub), fg):
                    return ForbiddenWitness(name, sub)
    return None


def is_strong_havel_hakimi(g: Graph) -> bool:
    """Forbidden-subgraph recognizer; agrees with the definitional oracle
    (a fact the harness re-checks by enumeration)."""
    return strong_hh_witness(g) is None


@dataclass(frozen=True)
class ConfigWitness:
    """Five distinct vertices with edges vw, ux, uy and non-edges uv, wx,
    wy (the remaining four pairs are unconstrained)."""

    v: int
    w: int
    u: int
    x: int
    y: int


def find_matrogenic_config(g: Graph) -> ConfigWitness | None:
    """First occurrence (ascending u, v, w, then lowest pair x < y) of the
    five-vertex configuration above, or None. Graphs avoiding it are
    exactly the matrogenic graphs."""
    n, adj = g.n, g.adj
    for u in range(n):
        au = adj[u]
        if au.bit_count() < 2:
            continue
        for v in range(n):
            if v == u or au >> v & 1:
                continue
            for w in iter_bits(adj[v]):
                if w == u:
                    continue
                pool = au & ~adj[w] & ~(1 << v) & ~(1 << w)
                if pool.bit_count() >= 2:
                    bits = iter_bits(pool)
                    x = next(bits)
                    y = next(bits)
                    return ConfigWitness(v, w, u, x, y)
    return None


def is_matrogenic_config_free(g: Graph) -> bool:
    return find_matrogenic_config(g) is None


_THRESHOLD_OBSTRUCTIONS = (
    disjoint_union(complete(2), complete(2)),  # 2K2
    cycle(4),
    path(4),
)


def is_threshold(g: Graph) -> bool:
    """True iff g has no induced 2K2, C4, or P4."""
    return all(contains_induced(g, f) is None for f in _THRESHOLD_OBSTRUCTIONS)
