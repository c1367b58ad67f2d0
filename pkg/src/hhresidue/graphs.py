"""Immutable simple graphs with bitmask adjacency, built for exact
small-graph combinatorics.

Each vertex's neighborhood is stored as an int bitmask, so induced-subgraph
degrees, independence checks, and subset scans reduce to popcounts. The
canonical form is exact (equal keys iff isomorphic) and is intended for
graphs of at most ``CANONICAL_MAX_N`` vertices.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

CANONICAL_MAX_N = 10


def iter_bits(mask: int):
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable and hashable. Equality is labeled equality
    (same vertex count and same edge set), not isomorphism; use
    :func:`is_isomorphic` or :func:`canonical_form` for the latter.

    Attributes:
        n: number of vertices.
        adj: tuple of neighborhood bitmasks, one per vertex.
        degrees: tuple of vertex degrees (indexed by vertex).
    """

    __slots__ = ("n", "adj", "degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(masks))
        object.__setattr__(self, "degrees", tuple(m.bit_count() for m in masks))

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Internal fast path: adj must already be symmetric and loop-free.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "degrees", tuple(m.bit_count() for m in adj))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __delattr__(self, name):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()})"

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return tuple(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u},{v}) out of range")
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted from largest to smallest."""
        return tuple(sorted(self.degrees, reverse=True))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list (duplicates collapse, loops rejected)."""
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj))
    return Graph._from_adj(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [m << g.n for m in h.adj]
    return Graph._from_adj(g.n + h.n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << g.n
    adj = [m | h_all for m in g.adj] + [(m << g.n) | g_all for m in h.adj]
    return Graph._from_adj(g.n + h.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, relabeled densely.

    The new labels follow sorted order, i.e. new vertex i is
    sorted(set(vertices))[i]; that sorted list is the back-map for
    translating witnesses to the host graph.
    """
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertex out of range")
    k = len(vs)
    adj = [0] * k
    for i in range(k):
        av = g.adj[vs[i]]
        for j in range(i + 1, k):
            if av >> vs[j] & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph._from_adj(k, tuple(adj))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex v of g becomes vertex perm[v] of the result."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    adj = [0] * g.n
    for u in range(g.n):
        pu = perm[u]
        for v in iter_bits(g.adj[u]):
            adj[pu] |= 1 << perm[v]
    return Graph._from_adj(g.n, tuple(adj))


# ---------------------------------------------------------------------------
# Canonical form: the minimum, over all vertex orderings, of the upper
# triangle of the adjacency matrix read in column-major order
# ((0,1),(0,2),(1,2),(0,3),...). Exact but exponential in the worst case,
# hence the scale bound.
# ---------------------------------------------------------------------------


def canonical_form(g: Graph, max_n: int = CANONICAL_MAX_N) -> tuple[int, int]:
    """A total-order key equal for two graphs exactly when isomorphic.

    Returns (n, bits) where bits packs the minimized upper-triangle
    bitstring, first pair most significant.
    """
    if g.n > max_n:
        raise ValueError(f"graph order {g.n} exceeds canonical-form bound {max_n}")
    n = g.n
    if n < 2:
        return (n, 0)
    cols = _min_columns(g)
    bits = 0
    for k, col in enumerate(cols, start=1):
        bits = (bits << k) | col
    return (n, bits)


def _min_columns(g: Graph) -> list[int]:
    """Minimize the per-position adjacency columns over all orderings.

    Position k contributes a k-bit integer whose bit i (MSB first) is the
    adjacency between the vertices placed at positions i and k. A greedy
    seed ordering is refined by a depth-first search with prefix pruning;
    candidates that are interchangeable with an already-tried sibling by a
    transposition automorphism are skipped, which keeps highly symmetric
    graphs (cliques, empty graphs) linear.
    """
    n, adj = g.n, g.adj

    placed: list[int] = []
    used = 0
    seed: list[int] = []
    for _ in range(n):
        best_v, best_col = -1, -1
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            av = adj[v]
            for p in placed:
                col = col << 1 | (av >> p & 1)
            if best_v < 0 or col < best_col:
                best_v, best_col = v, col
        placed.append(best_v)
        used |= 1 << best_v
        seed.append(best_col)

    best_cols = seed[1:]
    cur: list[int] = []
    order: list[int] = []

    def descend(used: int) -> None:
        nonlocal best_cols
        k = len(order)
        if k == n:
            if cur < best_cols:
                best_cols = cur.copy()
            return
        cands: list[tuple[int, int]] = []
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            av = adj[v]
            for p in order:
                col = col << 1 | (av >> p & 1)
            cands.append((col, v))
        cands.sort()
        tried: list[int] = []
        for col, v in cands:
            if k >= 1:
                cur.append(col)
                worse = cur > best_cols[:k]
                if worse:
                    cur.pop()
                    break
            av = adj[v]
            twin = any(
                (adj[u] & ~(1 << v)) == (av & ~(1 << u)) for u in tried
            )
            if twin:
                if k >= 1:
                    cur.pop()
                continue
            tried.append(v)
            order.append(v)
            descend(used | 1 << v)
            order.pop()
            if k >= 1:
                cur.pop()

    descend(0)
    return best_cols


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff an adjacency-preserving bijection between g and h exists.

    Independent of :func:`canonical_form`: backtracking over degree-profile
    classes with incremental consistency checks.
    """
    n = g.n
    if n != h.n:
        return False
    if n == 0:
        return True
    if sorted(g.degrees) != sorted(h.degrees):
        return False

    def profiles(gr: Graph) -> list[tuple[int, tuple[int, ...]]]:
        return [
            (gr.degrees[v], tuple(sorted(gr.degrees[u] for u in iter_bits(gr.adj[v]))))
            for v in range(gr.n)
        ]

    pg, ph = profiles(g), profiles(h)
    if sorted(pg) != sorted(ph):
        return False

    by_profile: dict[tuple, list[int]] = {}
    for w in range(n):
        by_profile.setdefault(ph[w], []).append(w)
    # map rare profiles first
    order = sorted(range(n), key=lambda v: (len(by_profile[pg[v]]), pg[v], v))

    mapping = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        av = g.adj[v]
        for w in by_profile[pg[v]]:
            if used[w]:
                continue
            hw = h.adj[w]
            ok = True
            for j in range(i):
                u = order[j]
                if (av >> u & 1) != (hw >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return backtrack(0)
