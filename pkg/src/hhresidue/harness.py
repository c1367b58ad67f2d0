"""Enumeration-based checks of the structural facts the package is built
on.

Each check sweeps every isomorphism class up to a size bound and reports
violations as graph6 strings with messages, so a failure is reproducible
from the report alone. The facts checked:

- the definitional strong Havel-Hakimi oracle agrees with the
  forbidden-subgraph scan ("forb-equivalence");
- the minimal forbidden induced subgraphs are exactly the nine catalog
  graphs ("minimal-forbidden");
- residue <= alpha everywhere, and residue <= M <= alpha for every
  achievable Maxine size ("residue-bounds");
- on the class itself, residue = alpha and every Maxine branch returns the
  residue ("r-equals-alpha-S");
- a maximum-degree vertex lying in all maximum independent sets sits on an
  induced 4-cycle or is the center of an induced 5-path ("lemma-c4-p5");
- threshold implies matrogenic-configuration-free implies in-class
  ("class-chain").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .catalog import FORBIDDEN_SUBGRAPHS
from .degseq import residue
from .enumeration import graphs_up_to
from .graph6 import emit_graph6
from .graphs import Graph, induced_subgraph, is_isomorphic, iter_bits
from .independence import independence_number, maximum_independent_sets, maxine_all_branches
from .recognition import (
    is_matrogenic_config_free,
    is_strong_havel_hakimi_definitional,
    is_threshold,
    strong_hh_witness,
)


def _validate_n_max(n_max: int, cap: int) -> None:
    if not 1 <= n_max <= cap:
        raise ValueError(f"n_max {n_max} outside supported range 1..{cap}")


@dataclass(frozen=True)
class Violation:
    graph6: str
    message: str


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    n_max: int
    graphs_checked: int
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "passed": self.passed,
            "violations": [
                {"graph6": v.graph6, "message": v.message} for v in self.violations
            ],
        }


def verify_forb_equivalence(n_max: int = 7) -> TheoremReport:
    """Definitional oracle == forbidden-subgraph scan on every class of
    order <= n_max."""
    _validate_n_max(n_max, 8)
    violations = []
    checked = 0
    for g in graphs_up_to(n_max):
        checked += 1
        by_definition = is_strong_havel_hakimi_definitional(g)
        witness = strong_hh_witness(g)
        if by_definition != (witness is None):
            detail = f"witness={witness.name}{witness.vertices}" if witness else "no witness"
            violations.append(
                Violation(
                    emit_graph6(g),
                    f"definitional={by_definition} forbidden-scan={witness is None} ({detail})",
                )
            )
    return TheoremReport("forb-equivalence", n_max, checked, tuple(violations))


def minimal_forbidden(n_max: int = 6) -> list[Graph]:
    """All graphs of order <= n_max outside the class whose every
    one-vertex-deleted induced subgraph is inside, judged by the
    definitional oracle alone; one representative per isomorphism class.
    All nine members appear once n_max >= 6."""
    _validate_n_max(n_max, 8)
    found = []
    for g in graphs_up_to(n_max):
        if is_strong_havel_hakimi_definitional(g):
            continue
        others = range(g.n)
        if all(
            is_strong_havel_hakimi_definitional(
                induced_subgraph(g, [u for u in others if u != v])
            )
            for v in others
        ):
            found.append(g)
    return found


def verify_minimal_forbidden(n_max: int = 6) -> TheoremReport:
    """The minimal-forbidden sweep returns exactly the nine catalog graphs
    (also certifying the catalog's fixed edge lists), and each catalog
    member is itself minimal."""
    _validate_n_max(n_max, 8)
    violations = []
    found = minimal_forbidden(n_max)
    names = list(FORBIDDEN_SUBGRAPHS)
    matched: set[str] = set()
    for g in found:
        hits = [name for name in names if is_isomorphic(g, FORBIDDEN_SUBGRAPHS[name])]
        if not hits:
            violations.append(
                Violation(emit_graph6(g), "minimal forbidden graph not in the catalog")
            )
        else:
            matched.update(hits)
    for name in names:
        fg = FORBIDDEN_SUBGRAPHS[name]
        if fg.n <= n_max and name not in matched:
            violations.append(
                Violation(emit_graph6(fg), f"catalog graph {name} not found by the sweep")
            )
        if is_strong_havel_hakimi_definitional(fg):
            violations.append(
                Violation(emit_graph6(fg), f"catalog graph {name} passes the definitional oracle")
            )
        for v in range(fg.n):
            sub = induced_subgraph(fg, [u for u in range(fg.n) if u != v])
            if not is_strong_havel_hakimi_definitional(sub):
                violations.append(
                    Violation(
                        emit_graph6(fg),
                        f"catalog graph {name} minus vertex {v} still fails the oracle",
                    )
                )
    checked = sum(1 for _ in graphs_up_to(n_max))
    return TheoremReport("minimal-forbidden", n_max, checked, tuple(violations))


def verify_residue_bounds(n_max: int = 7, maxine_n_max: int = 6) -> TheoremReport:
    """residue <= alpha on every class of order <= n_max; additionally
    residue <= M <= alpha for every achievable Maxine size on orders
    <= maxine_n_max (full branching is exponential, hence the lower cap)."""
    _validate_n_max(n_max, 7)
    violations = []
    checked = 0
    for g in graphs_up_to(n_max):
        checked += 1
        g6 = emit_graph6(g)
        r = residue(g.degree_sequence())
        alpha = independence_number(g)
        if r > alpha:
            violations.append(Violation(g6, f"residue {r} exceeds alpha {alpha}"))
        if g.n <= maxine_n_max:
            summary = maxine_all_branches(g)
            if r > summary.min_size:
                violations.append(
                    Violation(g6, f"Maxine size {summary.min_size} below residue {r}")
                )
            if summary.max_size > alpha:
                violations.append(
                    Violation(g6, f"Maxine size {summary.max_size} exceeds alpha {alpha}")
                )
    return TheoremReport("residue-bounds", n_max, checked, tuple(violations))


def verify_r_equals_alpha_on_strong_hh(n_max: int = 7) -> TheoremReport:
    """On every in-class graph of order <= n_max: residue = alpha, and
    every Maxine branch returns exactly the residue."""
    _validate_n_max(n_max, 8)
    violations = []
    checked = 0
    for g in graphs_up_to(n_max):
        checked += 1
        if strong_hh_witness(g) is not None:
            continue
        g6 = emit_graph6(g)
        r = residue(g.degree_sequence())
        alpha = independence_number(g)
        if r != alpha:
            violations.append(Violation(g6, f"in-class graph has residue {r} != alpha {alpha}"))
        summary = maxine_all_branches(g)
        if summary.achievable_sizes != (r,):
            violations.append(
                Violation(
                    g6,
                    f"Maxine sizes {summary.achievable_sizes} differ from residue {r}",
                )
            )
    return TheoremReport("r-equals-alpha-S", n_max, checked, tuple(violations))


def in_induced_c4(g: Graph, v: int) -> bool:
    """True iff v lies on an induced 4-cycle: two non-adjacent neighbors of
    v with a common neighbor that is not adjacent to v."""
    adj = g.adj
    nbrs = list(iter_bits(adj[v]))
    for i, w in enumerate(nbrs):
        for x in nbrs[i + 1 :]:
            if adj[w] >> x & 1:
                continue
            if adj[w] & adj[x] & ~adj[v] & ~(1 << v):
                return True
    return False


def is_induced_p5_center(g: Graph, v: int) -> bool:
    """True iff v is the middle vertex of an induced 5-path a-w-v-x-b."""
    adj = g.adj
    nbrs = list(iter_bits(adj[v]))
    for w in nbrs:
        for x in nbrs:
            if w == x or adj[w] >> x & 1:
                continue
            a_pool = adj[w] & ~adj[v] & ~adj[x] & ~(1 << v) & ~(1 << x)
            for a in iter_bits(a_pool):
                b_pool = (
                    adj[x]
                    & ~adj[v]
                    & ~adj[w]
                    & ~adj[a]
                    & ~(1 << v)
                    & ~(1 << w)
                    & ~(1 << a)
                )
                if b_pool:
                    return True
    return False


def verify_lemma_c4_or_p5(n_max: int = 7) -> TheoremReport:
    """On every class of order <= n_max with at least one edge: any
    maximum-degree vertex belonging to all maximum independent sets lies on
    an induced 4-cycle or is the center of an induced 5-path."""
    _validate_n_max(n_max, 7)
    violations = []
    checked = 0
    for g in graphs_up_to(n_max):
        if g.edge_count == 0:
            continue
        checked += 1
        mis = maximum_independent_sets(g)
        common = set(mis[0]).intersection(*map(set, mis[1:])) if len(mis) > 1 else set(mis[0])
        dmax = max(g.degrees)
        for v in sorted(common):
            if g.degrees[v] != dmax:
                continue
            if not (in_induced_c4(g, v) or is_induced_p5_center(g, v)):
                violations.append(
                    Violation(
                        emit_graph6(g),
                        f"vertex {v} is in every maximum independent set but on no "
                        f"induced C4 and not a P5 center",
                    )
                )
    return TheoremReport("lemma-c4-p5", n_max, checked, tuple(violations))


def verify_class_chain(n_max: int = 7) -> TheoremReport:
    """threshold => matrogenic-configuration-free => in-class, on every
    class of order <= n_max."""
    _validate_n_max(n_max, 7)
    violations = []
    checked = 0
    for g in graphs_up_to(n_max):
        checked += 1
        g6 = emit_graph6(g)
        threshold = is_threshold(g)
        config_free = is_matrogenic_config_free(g)
        in_class = strong_hh_witness(g) is None
        if threshold and not config_free:
            violations.append(Violation(g6, "threshold graph contains the configuration"))
        if config_free and not in_class:
            violations.append(Violation(g6, "configuration-free graph is outside the class"))
    return TheoremReport("class-chain", n_max, checked, tuple(violations))


# Registry for the command-line front end: id -> (check, default n_max).
THEOREM_CHECKS: dict[str, tuple[Callable[[int], TheoremReport], int]] = {
    "forb-equivalence": (verify_forb_equivalence, 7),
    "minimal-forbidden": (verify_minimal_forbidden, 6),
    "residue-bounds": (verify_residue_bounds, 7),
    "r-equals-alpha-S": (verify_r_equals_alpha_on_strong_hh, 7),
    "lemma-c4-p5": (verify_lemma_c4_or_p5, 7),
    "class-chain": (verify_class_chain, 7),
}
