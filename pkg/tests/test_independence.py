"""Exact independence numbers and the Maxine heuristic."""

import pytest
from hypothesis import given
import hypothesis.strategies as st

from hhresidue.catalog import complete, cycle, empty_graph, path
from hhresidue.degseq import residue
from hhresidue.graphs import Graph, iter_bits
from hhresidue.independence import (
    independence_number,
    independence_number_bitmask,
    maximum_independent_sets,
    maxine_all_branches,
    maxine_run,
)

from strategies import graphs


def brute_alpha(g):
    """Subset-scan oracle: check independence of every vertex subset."""
    best = 0
    for mask in range(1 << g.n):
        if all(g.adj[v] & mask == 0 for v in iter_bits(mask)):
            best = max(best, mask.bit_count())
    return best


def replay_is_valid_maxine(g, outcome):
    mask = (1 << g.n) - 1
    for v in outcome.deletions:
        degs = {u: (g.adj[u] & mask).bit_count() for u in iter_bits(mask)}
        if max(degs.values()) == 0 or degs[v] != max(degs.values()):
            return False
        mask ^= 1 << v
    return tuple(iter_bits(mask)) == outcome.survivors


# --- exact alpha ---------------------------------------------------------


def test_alpha_examples():
    for n in range(1, 8):
        assert independence_number(complete(n)) == 1
    assert independence_number(path(5)) == brute_alpha(path(5)) == 3
    assert independence_number(cycle(5)) == brute_alpha(cycle(5)) == 2
    assert independence_number(empty_graph(0)) == 0


@given(graphs(max_n=10))
def test_alpha_routes_agree(g):
    a = independence_number(g)
    assert a == independence_number_bitmask(g)
    assert a == brute_alpha(g)


def test_alpha_scale_bounds():
    with pytest.raises(ValueError):
        independence_number(empty_graph(25))
    with pytest.raises(ValueError):
        independence_number_bitmask(empty_graph(21))


# --- all maximum independent sets -----------------------------------------


def test_maximum_sets_examples():
    assert maximum_independent_sets(cycle(4)) == [(0, 2), (1, 3)]
    assert maximum_independent_sets(complete(3)) == [(0,), (1,), (2,)]
    assert maximum_independent_sets(path(5)) == [(0, 2, 4)]


def test_maximum_sets_scale_bound():
    with pytest.raises(ValueError):
        maximum_independent_sets(empty_graph(13))


@given(graphs(max_n=8))
def test_maximum_sets_are_independent_and_maximum(g):
    sets = maximum_independent_sets(g)
    alpha = independence_number(g)
    assert sets
    for s in sets:
        assert len(s) == alpha
        assert all(not g.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1 :])


# --- Maxine, single runs ---------------------------------------------------


def test_maxine_k2():
    assert maxine_run(complete(2)).size == 1


def test_maxine_c4_all_strategies():
    for strategy in ("first", "last"):
        assert maxine_run(cycle(4), strategy).size == 2
    for seed in range(5):
        assert maxine_run(cycle(4), "random", seed=seed).size == 2


def test_maxine_p5_first_strategy():
    out = maxine_run(path(5), "first")
    assert out.deletions == (1, 3)
    assert out.survivors == (0, 2, 4)
    assert out.size == 3


def test_maxine_random_is_seeded():
    g = cycle(6)
    assert maxine_run(g, "random", seed=7) == maxine_run(g, "random", seed=7)


def test_maxine_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        maxine_run(path(3), "middle")


@given(graphs(), st.sampled_from(["first", "last", "random"]), st.integers(0, 99))
def test_maxine_outcomes_are_valid(g, strategy, seed):
    out = maxine_run(g, strategy, seed=seed)
    survivors = set(out.survivors)
    assert all(
        not g.has_edge(u, v) for u in survivors for v in survivors if u < v
    )
    assert replay_is_valid_maxine(g, out)
    assert out.size == len(out.survivors)


# --- Maxine, all branches ---------------------------------------------------


def test_branches_p5():
    summary = maxine_all_branches(path(5))
    assert summary.achievable_sizes == (2, 3)
    assert (summary.min_size, summary.max_size) == (2, 3)
    assert summary.branch_count == 10


def test_branches_complete():
    for n in range(1, 7):
        assert maxine_all_branches(complete(n)).achievable_sizes == (1,)


def test_branches_c5():
    summary = maxine_all_branches(cycle(5))
    assert summary.achievable_sizes == (2,)
    assert summary.branch_count == 20


def test_branches_scale_bound():
    with pytest.raises(ValueError):
        maxine_all_branches(empty_graph(10))


def test_maxine_optimal_on_c4_p5_free_graphs():
    """On every graph up to order 7 with no induced C4 and no induced P5,
    every Maxine branch reaches the independence number."""
    from hhresidue.enumeration import graphs_up_to
    from hhresidue.recognition import contains_induced

    c4, p5 = cycle(4), path(5)
    checked = 0
    for g in graphs_up_to(7):
        if contains_induced(g, c4) or contains_induced(g, p5):
            continue
        checked += 1
        assert maxine_all_branches(g).achievable_sizes == (independence_number(g),)
    assert checked > 100


@given(graphs(max_n=6))
def test_branch_sizes_between_residue_and_alpha(g):
    summary = maxine_all_branches(g)
    r = residue(g.degree_sequence())
    alpha = independence_number(g)
    assert r <= summary.min_size <= summary.max_size <= alpha


@given(graphs(max_n=6), st.sampled_from(["first", "last", "random"]))
def test_single_runs_land_in_achievable_sizes(g, strategy):
    summary = maxine_all_branches(g)
    assert maxine_run(g, strategy, seed=3).size in summary.achievable_sizes
