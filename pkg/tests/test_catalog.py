"""Catalog encodings: counts, degree sequences, distinctness."""

import pytest

from hhresidue.catalog import (
    FORBIDDEN_SUBGRAPHS,
    catalog,
    co_domino,
    complete,
    complete_bipartite,
    cycle,
    domino,
    dumbbell_a,
    dumbbell_b,
    k23_plus,
    path,
)
from hhresidue.graphs import canonical_form, complement, is_isomorphic

# (vertices, edges, degree sequence) for every forbidden member.
FORBIDDEN_SHAPES = {
    "P5": (5, 4, (2, 2, 2, 1, 1)),
    "4-pan": (5, 5, (3, 2, 2, 2, 1)),
    "K_{2,3}": (5, 6, (3, 3, 2, 2, 2)),
    "K_{2,3}+": (5, 7, (3, 3, 3, 3, 2)),
    "kite": (5, 6, (3, 3, 3, 2, 1)),
    "2P3": (6, 4, (2, 2, 1, 1, 1, 1)),
    "P3+K3": (6, 5, (2, 2, 2, 2, 1, 1)),
    "stool": (6, 6, (3, 3, 2, 2, 1, 1)),
    "co-domino": (6, 8, (3, 3, 3, 3, 2, 2)),
}


def test_forbidden_catalog_is_complete():
    assert list(FORBIDDEN_SUBGRAPHS) == list(FORBIDDEN_SHAPES)


@pytest.mark.parametrize("name", sorted(FORBIDDEN_SHAPES))
def test_forbidden_member_shape(name):
    n, m, degseq = FORBIDDEN_SHAPES[name]
    g = FORBIDDEN_SUBGRAPHS[name]
    assert g.n == n
    assert g.edge_count == m
    assert g.degree_sequence() == degseq


def test_forbidden_members_pairwise_distinct():
    keys = {canonical_form(g) for g in FORBIDDEN_SUBGRAPHS.values()}
    assert len(keys) == 9


def test_k23_plus_is_complement_of_k2_plus_p3():
    from hhresidue.graphs import disjoint_union

    assert is_isomorphic(k23_plus(), complement(disjoint_union(complete(2), path(3))))


def test_co_domino_is_complement_of_domino():
    assert co_domino() == complement(domino())
    assert domino().degree_sequence() == (3, 3, 2, 2, 2, 2)


def test_dumbbells():
    assert dumbbell_a().degree_sequence() == (3, 3, 2, 2, 2, 2)
    assert not is_isomorphic(dumbbell_a(), domino())
    # the prism is 3-regular and is the complement of the 6-cycle
    assert dumbbell_b().degree_sequence() == (3, 3, 3, 3, 3, 3)
    assert is_isomorphic(dumbbell_b(), complement(cycle(6)))


def test_parameterized_constructors_validate():
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        path(0)
    with pytest.raises(ValueError):
        complete_bipartite(0, 3)
    assert path(1) == complete(1)


def test_catalog_dispatcher():
    assert catalog("path", 5) == path(5)
    assert catalog("complete_bipartite", 2, 3) == complete_bipartite(2, 3)
    assert catalog("kite") == FORBIDDEN_SUBGRAPHS["kite"]
    with pytest.raises(ValueError):
        catalog("kite", 4)
    with pytest.raises(ValueError):
        catalog("no-such-graph")
