"""
测试链映射：交换性、分解无关性与逆变函子性
"""

import pytest
from sympy import eye

from core.constructions import cone, enumerate_trees, path_tree, star_tree
from core.morphisms import compose, make_embedding, quotient_by_edges
from topology.chain_maps import (
    cone_chain_map, contraction_chain_map, embedding_chain_map, identity_chain_map,
)
from utils.exceptions import InvalidContraction, NotRootPreserving


@pytest.fixture
def star_contractions():
    """K_{3,1} -> K_{2,1} -> K_{1,1}，根在叶 v1"""
    star = star_tree(3)
    middle, phi = quotient_by_edges(star, ['e3'], root='v1')
    _, psi = quotient_by_edges(middle, ['e2'], root=phi.target_root)
    return phi, psi


def test_identity_map(star3):
    identity = identity_chain_map(star3, 2, 1)
    assert identity.commutes()
    assert identity.induced_homology_map(1, 2) == eye(1)


def test_contraction_map_commutes(star_contractions):
    phi, psi = star_contractions
    assert contraction_chain_map(phi, 3, 1).commutes()
    assert contraction_chain_map(compose(phi, psi), 3, 1).commutes()


def test_contraction_map_is_independent_of_order(star3):
    _, phi = quotient_by_edges(star3, ['e1', 'e2'])
    default = contraction_chain_map(phi, 2, 1)
    assert contraction_chain_map(phi, 2, 1, order=['e2', 'e1']) == default
    with pytest.raises(InvalidContraction):
        contraction_chain_map(phi, 2, 1, order=['e1'])


def test_contravariant_functoriality(star_contractions):
    phi, psi = star_contractions
    whole = contraction_chain_map(compose(phi, psi), 2, 1)
    assert whole == contraction_chain_map(phi, 2, 1) @ contraction_chain_map(psi, 2, 1)


def test_embedding_into_cone_commutes(path3):
    graph, _ = cone(path3)
    inclusion = make_embedding(
        path3, graph, {v: v for v in path3.vertices}, {e: e for e in path3.edge_ids}
    )
    assert embedding_chain_map(inclusion, 2, 1).commutes()


def test_cone_maps_compose_on_homology(star_contractions):
    phi, psi = star_contractions
    whole = cone_chain_map(compose(phi, psi), 2, 1)
    first = cone_chain_map(phi, 2, 1)
    second = cone_chain_map(psi, 2, 1)
    assert whole.commutes() and first.commutes() and second.commutes()
    assert whole.induced_homology_map(0, 2) == (
        first.induced_homology_map(0, 2) * second.induced_homology_map(0, 2)
    )
    assert whole.induced_homology_map(1, 2) == (
        first.induced_homology_map(1, 2) * second.induced_homology_map(1, 2)
    )


def test_cone_maps_compose_on_chains(star_contractions):
    phi, psi = star_contractions
    whole = cone_chain_map(compose(phi, psi), 2, 1)
    assert whole == cone_chain_map(phi, 2, 1) @ cone_chain_map(psi, 2, 1)


def _rooted_edge_pairs(min_edges, max_edges):
    """每棵树、每个根、每对先后收缩的单边"""
    for k in range(min_edges, max_edges + 1):
        for tree in enumerate_trees(k):
            for root in tree.vertices:
                for first in tree.edge_ids:
                    middle, phi = quotient_by_edges(tree, [first], root=root)
                    for second in middle.edge_ids:
                        _, psi = quotient_by_edges(middle, [second], root=phi.target_root)
                        yield phi, psi


@pytest.mark.slow
def test_cone_maps_compose_on_chains_for_small_trees():
    for phi, psi in _rooted_edge_pairs(2, 4):
        whole = cone_chain_map(compose(phi, psi), 2, 1)
        assert whole == cone_chain_map(phi, 2, 1) @ cone_chain_map(psi, 2, 1), (phi, psi)


def test_cone_map_of_segment_has_rank_one():
    for root in ('v0', 'v1', 'v2'):
        _, phi = quotient_by_edges(path_tree(2), ['e2'], root=root)
        matrix = cone_chain_map(phi, 2, 1).induced_homology_map(1, 2)
        assert matrix.shape[1] == 1
        assert matrix.rank() == 1


def test_cone_map_needs_root(star3):
    _, phi = quotient_by_edges(star3, ['e1'])
    with pytest.raises(NotRootPreserving):
        cone_chain_map(phi, 2, 1)
