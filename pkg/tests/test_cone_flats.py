"""
测试树上锥的平坦集参数化、叶子引理与 E¹ 页
"""

import pytest

from core.canonical import is_isomorphic
from core.constructions import cone, enumerate_trees, path_tree, star_tree, subtrees
from matroid.cone_flats import (
    compositions, contracted_cone, e1_dimensions, flat_triples, groovy_cone, groovy_subsets,
    leaf_bound_report, os_factorization_check, triple_to_flat,
)
from matroid.flats import flats
from matroid.kazhdan_lusztig import ih_dimension
from utils.exceptions import TooLarge


def _small_trees(max_edges):
    for k in range(max_edges + 1):
        yield from enumerate_trees(k)


def test_groovy_subsets_of_point_and_edge():
    assert groovy_subsets(path_tree(0)) == [frozenset(), frozenset({'v0'})]
    # 单边的覆盖：{v0}, {v1}, {v0, v1}
    assert groovy_subsets(path_tree(1)) == [
        frozenset({'v0'}), frozenset({'v1'}), frozenset({'v0', 'v1'}),
    ]


def test_groovy_subsets_cover_every_edge():
    tree = star_tree(3)
    subsets = groovy_subsets(tree)
    # 含中心的 8 个，加上不含中心时的全部叶子
    assert len(subsets) == 9
    for subset in subsets:
        assert all(e.ends[0] in subset or e.ends[1] in subset for e in tree.edges)


def test_compositions_over_point_is_whole_tree(path3):
    comps = compositions(path_tree(0), path3)
    assert comps == [{'v0': frozenset(path3.vertices)}]


def test_compositions_partition_the_tree(path3):
    index_tree = path_tree(1)
    comps = compositions(index_tree, path3)
    # I_3 -> I_1：选一条边作为跨块边，再定向
    assert len(comps) == 6
    for blocks in comps:
        assert set().union(*blocks.values()) == set(path3.vertices)
        assert sum(len(b) for b in blocks.values()) == len(path3.vertices)


def test_triples_biject_onto_flats():
    for tree in _small_trees(4):
        graph, labels = cone(tree)
        lattice = flats(graph)
        triples = flat_triples(tree)
        images = [triple_to_flat(tree, t, (graph, labels)) for t in triples]
        assert len(set(images)) == len(triples)
        assert set(images) == set(lattice)


def test_triple_corank_is_groovy_size():
    for tree in _small_trees(3):
        coned = cone(tree)
        for triple in flat_triples(tree):
            assert triple_to_flat(tree, triple, coned).corank == triple.corank == len(triple.groovy)


def test_corank_one_triples_count_subtrees():
    for tree in _small_trees(4):
        corank_one = [t for t in flat_triples(tree) if t.corank == 1]
        assert len(corank_one) == subtrees(tree)


def test_triangle_triples():
    tree = path_tree(1)
    triples = flat_triples(tree)
    assert len(triples) == 5
    assert [t.corank for t in triples].count(1) == 3


def test_contracted_cone_is_groovy_cone():
    for tree in _small_trees(4):
        coned = cone(tree)
        for triple in flat_triples(tree):
            assert is_isomorphic(contracted_cone(tree, triple, coned), groovy_cone(triple))


def test_triple_guard():
    with pytest.raises(TooLarge):
        flat_triples(path_tree(3), max_edges=2)


def test_leaf_lemma_holds_on_small_trees():
    for tree in _small_trees(6):
        if tree.size < 1:
            continue
        report = leaf_bound_report(tree, triples=tree.size <= 4)
        assert report['violations'] == []
        assert report['lemma_slack'] >= 0


def test_leaf_corollary_slack_on_star():
    report = leaf_bound_report(star_tree(3))
    assert report['leaves'] == 3
    assert report['corollary_slack'] >= 0
    # 取中心一侧：|T| = 3 <= 2·1 + 3 - 2
    assert report['lemma_slack'] == 0


def test_e1_on_triangle():
    dims = e1_dimensions(path_tree(1), 1)
    assert dims[(0, 1)] == 3
    assert dims[(1, 1)] == 3
    assert sum(dims.values()) == 6


def test_e1_dominates_intersection_homology():
    for tree in _small_trees(3):
        graph, _ = cone(tree)
        for i in range(1, 3):
            dims = e1_dimensions(tree, i)
            assert sum(dims.values()) >= ih_dimension(graph, i)


def test_os_factorization_uses_coned_outside_blocks():
    for tree in (path_tree(2), star_tree(3), path_tree(3)):
        for triple in flat_triples(tree):
            result = os_factorization_check(tree, triple)
            assert 'coned_outside' in result['matches']
