"""
测试规范形与各种构造
"""

from collections import Counter
from itertools import product

import pytest

from core.canonical import canonical_form, is_isomorphic, tree_isomorphisms
from core.constructions import (
    OITuple, compose_oi, cone, cone_of_contraction, disjoint_union, enumerate_trees,
    hom_contractions, hom_count, path_tree, simplify, sprout, sprout_induced, star_tree,
    subdivide, subdivision_induced, subtrees, wedge,
)
from core.graph import Graph, RootedTree, Tree
from core.morphisms import compose, quotient_by_edges
from utils.exceptions import InvalidOIMap, NotRootPreserving, TooLarge, UnknownEdge


# ----------------------------------------------------------------------
# 规范形
# ----------------------------------------------------------------------
def test_tree_canonical_form(path3, star3):
    assert canonical_form(star3).automorphisms == 6
    assert canonical_form(star3).edge_orbits == 1
    assert canonical_form(path3).automorphisms == 2
    assert canonical_form(path3).edge_orbits == 2
    relabelled = Tree(['a', 'b', 'c', 'd'], [('x', 'c', 'a'), ('y', 'a', 'b'), ('z', 'b', 'd')])
    assert is_isomorphic(path3, relabelled)
    assert not is_isomorphic(path3, star3)


def test_rooted_canonical_form():
    path = path_tree(2)
    assert canonical_form(RootedTree(path, 'v0')).code == canonical_form(RootedTree(path, 'v2')).code
    assert canonical_form(RootedTree(path, 'v0')).code != canonical_form(RootedTree(path, 'v1')).code


def test_general_canonical_form(k4, theta):
    assert canonical_form(k4).automorphisms == 24
    assert canonical_form(k4).edge_orbits == 1
    assert canonical_form(theta).automorphisms == 12


def test_general_canonical_form_guard(k4):
    with pytest.raises(TooLarge):
        canonical_form(k4, max_vertices=3)


def test_enumerate_trees_counts():
    assert [len(enumerate_trees(k)) for k in range(7)] == [1, 1, 1, 2, 3, 6, 11]


def test_tree_isomorphisms_of_star(star3):
    assert len(list(tree_isomorphisms(star3, star3))) == 6


# ----------------------------------------------------------------------
# 并、粘合与化简
# ----------------------------------------------------------------------
def test_disjoint_union_renames_clashes():
    union = disjoint_union(path_tree(1), path_tree(1))
    assert len(union.vertices) == 4
    assert union.size == 2
    assert len(union.components) == 2


def test_wedge_identifies_one_vertex():
    glued = wedge(path_tree(1), 'v1', path_tree(1), 'v0')
    assert len(glued.vertices) == 3
    assert glued.is_tree()


def test_simplify(theta):
    graph = Graph(['a', 'b'], [('x', 'a', 'b'), ('l', 'a', 'a'), ('y', 'b', 'a')])
    simple, classes = simplify(graph)
    assert simple.edge_ids == ('x',)
    assert classes == {'x': 'x', 'y': 'x'}
    assert simplify(theta)[0].size == 1


# ----------------------------------------------------------------------
# 锥
# ----------------------------------------------------------------------
def test_cone_labels():
    graph, labels = cone(path_tree(2))
    assert labels.apex == 'p'
    assert labels.cone_edges == {'v0': 'cv0', 'v1': 'cv1', 'v2': 'cv2'}
    assert graph.size == 5
    assert graph.degree('p') == 3


def test_cone_of_contraction():
    path = path_tree(2)
    _, phi = quotient_by_edges(path, ['e1'], root='v0')
    g_phi, projection, inclusion, apex = cone_of_contraction(phi)
    assert len(g_phi.vertices) == 3
    assert g_phi.size == 1 + 3
    assert projection.target == g_phi
    assert inclusion.vertex_map[apex] == apex
    with pytest.raises(NotRootPreserving):
        cone_of_contraction(quotient_by_edges(path, ['e1'])[1])


# ----------------------------------------------------------------------
# 细分与发芽
# ----------------------------------------------------------------------
def test_subdivide_path():
    tree, labels = subdivide(path_tree(1), ['e1'], [3])
    assert tree.size == 3
    assert labels == [('v0', 'e1/1', 'e1/2', 'v1')]
    collapsed, labels = subdivide(path_tree(1), ['e1'], [0])
    assert collapsed.size == 0
    assert labels == [('v0',)]


def test_subdivide_avoids_existing_names():
    tree = Tree(['v0', 'e1/1'], [('e1', 'v0', 'e1/1')])
    subdivided, labels = subdivide(tree, ['e1'], [3])
    assert labels == [('v0', "e1/1'", 'e1/2', 'e1/1')]
    assert len(subdivided.vertices) == 4
    clash = Tree(['a', 'b', 'c'], [('e1', 'a', 'b'), ('e1/1', 'b', 'c')])
    subdivided, _ = subdivide(clash, ['e1'], [2])
    assert subdivided.size == 3
    assert set(subdivided.edge_ids) == {"e1/1'", 'e1/2', 'e1/1'}


def test_subdivide_directed_edge():
    _, labels = subdivide(path_tree(1), [('v1', 'v0')], [2])
    assert labels[0][0] == 'v1'
    with pytest.raises(UnknownEdge):
        subdivide(path_tree(1), [('v0', 'v5')], [2])


def test_sprout_star():
    tree, labels = sprout(Tree(['v0']), ['v0'], [3])
    assert tree.size == 3
    assert labels == [('v0+1', 'v0+2', 'v0+3')]
    assert canonical_form(tree).code == canonical_form(star_tree(3)).code


def test_oi_maps_compose():
    inner = OITuple([(1, 3)], [3])
    outer = OITuple([(2, 3, 5)], [5])
    assert compose_oi(outer, inner).maps == ((2, 5),)
    with pytest.raises(InvalidOIMap):
        OITuple([(2, 1)], [3])


def test_subdivision_induced_is_functorial():
    segment = path_tree(1)
    inner = OITuple([(1, 3)], [3])
    outer = OITuple([(2, 3, 4)], [4])
    first = subdivision_induced(segment, ['e1'], outer)
    second = subdivision_induced(segment, ['e1'], inner)
    whole = subdivision_induced(segment, ['e1'], compose_oi(outer, inner))
    assert first.source.size == 4
    assert whole.target.size == 2
    assert {v: second.vertex_map[w] for v, w in first.vertex_map.items()} == whole.vertex_map


def test_sprout_induced():
    base = Tree(['v0'])
    phi = sprout_induced(base, ['v0'], OITuple([(2,)], [3]))
    assert phi.source.size == 3
    assert phi.target.size == 1
    assert phi.vertex_map['v0+2'] == 'v0+1'
    assert phi.vertex_map['v0+1'] == 'v0'


def test_sprout_induced_is_functorial():
    base = path_tree(1)
    inner = OITuple([(2,), (1, 3)], [2, 3])
    outer = OITuple([(1, 3), (2, 3, 4)], [3, 4])
    first = sprout_induced(base, ['v0', 'v1'], outer)
    second = sprout_induced(base, ['v0', 'v1'], inner)
    whole = sprout_induced(base, ['v0', 'v1'], compose_oi(outer, inner))
    assert first.source.size == 1 + 3 + 4
    assert whole.target.size == 1 + 1 + 2
    assert compose(first, second).vertex_map == whole.vertex_map


def test_cone_edge_count():
    for k in range(7):
        for tree in enumerate_trees(k):
            assert cone(tree)[0].size == 2 * tree.size + 1


# ----------------------------------------------------------------------
# Hom 集与子树
# ----------------------------------------------------------------------
def test_hom_count_path_to_segment(path3):
    assert hom_count(path3, path_tree(1)) == 6
    assert hom_count(path_tree(2), path_tree(1)) == 4
    assert hom_contractions(path_tree(1), path3) == []


def _brute_force_contractions(tree, target):
    """逐个检查顶点映射：满射、纤维导出连通、纤维间的边与目标的边一一对应"""
    found = set()
    expected_edges = Counter(frozenset(edge.ends) for edge in target.edges)
    for images in product(target.vertices, repeat=len(tree.vertices)):
        if len(set(images)) != len(target.vertices):
            continue
        vertex_map = dict(zip(tree.vertices, images))
        if not all(tree.induces_connected(
            [v for v in tree.vertices if vertex_map[v] == w]
        ) for w in target.vertices):
            continue
        crossing = Counter(
            frozenset(vertex_map[v] for v in edge.ends)
            for edge in tree.edges if vertex_map[edge.ends[0]] != vertex_map[edge.ends[1]]
        )
        if crossing == expected_edges:
            found.add(tuple(sorted(vertex_map.items())))
    return found


@pytest.mark.slow
def test_hom_contractions_match_brute_force():
    trees = [tree for k in range(6) for tree in enumerate_trees(k)]
    for tree in trees:
        for target in trees:
            if target.size > tree.size:
                continue
            homs = hom_contractions(tree, target)
            listed = {tuple(sorted(phi.vertex_map.items())) for phi in homs}
            assert len(listed) == hom_count(tree, target)
            assert listed == _brute_force_contractions(tree, target)


def test_subtree_counts(path3, star3):
    assert subtrees(path3) == 10
    assert subtrees(star3) == 2 ** 3 + 3
    count, listing = subtrees(star3, listing=True)
    assert len(listing) == count
    assert len(set(listing)) == count
