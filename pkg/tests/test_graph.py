"""
测试图、树与有根树
"""

import pytest

from core.graph import Edge, Graph, RootedTree, Tree
from utils.exceptions import (
    DuplicateEdge, DuplicateVertex, InvalidGraph, NotATree, UnknownEdge, UnknownVertex,
)


def test_vertices_and_edges_in_natural_order():
    graph = Graph(['v10', 'v2', 'v1'], [('e10', 'v1', 'v2'), ('e2', 'v2', 'v10')])
    assert graph.vertices == ('v1', 'v2', 'v10')
    assert graph.edge_ids == ('e2', 'e10')
    assert graph.size == 2


def test_half_edges_and_degree_count_loops_twice():
    graph = Graph(['a', 'b'], [('l', 'a', 'a'), ('x', 'a', 'b')])
    assert graph.half_edges('a') == (('l', 0), ('l', 1), ('x', 0))
    assert graph.degree('a') == 3
    assert graph.neighbors('a') == {'b'}
    assert graph.vertex_of(('x', 1)) == 'b'


def test_rejects_bad_input():
    with pytest.raises(DuplicateVertex):
        Graph(['a', 'a'])
    with pytest.raises(DuplicateEdge):
        Graph(['a', 'b'], [('x', 'a', 'b'), ('x', 'b', 'a')])
    with pytest.raises(UnknownVertex):
        Graph(['a'], [('x', 'a', 'b')])
    with pytest.raises(InvalidGraph):
        Edge('x', ('a',))
    with pytest.raises(UnknownEdge):
        Graph(['a']).edge('x')


def test_components_and_rank():
    graph = Graph(['a', 'b', 'c', 'd'], [('x', 'a', 'b'), ('y', 'a', 'b')])
    assert graph.components == (frozenset({'a', 'b'}), frozenset({'c'}), frozenset({'d'}))
    assert graph.rank == 1
    assert not graph.is_connected
    assert not graph.is_tree()


def test_tree_validation(path3):
    assert path3.is_tree()
    assert path3.leaves() == ['v0', 'v3']
    with pytest.raises(NotATree):
        Tree(['a', 'b'], [('x', 'a', 'b'), ('y', 'a', 'b')])
    with pytest.raises(NotATree):
        Tree(['a', 'b'])


def test_single_vertex_is_a_tree():
    tree = Tree(['v0'])
    assert tree.size == 0
    assert tree.leaves() == []


def test_induces_connected(path3):
    assert path3.induces_connected({'v1', 'v2'})
    assert not path3.induces_connected({'v0', 'v2'})
    assert not path3.induces_connected(set())


def test_rooted_order(path3):
    rooted = RootedTree(path3, 'v0')
    assert rooted.ancestors('v3') == ['v3', 'v2', 'v1', 'v0']
    assert rooted.leq('v3', 'v1')
    assert not rooted.leq('v1', 'v3')
    assert rooted.maximum(['v2', 'v3']) == 'v2'
    with pytest.raises(UnknownVertex):
        RootedTree(path3, 'x')


def test_equality_and_hash(path3):
    same = Tree(['v3', 'v2', 'v1', 'v0'], list(reversed(path3.edges)))
    assert same == path3
    assert hash(same) == hash(path3)
