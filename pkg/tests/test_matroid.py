"""
测试平坦集、特征多项式与 Kazhdan–Lusztig 多项式
"""

import pytest

from analysis.oracles import fan_ih, thag_ih2
from core.constructions import cone, path_tree, star_tree
from core.graph import Graph
from matroid.characteristic import (
    characteristic_polynomial, characteristic_polynomial_mobius, convolve, os_dimensions,
    strip_isolated,
)
from matroid.flats import (
    closure, corank_one_count, flat_from_edges, flats, is_flat, minor, rank_one_count,
)
from matroid.kazhdan_lusztig import ih_dimension, kl_polynomial
from utils.exceptions import NotAFlat, TooLarge, UnknownEdge


@pytest.fixture
def k3():
    return Graph(['a', 'b', 'c'], [('ab', 'a', 'b'), ('bc', 'b', 'c'), ('ac', 'a', 'c')])


def test_triangle_lattice(k3):
    lattice = flats(k3)
    assert len(lattice) == 5
    assert lattice.summary() == {0: 1, 1: 3, 2: 1}
    assert lattice.bottom.rank == 0
    assert lattice.top.edges == frozenset({'ab', 'bc', 'ac'})


def test_complete_graph_lattice(k4):
    lattice = flats(k4)
    # 全部划分都连通：Bell(4)
    assert len(lattice) == 15
    assert rank_one_count(k4) == 6
    assert corank_one_count(k4) == 7
    assert lattice.mobius_from_bottom[lattice.top] == -6


def test_tree_flats_are_edge_subsets():
    for m in range(4):
        assert len(flats(path_tree(m))) == 2 ** m
        assert len(flats(star_tree(m))) == 2 ** m


def test_flat_order(k4):
    lattice = flats(k4)
    for flat in lattice:
        assert lattice.bottom.leq(flat)
        assert flat.leq(lattice.top)
    for rank in range(k4.rank + 1):
        assert all(f.rank == rank for f in lattice.by_rank(rank))


def test_closure(k3):
    assert closure(k3, {'ab', 'bc'}).edges == frozenset({'ab', 'bc', 'ac'})
    assert closure(k3, set()).rank == 0
    assert is_flat(k3, {'ab'})
    assert not is_flat(k3, {'ab', 'bc'})
    with pytest.raises(UnknownEdge):
        closure(k3, {'zz'})


def test_flat_from_edges(k3):
    assert flat_from_edges(k3, {'ab'}).rank == 1
    with pytest.raises(NotAFlat):
        flat_from_edges(k3, {'ab', 'bc'})


def test_minor(k4):
    flat = closure(k4, {'ab'})
    restriction, contracted = minor(k4, flat)
    assert restriction.vertices == k4.vertices
    assert restriction.size == 1
    assert restriction.rank == 1
    assert len(contracted.vertices) == 3
    assert contracted.size == 5
    assert contracted.rank == 2


def test_minor_rejects_foreign_flat(k3, k4):
    with pytest.raises(NotAFlat):
        minor(k4, closure(k3, {'ab'}))


def test_flat_guard(k4):
    with pytest.raises(TooLarge):
        flats(k4, max_vertices=3)


def test_characteristic_polynomials(k3, k4, theta):
    assert characteristic_polynomial(k3).to_list() == [2, -3, 1]
    assert characteristic_polynomial(k4).to_list() == [-6, 11, -6, 1]
    assert characteristic_polynomial(theta).to_list() == [-1, 1]
    for m in range(4):
        expected = characteristic_polynomial(Graph(['a', 'b'], [('x', 'a', 'b')])) ** m
        assert characteristic_polynomial(path_tree(m)) == expected


def test_loop_gives_zero_polynomial():
    graph = Graph(['a', 'b'], [('x', 'a', 'b'), ('l', 'a', 'a')])
    assert characteristic_polynomial(graph).is_zero()
    assert characteristic_polynomial_mobius(graph).is_zero()


def test_isolated_vertices_do_not_change_matroid(k3):
    padded = Graph(list(k3.vertices) + ['z'], k3.edges)
    assert strip_isolated(padded).vertices == k3.vertices
    assert characteristic_polynomial(padded) == characteristic_polynomial(k3)
    assert kl_polynomial(padded) == kl_polynomial(k3)


def test_mobius_sum_agrees_with_deletion_contraction(k3, k4, theta, fan3):
    for graph in (k3, k4, theta, fan3, star_tree(3), cone(star_tree(3))[0]):
        assert characteristic_polynomial_mobius(graph) == characteristic_polynomial(graph)


def test_os_dimensions(k3, k4):
    assert os_dimensions(k3) == [1, 3, 2]
    assert os_dimensions(k4) == [1, 6, 11, 6]
    assert os_dimensions(path_tree(2)) == [1, 2, 1]


def test_convolve():
    assert convolve([1, 1], [1, 2, 1]) == [1, 3, 3, 1]
    assert convolve([1], [1, 3, 2]) == [1, 3, 2]
    assert convolve([], [1]) == []


def test_kl_small_graphs(k3, k4, fan3):
    assert kl_polynomial(k3).to_list() == [1]
    assert kl_polynomial(k4).to_list() == [1, 1]
    assert kl_polynomial(fan3).to_list() == [1, 3]
    assert kl_polynomial(cone(path_tree(4))[0]).to_list() == [1, 6, 2]
    assert kl_polynomial(path_tree(3)).to_list() == [1]


def test_kl_degree_bound(k4):
    for graph in (k4, cone(star_tree(3))[0], cone(path_tree(5))[0]):
        poly = kl_polynomial(graph)
        assert poly.coefficient(0) == 1
        assert 2 * poly.degree < graph.rank


def test_ih_dimension_matches_fan_and_thagomizer():
    for m in range(2, 6):
        fan = cone(path_tree(m))[0]
        for i in range(3):
            assert ih_dimension(fan, i) == fan_ih(m, i)
    for m in range(1, 5):
        assert ih_dimension(cone(star_tree(m))[0], 1) == thag_ih2(m)


def test_ih_dimension_out_of_range(k4):
    assert ih_dimension(k4, -1) == 0
    assert ih_dimension(k4, 5) == 0
