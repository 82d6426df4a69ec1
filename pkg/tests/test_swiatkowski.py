"""
测试约化 Świątkowski 复形与构形空间同调
"""

import pytest

from analysis.oracles import gal_chi_cone_star, gal_chi_star, star_b1
from core.constructions import cone, enumerate_trees, path_tree, star_tree
from core.graph import Graph, Tree
from algebra.homology import HomologyGroup
from topology.swiatkowski import (
    betti, build_complex, chain_euler_characteristic, essential_vertex_count,
    euler_characteristic, homology, homology_degree_bound, piece_rank_formula,
)
from utils.exceptions import BoundsTooLarge, OutOfBounds


def test_piece_rank_formula_matches_basis(star3, theta):
    for graph in (star3, theta, Graph(['a', 'b', 'c'], [('x', 'a', 'b')])):
        complex_ = build_complex(graph, 3, 1)
        for i, n in complex_.bidegrees():
            assert len(complex_.basis(i, n)) == piece_rank_formula(graph, i, n)


def test_boundary_squares_to_zero(k4, fan3):
    for graph in (k4, fan3, star_tree(4)):
        assert build_complex(graph, 3, 2).check_square_zero() == []


def test_star_homology(star3):
    assert homology(star3, 1, 2) == HomologyGroup(1, ())
    assert homology(star3, 0, 2) == HomologyGroup(1, ())
    for m in range(1, 5):
        for n in range(1, 4):
            assert betti(star_tree(m), 1, n) == star_b1(m, n)


def test_trees_have_no_torsion():
    for tree in enumerate_trees(4):
        for n in range(1, 4):
            assert homology(tree, 1, n).torsion == ()


def test_one_particle_recovers_graph_homology(theta, k4):
    assert betti(theta, 1, 1) == 2
    assert betti(k4, 1, 1) == 3
    assert betti(k4, 0, 1) == 1


def test_isolated_vertices_carry_occupancy():
    graph = Graph(['a', 'b', 'c'], [('x', 'a', 'b')])
    assert betti(graph, 0, 1) == 2
    assert betti(graph, 1, 1) == 0
    point = Tree(['v0'])
    assert betti(point, 0, 0) == 1
    assert betti(point, 0, 1) == 1
    assert betti(point, 0, 2) == 0


def test_path_is_contractible_for_every_n():
    for n in range(4):
        assert betti(path_tree(3), 0, n) == 1
        assert betti(path_tree(3), 1, n) == 0


def test_euler_characteristic_matches_series():
    for m in range(1, 4):
        for n in range(4):
            assert euler_characteristic(star_tree(m), n) == gal_chi_star(m, n)
            assert euler_characteristic(cone(star_tree(m))[0], n) == gal_chi_cone_star(m, n)


def test_segment_euler_characteristic_is_one():
    assert euler_characteristic(star_tree(1), 3) == 1
    assert chain_euler_characteristic(star_tree(1), 3) == 1


def test_essential_vertex_count(star3, fan3):
    assert essential_vertex_count(star3) == 1
    assert essential_vertex_count(fan3) == 3


def test_circles_raise_the_degree_bound(theta):
    triangle = cone(path_tree(1))[0]
    assert essential_vertex_count(triangle) == 0
    assert homology_degree_bound(triangle) == 1
    assert betti(triangle, 1, 3) == 1
    assert euler_characteristic(triangle, 3) == 0
    assert homology_degree_bound(theta) == 2
    two_circles = Graph(['a', 'b'], [('x', 'a', 'a'), ('y', 'b', 'b')])
    assert homology_degree_bound(two_circles) == 2
    assert betti(two_circles, 2, 2) == 1


def test_guards():
    with pytest.raises(BoundsTooLarge):
        build_complex(star_tree(3), 6, 1, max_generators=5)
    with pytest.raises(OutOfBounds):
        homology(star_tree(3), -1, 2)
    with pytest.raises(OutOfBounds):
        build_complex(star_tree(3), 2, 1).homology(3, 2)


def test_pieces_vanish_below_the_diagonal():
    graph = cone(star_tree(3))[0]
    complex_ = build_complex(graph, 2, 1)
    for i, n in complex_.bidegrees():
        if i > n:
            assert len(complex_.basis(i, n)) == piece_rank_formula(graph, i, n) == 0
    with_isolated = build_complex(Graph(['a', 'b', 'c'], [('x', 'a', 'b')]), 1, 1)
    assert with_isolated.basis(2, 1) == []
    assert with_isolated.boundary(1, 0).shape == (1, 0)


def test_zero_particles():
    assert homology(path_tree(2), 0, 0) == HomologyGroup(1, ())
    assert betti(star_tree(3), 0, 0) == 1


@pytest.mark.slow
def test_piece_rank_formula_on_small_graphs(theta, k4):
    loop = Graph(['a', 'b', 'c'], [('l', 'a', 'a'), ('x', 'a', 'b')])
    graphs = [tree for k in range(9) for tree in enumerate_trees(k)]
    graphs += [cone(tree)[0] for k in range(4) for tree in enumerate_trees(k)]
    graphs += [theta, k4, loop, Graph(['a', 'b'])]
    for graph in graphs:
        assert graph.size <= 8
        complex_ = build_complex(graph, 3, 2)
        for i, n in complex_.bidegrees():
            assert len(complex_.basis(i, n)) == piece_rank_formula(graph, i, n)


@pytest.mark.slow
def test_homology_vanishes_above_degree_bound():
    graphs = [tree for k in range(1, 6) for tree in enumerate_trees(k)]
    graphs += [cone(path_tree(1))[0], cone(star_tree(2))[0]]
    for graph in graphs:
        top = homology_degree_bound(graph)
        for n in range(top + 2, 5):
            assert homology(graph, top + 1, n) == HomologyGroup(0, ())
