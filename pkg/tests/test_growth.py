"""
测试网格求值、多项式增长报告与交叉验证
"""

import pytest

from analysis.growth import (
    biconnected_stability, bounded_growth_sweep, cross_check, expand_window, grid_points,
    growth_report, invariant_grid,
)
from analysis.invariants import InvariantSpec, grid_tree
from analysis.oracles import b1_cone_tree
from core.constructions import path_tree, star_tree
from utils.exceptions import OutOfBounds, ValidationError, WindowTooSmall


def test_expand_window():
    assert expand_window([(0, 3)], 2) == ((0, 3), (0, 3))
    assert expand_window([(0, 3), (1, 2)], 2) == ((0, 3), (1, 2))
    with pytest.raises(ValidationError):
        expand_window([(0, 3), (1, 2)], 3)


def test_grid_points_lexicographic():
    assert grid_points(((0, 1), (2, 3))) == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_grid_tree_modes():
    assert grid_tree(path_tree(1), 'subdivide', ['e1'], (3,)).size == 3
    assert grid_tree(path_tree(0), 'sprout', ['v0'], (4,)).size == 4
    with pytest.raises(ValidationError):
        grid_tree(path_tree(1), 'graft', ['e1'], (3,))
    with pytest.raises(ValidationError):
        grid_tree(path_tree(1), 'subdivide', ['e1'], (3, 1))


def test_invariant_spec_validation():
    with pytest.raises(ValidationError):
        InvariantSpec('volume')
    with pytest.raises(ValidationError):
        InvariantSpec('betti', {'i': 1})
    with pytest.raises(OutOfBounds):
        InvariantSpec('ih_cone', {'i': -1})
    with pytest.raises(ValidationError):
        InvariantSpec('subtree_count', base=path_tree(1), root='nowhere')
    assert InvariantSpec('betti', {'i': 1, 'n': 2}).params['coeff'] == 'q'


def test_invariant_spec_evaluate(star3):
    assert InvariantSpec('betti', {'i': 1, 'n': 2}).evaluate(star3) == 1
    assert InvariantSpec('betti', {'i': 1, 'n': 2, 'coeff': 'z'}).evaluate(star3) == 1
    assert InvariantSpec('ih_cone', {'i': 1}).evaluate(star3) == 4
    assert InvariantSpec('subtree_count').evaluate(star3) == 11
    assert InvariantSpec('hom_count', {'target': path_tree(1)}).evaluate(path_tree(3)) == 6


def test_subtree_count_grows_quadratically():
    spec = InvariantSpec('subtree_count', base=path_tree(1))
    samples = invariant_grid(spec, 'subdivide', ['e1'], [(0, 6)])
    assert samples == {(m,): (m + 1) * (m + 2) // 2 for m in range(7)}
    report = growth_report(samples, 2, 'subdivide', ['e1'], invariant=spec.label())
    assert report.passed
    assert report.fit.total_degree == 2
    assert report.to_dict()['verdict'] == 'pass'
    assert all(residual == 0 for _, _, _, residual in report.rows())


def test_growth_report_rejects_low_degree():
    spec = InvariantSpec('subtree_count', base=path_tree(1))
    samples = invariant_grid(spec, 'subdivide', ['e1'], [(0, 6)])
    report = growth_report(samples, 1)
    assert not report.passed
    assert report.stabilization == "not stable on window"


def test_growth_report_window_too_small():
    samples = {(m,): m for m in range(3)}
    with pytest.raises(WindowTooSmall):
        growth_report(samples, 2)


def test_two_parameter_grid():
    spec = InvariantSpec('subtree_count', base=path_tree(2))
    samples = invariant_grid(spec, 'subdivide', ['e1', 'e2'], [(0, 5)])
    assert len(samples) == 36
    # 细分后仍是路径 I_{a+b}
    assert samples[(2, 3)] == 21
    report = growth_report(samples, 2)
    assert report.passed


def test_cross_check_fan():
    spec = InvariantSpec('ih_cone', {'i': 1}, base=path_tree(1))
    result = cross_check(spec, 'fan_ih', 'subdivide', ['e1'], [(1, 5)], fixed={'i': 1})
    assert result['passed']
    assert [row['point'] for row in result['rows']] == [[m] for m in range(1, 6)]


def test_cross_check_thagomizer():
    spec = InvariantSpec('ih_cone', {'i': 1}, base=path_tree(0))
    result = cross_check(spec, 'thag_ih2', 'sprout', ['v0'], [(0, 4)])
    assert result['passed']


def test_cross_check_reports_failures():
    spec = InvariantSpec('ih_cone', {'i': 1}, base=path_tree(1))
    result = cross_check(spec, 'thag_ih2', 'subdivide', ['e1'], [(3, 4)])
    assert not result['passed']
    assert result['failures']


def test_cross_check_tree_oracle():
    spec = InvariantSpec('ih_cone', {'i': 1}, base=star_tree(2))
    result = cross_check(spec, 'ih2_via_subtrees', 'sprout', ['v1'], [(0, 2)])
    assert result['passed']


@pytest.mark.slow
def test_cross_check_subdivided_star():
    spec = InvariantSpec('ih_cone', {'i': 1}, base=star_tree(3))
    result = cross_check(spec, 'ih2_subdivided_star', 'subdivide', ['e1', 'e2', 'e3'], [(1, 2)])
    assert result['passed']


def test_bounded_growth_sweep():
    result = bounded_growth_sweep(path_tree(1), 4)
    assert result['violations'] == []
    assert {row['edges'] for row in result['rows']} == set(range(5))


def test_biconnected_stability():
    tree = star_tree(2)
    result = biconnected_stability(tree, range(2, 4))
    assert result['stable']
    assert set(result['values'].values()) == {b1_cone_tree(tree)}


@pytest.mark.slow
def test_biconnected_stability_up_to_five_particles():
    for tree in (path_tree(1), star_tree(2)):
        result = biconnected_stability(tree, range(2, 6))
        assert result['stable']
        assert set(result['values'].values()) == {b1_cone_tree(tree)}
