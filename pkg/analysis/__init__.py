from .invariants import InvariantSpec, grid_tree
from .oracles import ORACLES, closed_form_oracle, oracle_parameters
from .growth import (
    GrowthReport, invariant_grid, growth_report, cross_check, bounded_growth_sweep,
    biconnected_stability, grid_points, expand_window,
)

__all__ = [
    'InvariantSpec',
    'grid_tree',
    'ORACLES',
    'closed_form_oracle',
    'oracle_parameters',
    'GrowthReport',
    'invariant_grid',
    'growth_report',
    'cross_check',
    'bounded_growth_sweep',
    'biconnected_stability',
    'grid_points',
    'expand_window',
]
