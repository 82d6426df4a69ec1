from .flats import (
    Flat, FlatLattice, flats, closure, is_flat, flat_from_edges, minor, connected_partitions,
    rank_one_count, corank_one_count,
)
from .characteristic import (
    characteristic_polynomial, characteristic_polynomial_mobius, os_dimensions, convolve,
)
from .kazhdan_lusztig import kl_polynomial, ih_dimension
from .cone_flats import (
    ConeFlatTriple, groovy_subsets, compositions, flat_triples, triple_to_flat,
    contracted_cone, groovy_cone, leaf_bound_report, e1_dimensions, os_factorization_check,
)

__all__ = [
    'Flat',
    'FlatLattice',
    'flats',
    'closure',
    'is_flat',
    'flat_from_edges',
    'minor',
    'connected_partitions',
    'rank_one_count',
    'corank_one_count',
    'characteristic_polynomial',
    'characteristic_polynomial_mobius',
    'os_dimensions',
    'convolve',
    'kl_polynomial',
    'ih_dimension',
    'ConeFlatTriple',
    'groovy_subsets',
    'compositions',
    'flat_triples',
    'triple_to_flat',
    'contracted_cone',
    'groovy_cone',
    'leaf_bound_report',
    'e1_dimensions',
    'os_factorization_check',
]
