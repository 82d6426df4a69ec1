from .swiatkowski import (
    SwiatkowskiComplex, build_complex, homology, betti, euler_characteristic,
    chain_euler_characteristic, essential_vertex_count, homology_degree_bound, piece_rank_formula,
)
from .chain_maps import (
    ChainMap, embedding_chain_map, contraction_chain_map, cone_chain_map, identity_chain_map,
)

__all__ = [
    'SwiatkowskiComplex',
    'build_complex',
    'homology',
    'betti',
    'euler_characteristic',
    'chain_euler_characteristic',
    'essential_vertex_count',
    'homology_degree_bound',
    'piece_rank_formula',
    'ChainMap',
    'embedding_chain_map',
    'contraction_chain_map',
    'cone_chain_map',
    'identity_chain_map',
]
