from .graph import Edge, Graph, Tree, RootedTree
from .morphisms import (
    Contraction, GraphEmbedding, OrderEmbedding, make_contraction, make_embedding,
    make_order_embedding, identity_contraction, identity_embedding, compose,
    quotient_by_edges, rooted_duality,
)
from .canonical import CanonicalForm, canonical_form, is_isomorphic, tree_isomorphisms
from .constructions import (
    path_tree, star_tree, enumerate_trees, disjoint_union, wedge, simplify, cone,
    ConeLabels, ConeOfContraction, cone_of_contraction, OITuple, compose_oi, subdivide,
    subdivision_induced, sprout, sprout_induced, hom_contractions, hom_count, subtrees,
)

__all__ = [
    'Edge',
    'Graph',
    'Tree',
    'RootedTree',
    'Contraction',
    'GraphEmbedding',
    'OrderEmbedding',
    'make_contraction',
    'make_embedding',
    'make_order_embedding',
    'identity_contraction',
    'identity_embedding',
    'compose',
    'quotient_by_edges',
    'rooted_duality',
    'CanonicalForm',
    'canonical_form',
    'is_isomorphic',
    'tree_isomorphisms',
    'path_tree',
    'star_tree',
    'enumerate_trees',
    'disjoint_union',
    'wedge',
    'simplify',
    'cone',
    'ConeLabels',
    'ConeOfContraction',
    'cone_of_contraction',
    'OITuple',
    'compose_oi',
    'subdivide',
    'subdivision_induced',
    'sprout',
    'sprout_induced',
    'hom_contractions',
    'hom_count',
    'subtrees',
]
