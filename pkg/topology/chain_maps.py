"""
Świątkowski 复形之间的链映射

图嵌入协变地诱导链映射（标签重命名）；收缩逆变地诱导链映射，
分解为按边序逐条的简单收缩再复合；锥上的映射经由 G_φ 拼接。
"""

import logging
from collections import defaultdict
from itertools import product

from algebra.homology import induced_map_on_homology, rational_homology_basis
from algebra.matrices import IntMatrix
from core.constructions import cone_of_contraction
from core.morphisms import Contraction, GraphEmbedding, make_embedding, quotient_by_edges
from topology.swiatkowski import build_complex
from utils.exceptions import (
    Incomposable, InvalidContraction, NotInjective, NotRootPreserving, OutOfBounds,
)
from utils.helpers import natural_key, permutation_sign

logger = logging.getLogger(__name__)


class ChainMap:
    """逐双次数给出的整数矩阵，source 与 target 截断范围一致"""

    def __init__(self, source, target, matrices):
        self.source = source
        self.target = target
        self.matrices = dict(matrices)

    def matrix(self, i, n):
        try:
            return self.matrices[(i, n)]
        except KeyError:
            raise OutOfBounds(f"链映射在双次数 ({i}, {n}) 上没有存储") from None

    def __matmul__(self, other):
        """self ∘ other：先 other 再 self"""
        if not (other.target.graph.same_as(self.source.graph)
                and other.target.n_max == self.source.n_max
                and other.target.i_max == self.source.i_max):
            raise Incomposable("链映射的源与目标不一致")
        matrices = {key: self.matrices[key] @ other.matrices[key] for key in self.matrices}
        return ChainMap(other.source, self.target, matrices)

    def failures(self):
        """∂·M 与 M·∂ 不相等的双次数"""
        bad = []
        for (i, n), matrix in sorted(self.matrices.items()):
            if i == 0:
                continue
            left = self.target.boundary(i, n) @ matrix
            right = self.matrices[(i - 1, n)] @ self.source.boundary(i, n)
            if left != right:
                bad.append((i, n))
        return bad

    def commutes(self):
        return not self.failures()

    def induced_homology_map(self, i, n):
        """
        H_i(·; Q) 上的诱导矩阵

        Args:
            i: 同调次数（须 <= i_max）
            n: 粒子数

        Returns:
            sympy Matrix: dim H_i(目标) × dim H_i(源)
        """
        if i > self.source.i_max or (i + 1, n) not in self.matrices:
            raise OutOfBounds(f"诱导映射需要双次数 ({i}, {n}) 与 ({i + 1}, {n})")
        source_basis = rational_homology_basis(
            self.source.boundary(i, n), self.source.boundary(i + 1, n)
        )
        target_basis = rational_homology_basis(
            self.target.boundary(i, n), self.target.boundary(i + 1, n)
        )
        return induced_map_on_homology(self.matrix(i, n), source_basis, target_basis)

    def __eq__(self, other):
        return isinstance(other, ChainMap) and self.matrices == other.matrices

    def __repr__(self):
        return f"ChainMap({self.source.graph!r} -> {self.target.graph!r})"


# ----------------------------------------------------------------------
# 通用组装
# ----------------------------------------------------------------------
def _difference(graph, vertex, plus, minus):
    """
    h+ - h- 在 vertex 处差分基 {h^(j) - h^(0)} 下的展开

    Returns:
        dict: {(vertex, j): 系数}
    """
    half_edges = graph.half_edges(vertex)
    position = {h: k for k, h in enumerate(half_edges)}
    terms = defaultdict(int)
    if position[plus]:
        terms[(vertex, position[plus])] += 1
    if position[minus]:
        terms[(vertex, position[minus])] -= 1
    return {key: c for key, c in terms.items() if c}


def _assemble(source, target, expand):
    """
    由生成元的像构造链映射

    expand(generator) 返回 (系数, 像单项式的边下标列表, 像占据集, [每个因子的展开 dict])。
    """
    matrices = {}
    for i, n in source.bidegrees():
        index = target.index(i, n)
        matrix = IntMatrix(len(index), source.rank(i, n))
        for col, generator in enumerate(source.basis(i, n)):
            coefficient, monomial, occupied, options = expand(generator)
            if not coefficient:
                continue
            monomial = tuple(sorted(monomial))
            occupied = tuple(sorted(occupied, key=lambda v: target.vertex_position[v]))
            for choice in product(*(sorted(option.items()) for option in options)):
                factors = [key for key, _ in choice]
                if len({v for v, _ in factors}) != len(factors):
                    continue
                value = coefficient
                for _, c in choice:
                    value *= c
                order = [target.vertex_position[v] for v, _ in factors]
                value *= permutation_sign(order)
                factors = tuple(sorted(factors, key=lambda f: target.vertex_position[f[0]]))
                matrix.add(index[(monomial, occupied, factors)], col, value)
        matrices[(i, n)] = matrix
    return ChainMap(source, target, matrices)


def _occupancy_image(target_graph, target_edges, vertex):
    """孤立点的占据映到像顶点：仍孤立则占据，否则乘以该点处最小的边"""
    if target_graph.degree(vertex) == 0:
        return None
    smallest = min((h[0] for h in target_graph.half_edges(vertex)), key=natural_key)
    return target_edges[smallest]


# ----------------------------------------------------------------------
# 嵌入
# ----------------------------------------------------------------------
def embedding_chain_map(embedding, n_max, i_max, max_generators=None):
    """
    图嵌入 ι: G -> G' 诱导的链映射 S̃(G) -> S̃(G')

    Args:
        embedding: GraphEmbedding
        n_max, i_max: 截断范围
        max_generators: 生成元上限

    Returns:
        ChainMap
    """
    if not isinstance(embedding, GraphEmbedding):
        raise NotInjective("需要 GraphEmbedding")
    vertex_map = embedding.vertex_map
    if len(set(vertex_map.values())) != len(vertex_map):
        raise NotInjective("顶点映射不是单射")
    source = build_complex(embedding.source, n_max, i_max, max_generators)
    target = build_complex(embedding.target, n_max, i_max, max_generators)
    graph, image_graph = embedding.source, embedding.target
    source_edges = graph.edge_ids
    target_edges = target.edge_index

    def expand(generator):
        monomial, occupied, factors = generator
        edges = [target_edges[embedding.edge_map[source_edges[k]]] for k in monomial]
        new_occupied = []
        for v in occupied:
            extra = _occupancy_image(image_graph, target_edges, vertex_map[v])
            if extra is None:
                new_occupied.append(vertex_map[v])
            else:
                edges.append(extra)
        options = []
        for v, j in factors:
            half_edges = graph.half_edges(v)
            plus = embedding.half_edge_image(half_edges[j])
            minus = embedding.half_edge_image(half_edges[0])
            options.append(_difference(image_graph, vertex_map[v], plus, minus))
        return 1, edges, new_occupied, options

    return _assemble(source, target, expand)


# ----------------------------------------------------------------------
# 收缩
# ----------------------------------------------------------------------
def _simple_contraction_map(graph, edge_id, n_max, i_max, max_generators):
    """
    单边收缩 G -> G/e 诱导的 S̃(G/e) -> S̃(G)

    合并顶点处的半边 h 在 G 中位于 e 的某一端：位于 a 端时映到 (h - h_0) ⊗ ∅，
    位于 b 端时映到 ∅ ⊗ (h - h_1)，其中 h_0, h_1 为 e 的两条半边。
    """
    quotient, projection = quotient_by_edges(graph, [edge_id])
    a, b = graph.edge(edge_id).ends
    merged = projection.vertex_map[a]
    anchors = {a: (edge_id, 0), b: (edge_id, 1)}
    source = build_complex(quotient, n_max, i_max, max_generators)
    target = build_complex(graph, n_max, i_max, max_generators)
    quotient_edges = quotient.edge_ids
    target_edges = target.edge_index

    def lift(half_edge):
        """合并顶点处半边 h 的像：{(端点, j): 系数}"""
        end = graph.vertex_of(half_edge)
        return _difference(graph, end, half_edge, anchors[end])

    def expand(generator):
        monomial, occupied, factors = generator
        edges = [target_edges[quotient_edges[k]] for k in monomial]
        new_occupied = []
        for v in occupied:
            if v == merged:
                edges.append(target_edges[edge_id])
            else:
                new_occupied.append(v)
        options = []
        for v, j in factors:
            half_edges = quotient.half_edges(v)
            plus, minus = half_edges[j], half_edges[0]
            if v != merged:
                options.append(_difference(graph, v, plus, minus))
                continue
            terms = defaultdict(int)
            for key, c in lift(plus).items():
                terms[key] += c
            for key, c in lift(minus).items():
                terms[key] -= c
            options.append({key: c for key, c in terms.items() if c})
        return 1, edges, new_occupied, options

    return quotient, projection, _assemble(source, target, expand)


def contraction_chain_map(contraction, n_max, i_max, order=None, max_generators=None):
    """
    收缩 φ: G -> G' 诱导的链映射 S̃(G') -> S̃(G)

    按边序（缺省为升序）逐条收缩，得到 G = G_0 -> G_1 -> ... -> G_k，
    再经同构 G' -> G_k 拼接。

    Args:
        contraction: Contraction
        n_max, i_max: 截断范围
        order: 可选的收缩边顺序
        max_generators: 生成元上限

    Returns:
        ChainMap
    """
    if not isinstance(contraction, Contraction):
        raise InvalidContraction("需要 Contraction")
    contracted = sorted(contraction.contracted, key=natural_key)
    if order is not None:
        order = [str(e) for e in order]
        if sorted(order, key=natural_key) != contracted:
            raise InvalidContraction("收缩顺序必须恰好列出全部收缩边")
        contracted = order

    current = contraction.source
    names = {v: v for v in current.vertices}
    result = None
    for edge_id in contracted:
        quotient, projection, step = _simple_contraction_map(
            current, edge_id, n_max, i_max, max_generators
        )
        result = step if result is None else result @ step
        names = {v: projection.vertex_map[w] for v, w in names.items()}
        current = quotient

    # G' -> G_k：G_k 的顶点为原顶点的块代表，边标识符不变
    inverse_edges = {f: e for e, f in contraction.edge_map.items()}
    block_of = {}
    for v, w in contraction.vertex_map.items():
        block_of[w] = names[v]
    iso = make_embedding(contraction.target, current, block_of, inverse_edges)
    relabel = embedding_chain_map(iso, n_max, i_max, max_generators)
    chain_map = relabel if result is None else result @ relabel
    logger.debug("收缩链映射: 收缩 %d 条边", len(contracted))
    return chain_map


def cone_chain_map(contraction, n_max, i_max, max_generators=None):
    """
    有根收缩 φ: T -> T' 在锥上诱导的 S̃(cone T') -> S̃(cone T)

    取 π_φ: cone(T) -> G_φ 与 ι_φ: cone(T') -> G_φ，链映射为 π_φ^* ∘ (ι_φ)_*。
    """
    if not contraction.is_rooted:
        raise NotRootPreserving("锥上的映射需要保根收缩")
    g_phi, projection, inclusion, _ = cone_of_contraction(contraction)
    pushforward = embedding_chain_map(inclusion, n_max, i_max, max_generators)
    pullback = contraction_chain_map(projection, n_max, i_max, max_generators=max_generators)
    return pullback @ pushforward


def identity_chain_map(graph, n_max, i_max, max_generators=None):
    complex_ = build_complex(graph, n_max, i_max, max_generators)
    matrices = {
        (i, n): IntMatrix.identity(complex_.rank(i, n)) for i, n in complex_.bidegrees()
    }
    return ChainMap(complex_, complex_, matrices)


