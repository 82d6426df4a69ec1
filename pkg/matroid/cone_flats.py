"""
树上锥的平坦集：(R, W, U) 三元组参数化

U 把 T 分成以 R 的顶点为指标的子树，块之间的相邻关系与 R 一致；
W 是 R 的顶点覆盖（groovy）。对应平坦集取全部块内边，
再为指标不在 W 中的块的每个顶点加上锥边，于是余秩恰为 |W|。
"""

import logging
from itertools import combinations
from typing import NamedTuple

from config import resolve_guard
from core.constructions import cone, enumerate_trees, hom_contractions, simplify
from core.graph import Graph, Tree
from core.morphisms import quotient_by_edges
from matroid.characteristic import convolve, os_dimensions
from matroid.flats import closure, flats, minor
from matroid.kazhdan_lusztig import ih_dimension
from utils.exceptions import NotClosed, TooLarge
from utils.helpers import natural_key, sort_ids

logger = logging.getLogger(__name__)


class ConeFlatTriple(NamedTuple):
    """(R, W, U)：指标树、groovy 子集与块分配 {R 的顶点: T 的顶点集}"""
    index_tree: Tree
    groovy: frozenset
    blocks: dict

    @property
    def corank(self):
        return len(self.groovy)

    def key(self):
        """等价类的键：带 W 标记的块集合"""
        inside = frozenset(self.blocks[v] for v in self.groovy)
        outside = frozenset(b for v, b in self.blocks.items() if v not in self.groovy)
        return inside, outside

    def coned_blocks(self):
        return [self.blocks[v] for v in self.index_tree.vertices if v not in self.groovy]

    def groovy_forest(self):
        """R_W：R 在 W 上的导出森林"""
        return induced_subgraph(self.index_tree, self.groovy)

    def describe(self):
        return {
            'R_edges': self.index_tree.size,
            'W': sort_ids(self.groovy),
            'blocks': {v: sort_ids(self.blocks[v]) for v in self.index_tree.vertices},
        }


def induced_subgraph(graph, vertices):
    vertices = set(vertices)
    edges = [e for e in graph.edges if e.ends[0] in vertices and e.ends[1] in vertices]
    return Graph(sort_ids(vertices), edges)


def _block_tree(tree, block):
    return Tree.from_graph(induced_subgraph(tree, block))


def groovy_subsets(index_tree):
    """
    R 的全部顶点覆盖，按大小再按字典序

    Args:
        index_tree: 树 R

    Returns:
        list: frozenset 列表
    """
    result = []
    vertices = index_tree.vertices
    for size in range(len(vertices) + 1):
        for subset in combinations(vertices, size):
            chosen = set(subset)
            if all(e.ends[0] in chosen or e.ends[1] in chosen for e in index_tree.edges):
                result.append(frozenset(subset))
    return result


def compositions(index_tree, tree):
    """
    Comp_R(T)：以 R 的顶点为指标、相邻关系与 R 一致的子树分解

    即全部收缩 T -> R 的纤维。

    Args:
        index_tree: 树 R
        tree: 树 T

    Returns:
        list: {R 的顶点: frozenset(T 的顶点)} 列表
    """
    return [
        {w: frozenset(contraction.fiber(w)) for w in index_tree.vertices}
        for contraction in hom_contractions(tree, index_tree)
    ]


def flat_triples(tree, max_edges=None):
    """
    (R, W, U) 三元组的等价类，每类一个代表

    Args:
        tree: 树 T
        max_edges: |T| 上限，缺省读取配置

    Returns:
        list: ConeFlatTriple，按余秩再按键排序
    """
    limit = resolve_guard('max_triple_edges', max_edges)
    if tree.size > limit:
        logger.warning("三元组枚举拒绝计算: |T|=%d 超过上限 %d", tree.size, limit)
        raise TooLarge(f"三元组枚举: |T|={tree.size} 超过上限 {limit}")
    representatives = {}
    for k in range(tree.size + 1):
        for index_tree in enumerate_trees(k):
            comps = compositions(index_tree, tree)
            if not comps:
                continue
            for groovy in groovy_subsets(index_tree):
                for blocks in comps:
                    triple = ConeFlatTriple(index_tree, groovy, blocks)
                    representatives.setdefault(triple.key(), triple)
    result = sorted(representatives.values(), key=_triple_order)
    logger.debug("三元组 |T|=%d: %d 类", tree.size, len(result))
    return result


def _triple_order(triple):
    inside, outside = triple.key()

    def blocks_key(blocks):
        return sorted(tuple(natural_key(v) for v in sort_ids(b)) for b in blocks)

    return triple.corank, triple.index_tree.size, blocks_key(inside), blocks_key(outside)


def triple_edges(tree, triple, labels):
    """三元组对应的 cone(T) 边集"""
    edges = {e.id for e in tree.edges if any(
        e.ends[0] in block and e.ends[1] in block for block in triple.blocks.values()
    )}
    for block in triple.coned_blocks():
        edges.update(labels.cone_edges[x] for x in block)
    return frozenset(edges)


def triple_to_flat(tree, triple, coned=None):
    """
    三元组对应的 cone(T) 的平坦集

    Args:
        tree: 树 T
        triple: ConeFlatTriple
        coned: 可选的 cone(T) 结果 (图, 标签)，避免重复构造

    Returns:
        Flat: 余秩为 |W|
    """
    graph, labels = cone(tree) if coned is None else coned
    edges = triple_edges(tree, triple, labels)
    flat = closure(graph, edges)
    if flat.edges != edges:
        logger.error("三元组 %s 给出的边集不闭", triple.describe())
        raise NotClosed(
            f"三元组给出的边集不闭，闭包多出 {sort_ids(flat.edges - edges)}"
        )
    return flat


def groovy_cone(triple):
    """cone(R_W)；R_W 为空森林时为单点"""
    graph, _ = cone(triple.groovy_forest())
    return graph


def contracted_cone(tree, triple, coned=None):
    """simplify(cone(T)/F)"""
    graph, labels = cone(tree) if coned is None else coned
    flat = triple_to_flat(tree, triple, (graph, labels))
    _, contracted = minor(graph, flat)
    return simplify(contracted)[0]


# ----------------------------------------------------------------------
# 叶子引理
# ----------------------------------------------------------------------
def _bipartition(tree):
    """树的两个染色类：每条边恰有一个端点落在其中"""
    color = {tree.vertices[0]: 0}
    stack = [tree.vertices[0]]
    adjacency = tree.adjacency
    while stack:
        v = stack.pop()
        for u in sort_ids(adjacency[v]):
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
    classes = [frozenset(v for v in tree.vertices if color[v] == c) for c in (0, 1)]
    return [c for c in classes if c]


def _contract_groovy_forest(triple):
    """R̄ = R/R_W 与 W 的像"""
    forest = triple.groovy_forest()
    quotient, projection = quotient_by_edges(triple.index_tree, forest.edge_ids)
    image = frozenset(projection.vertex_map[v] for v in triple.groovy)
    return quotient, image


def leaf_bound_report(tree, triples=True, max_edges=None):
    """
    叶子引理 |T| <= 2|Y| + l - 2 与其推论 |R| + |R_W| <= 2|W| + l - 2 的检查

    Args:
        tree: 至少两个叶子的树
        triples: 是否同时检查全部三元组上的推论
        max_edges: 三元组枚举上限

    Returns:
        dict: leaves, lemma_slack, corollary_slack, violations
    """
    leaves = len(tree.leaves())
    violations = []
    lemma_slack = None
    if tree.size >= 1:
        for subset in _bipartition(tree):
            slack = 2 * len(subset) + leaves - 2 - tree.size
            lemma_slack = slack if lemma_slack is None else min(lemma_slack, slack)
            if slack < 0:
                violations.append({'kind': 'lemma', 'Y': sort_ids(subset), 'slack': slack})

    corollary_slack = None
    if triples:
        for triple in flat_triples(tree, max_edges):
            forest = triple.groovy_forest()
            slack = 2 * len(triple.groovy) + leaves - 2 - triple.index_tree.size - forest.size
            corollary_slack = slack if corollary_slack is None else min(corollary_slack, slack)
            if slack < 0:
                violations.append({'kind': 'corollary', 'triple': triple.describe(), 'slack': slack})
            # 压缩 R_W 后每条边恰有一个端点在 W̄ 中
            quotient, image = _contract_groovy_forest(triple)
            if any((e.ends[0] in image) == (e.ends[1] in image) for e in quotient.edges):
                violations.append({'kind': 'reduction', 'triple': triple.describe(), 'slack': None})
    return {
        'edges': tree.size,
        'leaves': leaves,
        'lemma_slack': lemma_slack,
        'corollary_slack': corollary_slack,
        'violations': violations,
    }


# ----------------------------------------------------------------------
# E¹ 页与 OS 分解
# ----------------------------------------------------------------------
def e1_dimensions(tree, i, max_vertices=None):
    """
    谱序列 E¹ 页的维数

    dims(p, q) = Σ_{crk F = p} dim OS^{2i-p-q}(M_F) · dim IH_{2(i-q)}(cone(T)/F)

    Args:
        tree: 树 T
        i: IH 次数指标
        max_vertices: 平坦集枚举上限

    Returns:
        dict: {(p, q): 维数}，p, q 取 0..2i
    """
    graph, _ = cone(tree)
    lattice = flats(graph, max_vertices)
    per_flat = []
    for flat in lattice:
        restriction, contracted = minor(graph, flat)
        per_flat.append((flat.corank, os_dimensions(restriction), contracted))

    dims = {}
    for p in range(2 * i + 1):
        for q in range(2 * i + 1):
            degree = 2 * i - p - q
            total = 0
            if degree >= 0 and q <= i:
                for corank, os_dims, contracted in per_flat:
                    if corank != p or degree >= len(os_dims):
                        continue
                    total += os_dims[degree] * ih_dimension(contracted, i - q, max_vertices)
            dims[(p, q)] = total
    return dims


def os_factorization_check(tree, triple):
    """
    受限拟阵 M_F 的 OS 维数与按块张量积的比较

    两种标记：锥化 W 之外的块（本库约定）与锥化 W 中的块（字面读法）。

    Returns:
        dict: restriction, coned_outside, coned_inside, matches
    """
    graph, labels = cone(tree)
    flat = triple_to_flat(tree, triple, (graph, labels))
    restriction, _ = minor(graph, flat)
    actual = os_dimensions(restriction)

    def product_of(coned_indices):
        total = [1]
        for v in triple.index_tree.vertices:
            block = _block_tree(tree, triple.blocks[v])
            factor = cone(block)[0] if v in coned_indices else block
            total = convolve(total, os_dimensions(factor))
        return total

    outside = set(triple.index_tree.vertices) - set(triple.groovy)
    coned_outside = product_of(outside)
    coned_inside = product_of(set(triple.groovy))
    matches = [
        name for name, dims in (('coned_outside', coned_outside), ('coned_inside', coned_inside))
        if dims == actual
    ]
    return {
        'restriction': actual,
        'coned_outside': coned_outside,
        'coned_inside': coned_inside,
        'matches': matches,
    }
