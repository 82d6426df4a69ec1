"""
图拟阵的特征多项式与 Orlik–Solomon 维数

特征多项式按删除–收缩递归：自环使其为零，桥（余环）分出因子 t - 1，
其余边 χ(G) = χ(G∖e) - χ(G/e)。递归前先化简并去掉孤立点，按规范形缓存。
"""

import logging

from algebra.polynomials import IntPolynomial
from core.canonical import canonical_form
from core.constructions import simplify
from core.graph import Graph
from core.morphisms import quotient_by_edges
from matroid.flats import flats
from utils.exceptions import TooLarge

logger = logging.getLogger(__name__)

_LINEAR = IntPolynomial([-1, 1])

_memo = {}


def strip_isolated(graph):
    """去掉孤立顶点（不影响图拟阵）"""
    touched = {v for edge in graph.edges for v in edge.ends}
    if len(touched) == len(graph.vertices):
        return graph
    return Graph([v for v in graph.vertices if v in touched], graph.edges)


def matroid_key(graph):
    """
    简单图的缓存键：规范编码，超出暴力上限时退回带标签的边表

    Args:
        graph: 无孤立点的简单图

    Returns:
        tuple
    """
    try:
        return canonical_form(graph).code
    except TooLarge:
        return ('labelled', graph.vertices, tuple((e.id, e.ends) for e in graph.edges))


def _delete(graph, edge_id):
    return Graph(graph.vertices, [e for e in graph.edges if e.id != edge_id])


def _is_bridge(graph, edge_id):
    return _delete(graph, edge_id).rank < graph.rank


def _simple_characteristic(graph):
    """无自环、无重边、无孤立点的图"""
    if graph.rank == graph.size:
        return _LINEAR ** graph.size
    key = matroid_key(graph)
    if key in _memo:
        return _memo[key]

    edge = graph.edges[-1]
    contracted, _ = quotient_by_edges(graph, [edge.id])
    contracted = strip_isolated(simplify(contracted)[0])
    if _is_bridge(graph, edge.id):
        result = _LINEAR * _simple_characteristic(contracted)
    else:
        deleted = strip_isolated(_delete(graph, edge.id))
        result = _simple_characteristic(deleted) - _simple_characteristic(contracted)
    _memo[key] = result
    return result


def characteristic_polynomial(graph):
    """
    图拟阵的特征多项式 χ_{M(G)}(t)

    Args:
        graph: 图

    Returns:
        IntPolynomial: 次数为 rk M(G)；含自环时为零多项式
    """
    if any(edge.is_loop for edge in graph.edges):
        return IntPolynomial()
    simple, _ = simplify(graph)
    result = _simple_characteristic(strip_isolated(simple))
    logger.debug("特征多项式 %r: %s (缓存 %d)", graph, result, len(_memo))
    return result


def characteristic_polynomial_mobius(graph, lattice=None):
    """
    平坦集格上的 Möbius 求和 Σ_F μ(⊥, F) t^{rk M - rk F}

    Args:
        graph: 图
        lattice: 可选的已枚举 FlatLattice

    Returns:
        IntPolynomial: 与删除–收缩结果一致
    """
    if any(edge.is_loop for edge in graph.edges):
        return IntPolynomial()
    lattice = flats(graph) if lattice is None else lattice
    result = IntPolynomial()
    mobius = lattice.mobius_from_bottom
    for flat in lattice:
        result = result + IntPolynomial.monomial(flat.corank, mobius[flat])
    return result


def os_dimensions(graph):
    """
    Orlik–Solomon 代数各次的维数

    dim OS^d = |χ 中 t^{rk - d} 的系数|，按化简图计算。

    Args:
        graph: 图

    Returns:
        list: [dim OS^0, ..., dim OS^rk]
    """
    simple, _ = simplify(graph)
    chi = characteristic_polynomial(simple)
    rank = simple.rank
    return [abs(chi.coefficient(rank - d)) for d in range(rank + 1)]


def convolve(first, second):
    """两个维数序列的卷积（张量积的分次维数）"""
    if not first or not second:
        return []
    result = [0] * (len(first) + len(second) - 1)
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            result[i + j] += a * b
    return result


def clear_cache():
    _memo.clear()
