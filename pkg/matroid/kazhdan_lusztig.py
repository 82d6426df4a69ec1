"""
图拟阵的 Kazhdan–Lusztig 多项式

P_M 由秩 0 时 P = 1、秩 >= 1 时 deg P < rk/2 以及
    t^{rk M} P_M(1/t) = Σ_F χ_{M_F}(t) P_{M^F}(t)
唯一确定。令 RHS' 为去掉最小平坦集一项后的和，则 P 的 t^j 系数为 -[t^j]RHS'（j < rk/2）。
"""

import logging

from algebra.polynomials import IntPolynomial
from config import resolve_guard
from core.constructions import simplify
from matroid.characteristic import characteristic_polynomial, matroid_key, strip_isolated
from matroid.flats import flats, minor
from utils.exceptions import AntiPalindromyViolation, TooLarge

logger = logging.getLogger(__name__)

_memo = {}


def _check_anti_palindromy(rhs, rank, graph):
    """RHS' 必须满足 [t^j] = -[t^{rk-j}]，且 rk 为偶数时中间系数为零"""
    for j in range(rank + 1):
        if rhs.coefficient(j) != -rhs.coefficient(rank - j):
            logger.error("KL 求解自检失败 %r: RHS' = %s", graph, rhs)
            raise AntiPalindromyViolation(
                f"{graph!r} 的 RHS' 在 t^{j} 与 t^{rank - j} 处不反对称: {rhs}"
            )
    if rhs.degree > rank:
        raise AntiPalindromyViolation(f"{graph!r} 的 RHS' 次数 {rhs.degree} 超过秩 {rank}")


def _solve(graph, max_vertices):
    """graph 为无孤立点的简单图"""
    rank = graph.rank
    if rank == 0:
        return IntPolynomial.constant(1)
    key = matroid_key(graph)
    if key in _memo:
        return _memo[key]

    lattice = flats(graph, max_vertices)
    rhs = IntPolynomial()
    for flat in lattice:
        if flat == lattice.bottom:
            continue
        restriction, contracted = minor(graph, flat)
        quotient = strip_isolated(simplify(contracted)[0])
        rhs = rhs + characteristic_polynomial(restriction) * _solve(quotient, max_vertices)

    result = IntPolynomial(-rhs.coefficient(j) for j in range((rank + 1) // 2))
    # 完整的函数方程：RHS' = t^rk P(1/t) - P(t)
    _check_anti_palindromy(rhs, rank, graph)
    if rhs != result.reverse(rank) - result:
        raise AntiPalindromyViolation(f"{graph!r} 的 RHS' 与 t^rk P(1/t) - P(t) 不符")
    _memo[key] = result
    logger.debug("KL 多项式 %r: %s (缓存 %d)", graph, result, len(_memo))
    return result


def kl_polynomial(graph, max_vertices=None):
    """
    图拟阵的 Kazhdan–Lusztig 多项式

    Args:
        graph: 图
        max_vertices: 平坦集枚举的顶点上限，缺省读取配置

    Returns:
        IntPolynomial: 常数项为 1，次数 < rk/2
    """
    simple = strip_isolated(simplify(graph)[0])
    # 缓存命中时也要遵守上限
    limit = resolve_guard('max_flat_vertices', max_vertices)
    if len(simple.vertices) > limit:
        raise TooLarge(f"KL 多项式: {len(simple.vertices)} 个顶点超过上限 {limit}")
    return _solve(simple, max_vertices)


def ih_dimension(graph, i, max_vertices=None):
    """
    倒数平面的 2i 次相交同调维数，即 KL 多项式 t^i 的系数

    Args:
        graph: 图
        i: 次数
        max_vertices: 平坦集枚举的顶点上限

    Returns:
        int: i >= rk/2 时为 0
    """
    if i < 0:
        return 0
    return kl_polynomial(graph, max_vertices).coefficient(i)


def memo_size():
    return len(_memo)


def clear_cache():
    _memo.clear()
