"""
闭式公式

星形树与锥的 Betti 数、Euler 示性数生成函数、扇形图与星形树的 KL 系数、
子树计数给出的 IH_2，以及 Hom 集大小的增长上界。
"""

import logging
from math import factorial

import networkx as nx

from algebra.polynomials import IntPolynomial, series_coefficient
from core.canonical import canonical_form
from core.constructions import subtrees
from core.graph import Tree
from utils.exceptions import OutOfBounds, UnknownOracle
from utils.helpers import binomial

logger = logging.getLogger(__name__)


def fan_ih(m, i):
    """dim IH_{2i}(cone(I_m)) = m! / (i! (i+1)! (m-2i)!)，m < 2i 时为 0"""
    if i < 0 or m < 2 * i:
        return 0
    return factorial(m) // (factorial(i) * factorial(i + 1) * factorial(m - 2 * i))


def thag_ih2(m):
    """dim IH_2(cone(K_{m,1})) = 2^m - m - 1"""
    return 2 ** m - m - 1


def star_b1(m, n):
    """dim H_1(UConf_n(K_{m,1}); Q)"""
    if m < 1:
        raise OutOfBounds("star_b1 需要 m >= 1")
    return 1 - binomial(m - 1 + n, n) + (m - 1) * binomial(m - 2 + n, n - 1)


def cone_star_b1(m):
    """dim H_1(UConf_n(cone(K_{m,1})); Q)，n >= 2"""
    return binomial(m + 1, 2)


def b1_cone_tree(tree):
    """dim H_1(UConf_n(cone(T)); Q) = |T| + Σ_v C(deg v, 2)，n >= 2"""
    return tree.size + sum(binomial(tree.degree(v), 2) for v in tree.vertices)


def _branches(tree, vertex):
    """去掉 vertex 后各分支的闭包（每个分支连同 vertex 与连接边）"""
    graph = tree.to_networkx_simple()
    graph.remove_node(vertex)
    pieces = []
    for component in sorted(nx.connected_components(graph), key=lambda c: sorted(c)):
        members = set(component) | {vertex}
        edges = [e for e in tree.edges if e.ends[0] in members and e.ends[1] in members]
        pieces.append(Tree(sorted(members), edges))
    return pieces


def b1_cone_recursion(tree, pivot=None):
    """
    b(cone T) = Σ_i b(cone T_i) + C(deg v, 2) 逐点展开

    Args:
        tree: 树
        pivot: 顶层拆分所用的顶点（度数 >= 2），缺省取第一个这样的顶点

    Returns:
        int
    """
    splittable = [v for v in tree.vertices if tree.degree(v) >= 2]
    if not splittable:
        # I_0 与 I_1：单边与三角形
        return tree.size
    if pivot is None:
        pivot = splittable[0]
    elif tree.degree(pivot) < 2:
        raise OutOfBounds(f"拆分顶点 {pivot!r} 的度数小于 2")
    pieces = _branches(tree, pivot)
    return sum(b1_cone_recursion(piece) for piece in pieces) + binomial(tree.degree(pivot), 2)


def ih2_via_subtrees(tree):
    """余秩 1 平坦集数减秩 1 平坦集数：subtrees(T) - (2|T| + 1)"""
    return subtrees(tree) - (2 * tree.size + 1)


def gal_chi_star(m, n):
    """χ(UConf_n(K_{m,1}))：(1 - (m-1)t) / (1-t)^m 的 t^n 系数"""
    numerator = IntPolynomial([1, -(m - 1)])
    denominator = IntPolynomial([1, -1]) ** m
    return series_coefficient(numerator, denominator, n)


def gal_chi_cone_star(m, n):
    """χ(UConf_n(cone(K_{m,1})))：(1 - mt)^2 / (1-t)^{m+1} 的 t^n 系数"""
    numerator = IntPolynomial([1, -m]) ** 2
    denominator = IntPolynomial([1, -1]) ** (m + 1)
    return series_coefficient(numerator, denominator, n)


def gal_chi_cone_star_expanded(m, n, corrected=False):
    """
    锥星 Euler 示性数的展开式

    按原样印出的中间项符号为正，与生成函数不符；corrected=True 时改为负号。
    """
    middle = -2 * m if corrected else 2 * m
    return (
        binomial(m + n, n)
        + middle * binomial(m + n - 1, n - 1)
        + m * m * binomial(m + n - 2, n - 2)
    )


def ih2_subdivided_star(m1, m2, m3):
    """dim IH_2(cone(K_{3,1} 三条边分别细分为 m1, m2, m3 段))"""
    return (
        (m1 + 1) * (m2 + 1) * (m3 + 1)
        + binomial(m1 + 1, 2) + binomial(m2 + 1, 2) + binomial(m3 + 1, 2)
        - 2 * (m1 + m2 + m3) - 1
    )


def bounded_growth_bound(target, n_edges):
    """|Hom(T, R)| <= |Aut R| · C(|T|, |R|)"""
    return canonical_form(target).automorphisms * binomial(n_edges, target.size)


# 名称 -> (函数, 参数名)
ORACLES = {
    'fan_ih': (fan_ih, ('m', 'i')),
    'thag_ih2': (thag_ih2, ('m',)),
    'star_b1': (star_b1, ('m', 'n')),
    'cone_star_b1': (cone_star_b1, ('m',)),
    'b1_cone_tree': (b1_cone_tree, ('tree',)),
    'b1_cone_recursion': (b1_cone_recursion, ('tree',)),
    'ih2_via_subtrees': (ih2_via_subtrees, ('tree',)),
    'gal_chi_star': (gal_chi_star, ('m', 'n')),
    'gal_chi_cone_star': (gal_chi_cone_star, ('m', 'n')),
    'gal_chi_cone_star_expanded': (gal_chi_cone_star_expanded, ('m', 'n')),
    'ih2_subdivided_star': (ih2_subdivided_star, ('m1', 'm2', 'm3')),
    'bounded_growth_bound': (bounded_growth_bound, ('target', 'n_edges')),
}


def oracle_parameters(name):
    if name not in ORACLES:
        raise UnknownOracle(f"未知的闭式公式: {name!r}")
    return ORACLES[name][1]


def closed_form_oracle(name, params):
    """
    按名称计算闭式公式

    Args:
        name: ORACLES 中的名称
        params: 参数字典；多余的键忽略

    Returns:
        int
    """
    parameters = oracle_parameters(name)
    function = ORACLES[name][0]
    missing = [p for p in parameters if p not in params]
    if missing:
        raise OutOfBounds(f"公式 {name} 缺少参数: {', '.join(missing)}")
    return function(*(params[p] for p in parameters))
