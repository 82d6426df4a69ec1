"""
规范形与自同构计数

树使用以中心为根的 AHU 递归编码；有根树直接从根编码；
一般小图在颜色细分后的类内枚举顶点排列，受顶点数上限保护。
"""

import logging
import math
from collections import Counter, defaultdict
from itertools import permutations, product
from typing import NamedTuple

from networkx.algorithms.isomorphism import GraphMatcher
from networkx.utils import UnionFind

from config import resolve_guard
from core.graph import RootedTree
from utils.exceptions import TooLarge

logger = logging.getLogger(__name__)


class CanonicalForm(NamedTuple):
    """规范编码、自同构数与边轨道数"""
    code: tuple
    automorphisms: int
    edge_orbits: int


def canonical_form(obj, max_vertices=None):
    """
    计算规范形

    Args:
        obj: Graph / Tree / RootedTree
        max_vertices: 一般图暴力搜索的顶点上限，缺省读取配置

    Returns:
        CanonicalForm: 两个输入编码相同当且仅当同构（有根输入要求保根）
    """
    if isinstance(obj, RootedTree):
        return _rooted_form(obj)
    if obj.is_tree():
        return _tree_form(obj)
    return _general_form(obj, resolve_guard('max_canonical_vertices', max_vertices))


def is_isomorphic(first, second, max_vertices=None):
    return canonical_form(first, max_vertices).code == canonical_form(second, max_vertices).code


def _ahu(adjacency, root, parent=None, marked=None):
    """有根子树的 (编码, 保根自同构数)"""
    child_results = [
        _ahu(adjacency, child, root, marked) for child in adjacency[root] if child != parent
    ]
    codes = sorted(code for code, _ in child_results)
    automorphisms = 1
    groups = defaultdict(list)
    for code, aut in child_results:
        groups[code].append(aut)
    for auts in groups.values():
        automorphisms *= math.factorial(len(auts)) * auts[0] ** len(auts)
    label = 1 if root == marked else 0
    return (label, tuple(codes)), automorphisms


def _centers(adjacency):
    """逐层剥叶得到树的中心（一个或两个）"""
    remaining = set(adjacency)
    degree = {v: len(adjacency[v]) for v in adjacency}
    leaves = [v for v in remaining if degree[v] <= 1]
    while len(remaining) > 2:
        next_leaves = []
        for leaf in leaves:
            remaining.discard(leaf)
            for u in adjacency[leaf]:
                if u in remaining:
                    degree[u] -= 1
                    if degree[u] == 1:
                        next_leaves.append(u)
        leaves = next_leaves
    return sorted(remaining)


def _tree_form(tree):
    adjacency = tree.adjacency
    centers = _centers(adjacency)
    if len(centers) == 1:
        code, automorphisms = _ahu(adjacency, centers[0])
        code = ('tree', code)
    else:
        first, second = centers
        code_a, aut_a = _ahu(adjacency, first, parent=second)
        code_b, aut_b = _ahu(adjacency, second, parent=first)
        automorphisms = aut_a * aut_b * (2 if code_a == code_b else 1)
        code = ('tree', min(code_a, code_b), max(code_a, code_b))

    # 带标记边的树由两侧有根编码的无序对决定
    orbit_keys = set()
    for edge in tree.edges:
        u, v = edge.ends
        side_u, _ = _ahu(adjacency, u, parent=v)
        side_v, _ = _ahu(adjacency, v, parent=u)
        orbit_keys.add((min(side_u, side_v), max(side_u, side_v)))
    return CanonicalForm(code, automorphisms, len(orbit_keys))


def _rooted_form(rooted):
    adjacency = rooted.tree.adjacency
    code, automorphisms = _ahu(adjacency, rooted.root)
    orbit_keys = set()
    for child in rooted.parent:
        marked, _ = _ahu(adjacency, rooted.root, marked=child)
        orbit_keys.add(marked)
    return CanonicalForm(('rooted', code), automorphisms, len(orbit_keys))


def _refine_colors(graph, index):
    """颜色细分直到类数稳定；颜色按签名排序编号"""
    neighbours = defaultdict(list)
    loops = Counter()
    for edge in graph.edges:
        a, b = (index[x] for x in edge.ends)
        if a == b:
            loops[a] += 1
        else:
            neighbours[a].append(b)
            neighbours[b].append(a)
    n = len(index)
    colors = [(len(neighbours[i]) + 2 * loops[i], loops[i]) for i in range(n)]
    colors = _compress(colors)
    while True:
        signatures = [
            (colors[i], tuple(sorted(colors[j] for j in neighbours[i]))) for i in range(n)
        ]
        refined = _compress(signatures)
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def _compress(values):
    ranking = {value: rank for rank, value in enumerate(sorted(set(values)))}
    return [ranking[value] for value in values]


def _general_form(graph, limit):
    n = len(graph.vertices)
    if n > limit:
        logger.warning("一般图规范形拒绝计算: %d 个顶点超过上限 %d", n, limit)
        raise TooLarge(f"一般图规范形需要暴力搜索，{n} 个顶点超过上限 {limit}")
    index = {v: i for i, v in enumerate(graph.vertices)}
    colors = _refine_colors(graph, index)
    classes = defaultdict(list)
    for i, color in enumerate(colors):
        classes[color].append(i)
    ordered = [classes[color] for color in sorted(classes)]
    pairs = [tuple(sorted(index[x] for x in edge.ends)) for edge in graph.edges]
    multiplicity = Counter(pairs)

    best = None
    optimal = []
    for choice in product(*(permutations(members) for members in ordered)):
        position = {}
        slot = 0
        for block in choice:
            for vertex in block:
                position[vertex] = slot
                slot += 1
        code = tuple(sorted(tuple(sorted((position[a], position[b]))) for a, b in pairs))
        if best is None or code < best:
            best, optimal = code, [position]
        elif code == best:
            optimal.append(position)

    automorphisms = len(optimal)
    for count in multiplicity.values():
        automorphisms *= math.factorial(count)

    # 边轨道：按端点对在自同构下合并
    classes_uf = UnionFind(multiplicity.keys())
    reference = optimal[0]
    for position in optimal:
        inverse = {slot: vertex for vertex, slot in position.items()}
        mapping = {v: inverse[reference[v]] for v in range(n)}
        for a, b in multiplicity:
            image = tuple(sorted((mapping[a], mapping[b])))
            classes_uf.union((a, b), image)
    orbits = len({classes_uf[pair] for pair in multiplicity})
    return CanonicalForm(('graph', n, best), automorphisms, orbits)


def tree_isomorphisms(first, second):
    """
    枚举两棵树之间的全部顶点同构

    Args:
        first: Tree
        second: Tree

    Yields:
        dict: first 的顶点 -> second 的顶点
    """
    if len(first.vertices) != len(second.vertices):
        return
    matcher = GraphMatcher(first.to_networkx_simple(), second.to_networkx_simple())
    for mapping in sorted(matcher.isomorphisms_iter(), key=lambda m: sorted(m.items())):
        yield dict(mapping)
