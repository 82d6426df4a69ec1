"""
图与树的构造

包含路径与星形树、化简、锥、G_φ、细分与发芽函子、Hom 集枚举与子树计数。
"""

import logging
from collections import defaultdict
from itertools import combinations
from typing import NamedTuple

from networkx.utils import UnionFind

from core.canonical import canonical_form, tree_isomorphisms
from core.graph import Graph, RootedTree, Tree
from core.morphisms import (
    Contraction, make_contraction, make_embedding, quotient_by_edges,
)
from utils.constants import (
    CONE_APEX, CONE_EDGE_PREFIX, SPROUT_EDGE_SEPARATOR, SPROUT_VERTEX_SEPARATOR,
    SUBDIVISION_SEPARATOR,
)
from utils.exceptions import (
    DuplicateEdge, DuplicateVertex, InvalidOIMap, NotRootPreserving, UnknownEdge,
    UnknownVertex,
)
from utils.helpers import fresh_id, natural_key, sort_ids

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# 基本树
# ----------------------------------------------------------------------
def path_tree(m):
    """路径 I_m：顶点 v0..vm，边 ei 连接 v(i-1) 与 vi"""
    vertices = [f"v{i}" for i in range(m + 1)]
    edges = [(f"e{i}", f"v{i - 1}", f"v{i}") for i in range(1, m + 1)]
    return Tree(vertices, edges)


def star_tree(m):
    """星形 K_{m,1}：中心 v0，叶 v1..vm"""
    vertices = [f"v{i}" for i in range(m + 1)]
    edges = [(f"e{i}", "v0", f"v{i}") for i in range(1, m + 1)]
    return Tree(vertices, edges)


def enumerate_trees(n_edges):
    """
    按同构类枚举恰有 n_edges 条边的树

    Args:
        n_edges: 边数

    Returns:
        list: 每个同构类一个代表
    """
    level = [Tree(["v0"])]
    for k in range(1, n_edges + 1):
        seen = {}
        for tree in level:
            for vertex in tree.vertices:
                grown = Tree(
                    list(tree.vertices) + [f"v{k}"],
                    list(tree.edges) + [(f"e{k}", vertex, f"v{k}")],
                )
                seen.setdefault(canonical_form(grown).code, grown)
        level = list(seen.values())
    return level


def disjoint_union(first, second):
    """不交并；second 中与 first 冲突的标识符换成新名称"""
    taken_vertices = set(first.vertices)
    rename = {}
    for v in second.vertices:
        rename[v] = fresh_id(taken_vertices, v)
        taken_vertices.add(rename[v])
    taken_edges = set(first.edge_ids)
    edges = list(first.edges)
    for edge in second.edges:
        new_id = fresh_id(taken_edges, edge.id)
        taken_edges.add(new_id)
        edges.append((new_id, rename[edge.ends[0]], rename[edge.ends[1]]))
    return Graph(sort_ids(taken_vertices), edges)


def wedge(first, first_vertex, second, second_vertex):
    """
    一点粘合：把 second 的 second_vertex 与 first 的 first_vertex 等同

    Args:
        first, second: 图
        first_vertex, second_vertex: 粘合点

    Returns:
        Graph
    """
    for graph, vertex in ((first, first_vertex), (second, second_vertex)):
        if not graph.has_vertex(vertex):
            raise UnknownVertex(f"粘合点 {vertex!r} 不是图的顶点")
    taken_vertices = set(first.vertices)
    rename = {second_vertex: first_vertex}
    for v in second.vertices:
        if v == second_vertex:
            continue
        rename[v] = fresh_id(taken_vertices, v)
        taken_vertices.add(rename[v])
    taken_edges = set(first.edge_ids)
    edges = list(first.edges)
    for edge in second.edges:
        new_id = fresh_id(taken_edges, edge.id)
        taken_edges.add(new_id)
        edges.append((new_id, rename[edge.ends[0]], rename[edge.ends[1]]))
    return Graph(sort_ids(taken_vertices), edges)


# ----------------------------------------------------------------------
# 化简
# ----------------------------------------------------------------------
def simplify(graph):
    """
    删去自环并合并同端点的重边

    Args:
        graph: 图

    Returns:
        tuple: (简单图, {非自环边: 类代表})，代表取自然序最小的边
    """
    representative = {}
    classes = {}
    for edge in graph.edges:
        if edge.is_loop:
            continue
        key = frozenset(edge.ends)
        # edges 已按自然序排列，首次出现者即最小
        representative.setdefault(key, edge)
        classes[edge.id] = representative[key].id
    kept = [edge for edge in graph.edges if not edge.is_loop and classes[edge.id] == edge.id]
    return Graph(graph.vertices, kept), classes


# ----------------------------------------------------------------------
# 锥
# ----------------------------------------------------------------------
class ConeLabels(NamedTuple):
    """锥顶 p 与每个顶点 v 对应的锥边 e_v"""
    apex: str
    cone_edges: dict


def cone(graph):
    """
    图上的锥：新增顶点 p 并把它连到每个原顶点

    Args:
        graph: 树（森林亦可）

    Returns:
        tuple: (锥图, ConeLabels)
    """
    apex = fresh_id(set(graph.vertices), CONE_APEX)
    taken = set(graph.edge_ids)
    cone_edges = {}
    for v in graph.vertices:
        cone_edges[v] = fresh_id(taken, f"{CONE_EDGE_PREFIX}{v}")
        taken.add(cone_edges[v])
    edges = list(graph.edges) + [(cone_edges[v], v, apex) for v in graph.vertices]
    return Graph(list(graph.vertices) + [apex], edges), ConeLabels(apex, cone_edges)


class ConeOfContraction(NamedTuple):
    graph: Graph
    projection: Contraction
    inclusion: object
    apex: str


def cone_of_contraction(contraction):
    """
    有根收缩 φ: T -> T' 的锥图 G_φ

    G_φ 的顶点为 T' 的顶点与新锥顶 p'，边为 T' 的边以及对每个 w ∈ Vert(T)
    一条连接 φ(w) 与 p' 的边 e'_w（沿用 cone(T) 中 e_w 的标识符）。

    Args:
        contraction: 保根的 Contraction

    Returns:
        ConeOfContraction: (G_φ, π_φ: cone(T) -> G_φ, ι_φ: cone(T') -> G_φ, p')
    """
    if not contraction.is_rooted:
        raise NotRootPreserving("G_φ 需要保根的收缩")
    source, target = contraction.source, contraction.target
    source_cone, source_labels = cone(source)
    target_cone, target_labels = cone(target)
    apex = target_labels.apex

    taken = set(target.edge_ids)
    lifted = {}
    for w in source.vertices:
        lifted[w] = fresh_id(taken, source_labels.cone_edges[w])
        taken.add(lifted[w])
    edges = list(target.edges) + [
        (lifted[w], contraction.vertex_map[w], apex) for w in source.vertices
    ]
    g_phi = Graph(list(target.vertices) + [apex], edges)

    vertex_map = dict(contraction.vertex_map)
    vertex_map[source_labels.apex] = apex
    edge_map = dict(contraction.edge_map)
    edge_map.update({source_labels.cone_edges[w]: lifted[w] for w in source.vertices})
    projection = make_contraction(source_cone, g_phi, vertex_map, edge_map)

    rooted_source = contraction.rooted_source()
    inclusion_edges = {e: e for e in target.edge_ids}
    for w_prime in target.vertices:
        top = rooted_source.maximum(contraction.fiber(w_prime))
        inclusion_edges[target_labels.cone_edges[w_prime]] = lifted[top]
    inclusion = make_embedding(
        target_cone, g_phi, {v: v for v in target_cone.vertices}, inclusion_edges
    )
    return ConeOfContraction(g_phi, projection, inclusion, apex)


# ----------------------------------------------------------------------
# 有序单射元组
# ----------------------------------------------------------------------
class OITuple:
    """
    r 个严格递增映射 f_i: {1..m_i} -> {1..n_i}

    maps[i] 以元组存储 (f_i(1), ..., f_i(m_i))。
    """

    def __init__(self, maps, codomain):
        maps = tuple(tuple(int(x) for x in f) for f in maps)
        codomain = tuple(int(n) for n in codomain)
        if len(maps) != len(codomain):
            raise InvalidOIMap("映射个数与陪域个数不一致")
        for f, n in zip(maps, codomain):
            if any(x < 1 or x > n for x in f):
                raise InvalidOIMap(f"映射 {f} 的值超出 1..{n}")
            if any(a >= b for a, b in zip(f, f[1:])):
                raise InvalidOIMap(f"映射 {f} 不是严格递增的")
        self.maps = maps
        self.codomain = codomain

    @property
    def domain(self):
        return tuple(len(f) for f in self.maps)

    @classmethod
    def identity(cls, sizes):
        return cls([tuple(range(1, m + 1)) for m in sizes], sizes)

    def __eq__(self, other):
        return isinstance(other, OITuple) and self.maps == other.maps and self.codomain == other.codomain

    def __hash__(self):
        return hash((self.maps, self.codomain))

    def __repr__(self):
        return f"OITuple({self.maps}, codomain={self.codomain})"


def compose_oi(outer, inner):
    """
    复合 outer ∘ inner：先 inner 再 outer

    Args:
        outer: [m̄] -> [n̄]
        inner: [l̄] -> [m̄]

    Returns:
        OITuple: [l̄] -> [n̄]
    """
    if inner.codomain != outer.domain:
        raise InvalidOIMap("inner 的陪域与 outer 的定义域不一致")
    maps = [tuple(f[j - 1] for j in g) for f, g in zip(outer.maps, inner.maps)]
    return OITuple(maps, outer.codomain)


# ----------------------------------------------------------------------
# 细分
# ----------------------------------------------------------------------
def _resolve_directed(tree, items):
    """把边标识符或 (tail, head) 解析为 (edge_id, tail, head)"""
    by_pair = {}
    for edge in tree.edges:
        by_pair[edge.ends] = (edge.id, edge.ends[0], edge.ends[1])
        by_pair[edge.ends[::-1]] = (edge.id, edge.ends[1], edge.ends[0])
    resolved = []
    for item in items:
        if isinstance(item, (tuple, list)):
            key = (str(item[0]), str(item[1]))
            if key not in by_pair:
                raise UnknownEdge(f"没有连接 {key[0]!r} 与 {key[1]!r} 的边")
            resolved.append(by_pair[key])
        else:
            edge = tree.edge(str(item))
            resolved.append((edge.id, edge.ends[0], edge.ends[1]))
    ids = [r[0] for r in resolved]
    if len(set(ids)) != len(ids):
        raise DuplicateEdge("细分的边必须互不相同")
    return resolved


def _subdivide(tree, directed, sizes):
    """返回 (树, 路径标签, 原顶点改名表)"""
    if len(directed) != len(sizes):
        raise InvalidOIMap("边数与细分次数的个数不一致")
    if any(m < 0 for m in sizes):
        raise InvalidOIMap("细分次数必须非负")
    uf = UnionFind(tree.vertices)
    for (edge_id, tail, head), m in zip(directed, sizes):
        if m == 0:
            uf.union(tail, head)
    blocks = defaultdict(list)
    for v in tree.vertices:
        blocks[uf[v]].append(v)
    rename = {}
    for members in blocks.values():
        name = sort_ids(members)[0]
        for v in members:
            rename[v] = name

    touched = {d[0] for d in directed}
    vertices = set(rename.values())
    edges = [
        (edge.id, rename[edge.ends[0]], rename[edge.ends[1]])
        for edge in tree.edges if edge.id not in touched
    ]
    taken_vertices = set(tree.vertices)
    taken_edges = set(tree.edge_ids)
    labels = []
    for (edge_id, tail, head), m in zip(directed, sizes):
        a, b = rename[tail], rename[head]
        if m == 0:
            labels.append((a,))
        elif m == 1:
            edges.append((edge_id, a, b))
            labels.append((a, b))
        else:
            inner = []
            for t in range(1, m):
                inner.append(fresh_id(taken_vertices, f"{edge_id}{SUBDIVISION_SEPARATOR}{t}"))
                taken_vertices.add(inner[-1])
            path = [a] + inner + [b]
            vertices.update(inner)
            for k in range(1, m + 1):
                piece = fresh_id(taken_edges, f"{edge_id}{SUBDIVISION_SEPARATOR}{k}")
                taken_edges.add(piece)
                edges.append((piece, path[k - 1], path[k]))
            labels.append(tuple(path))
    return Tree(sort_ids(vertices), edges), labels, rename


def subdivide(tree, edges, sizes):
    """
    细分 T(ē, m̄)：第 i 条边分成 m_i 段，m_i = 0 表示收缩

    Args:
        tree: 树
        edges: 边标识符或 (tail, head) 有向边，v_i^0 位于 tail
        sizes: 各边的段数

    Returns:
        tuple: (树, [(v_i^0, ..., v_i^{m_i}), ...])
    """
    result, labels, _ = _subdivide(tree, _resolve_directed(tree, edges), list(sizes))
    return result, labels


def subdivision_induced(tree, edges, oi_map):
    """
    f̄: [m̄] -> [n̄] 诱导的收缩 T(ē, n̄) -> T(ē, m̄)

    v_i^t 送到 v_i^s，s = max({0} ∪ {j | f_i(j) <= t})；原顶点保持不动。

    Args:
        tree: 树
        edges: 有向边
        oi_map: OITuple

    Returns:
        Contraction
    """
    directed = _resolve_directed(tree, edges)
    if len(directed) != len(oi_map.maps):
        raise InvalidOIMap("边数与映射个数不一致")
    source, source_labels, source_rename = _subdivide(tree, directed, oi_map.codomain)
    target, target_labels, target_rename = _subdivide(tree, directed, oi_map.domain)

    vertex_map = {source_rename[v]: target_rename[v] for v in tree.vertices}
    for f, path_n, path_m in zip(oi_map.maps, source_labels, target_labels):
        for t, vertex in enumerate(path_n):
            s = max([0] + [j for j, value in enumerate(f, start=1) if value <= t])
            vertex_map[vertex] = path_m[s]
    return make_contraction(source, target, vertex_map)


# ----------------------------------------------------------------------
# 发芽
# ----------------------------------------------------------------------
def _sprout(tree, vertices, sizes):
    vertices = [str(v) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise DuplicateVertex("发芽的顶点必须互不相同")
    if len(vertices) != len(sizes):
        raise InvalidOIMap("顶点数与发芽次数的个数不一致")
    if any(m < 0 for m in sizes):
        raise InvalidOIMap("发芽次数必须非负")
    for v in vertices:
        if not tree.has_vertex(v):
            raise UnknownVertex(f"未知的顶点: {v!r}")
    taken_vertices = set(tree.vertices)
    taken_edges = set(tree.edge_ids)
    edges = list(tree.edges)
    labels = []
    for v, m in zip(vertices, sizes):
        leaves = []
        for t in range(1, m + 1):
            leaf = fresh_id(taken_vertices, f"{v}{SPROUT_VERTEX_SEPARATOR}{t}")
            edge_id = fresh_id(taken_edges, f"{v}{SPROUT_EDGE_SEPARATOR}{t}")
            taken_vertices.add(leaf)
            taken_edges.add(edge_id)
            edges.append((edge_id, v, leaf))
            leaves.append(leaf)
        labels.append(tuple(leaves))
    return Tree(sort_ids(taken_vertices), edges), labels


def sprout(tree, vertices, sizes):
    """
    发芽 T(v̄, m̄)：在 v_i 处接上 m_i 条新的叶边

    Args:
        tree: 树
        vertices: 互不相同的顶点
        sizes: 各顶点新增的叶数

    Returns:
        tuple: (树, [(v_i^1, ..., v_i^{m_i}), ...])
    """
    return _sprout(tree, vertices, list(sizes))


def sprout_induced(tree, vertices, oi_map):
    """
    f̄ 诱导的收缩 T(v̄, n̄) -> T(v̄, m̄)

    原顶点不动；若 f_i(s) = t 则 v_i^t 送到 v_i^s，否则送到 v_i。
    """
    source, source_labels = _sprout(tree, vertices, oi_map.codomain)
    target, target_labels = _sprout(tree, vertices, oi_map.domain)
    vertex_map = {v: v for v in tree.vertices}
    for v, f, leaves_n, leaves_m in zip(vertices, oi_map.maps, source_labels, target_labels):
        preimage = {value: s for s, value in enumerate(f, start=1)}
        for t, leaf in enumerate(leaves_n, start=1):
            vertex_map[leaf] = leaves_m[preimage[t] - 1] if t in preimage else str(v)
    return make_contraction(source, target, vertex_map)


# ----------------------------------------------------------------------
# Hom 集与子树
# ----------------------------------------------------------------------
def hom_contractions(tree, target):
    """
    枚举全部收缩 T -> R

    对每个 (|T|-|R|) 元边子集 S 取商 T/S，再与每个同构 T/S -> R 复合。

    Args:
        tree: 源树 T
        target: 目标树 R

    Returns:
        list: Contraction 列表，|T| < |R| 时为空
    """
    k = tree.size - target.size
    if k < 0:
        return []
    result = []
    for subset in combinations(tree.edge_ids, k):
        quotient, projection = quotient_by_edges(tree, subset)
        for iso in tree_isomorphisms(quotient, target):
            vertex_map = {v: iso[w] for v, w in projection.vertex_map.items()}
            result.append(make_contraction(tree, target, vertex_map))
    logger.debug("hom(|T|=%d, |R|=%d) = %d", tree.size, target.size, len(result))
    return result


def hom_count(tree, target):
    return len(hom_contractions(tree, target))


def subtrees(tree, listing=False):
    """
    子树计数：导出连通的非空顶点子集，含单点

    Args:
        tree: 树
        listing: 为 True 时同时返回全部子树的顶点集

    Returns:
        int，或 (int, list of frozenset)
    """
    adjacency = tree.adjacency
    root = tree.vertices[0]
    order = [root]
    parent = {root: None}
    for v in order:
        for u in sort_ids(adjacency[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    # 以 v 为最高点的子树个数 f(v) = Π (1 + f(child))
    rooted_at = {}
    for v in reversed(order):
        value = 1
        for u in adjacency[v]:
            if parent.get(u) == v:
                value *= 1 + rooted_at[u]
        rooted_at[v] = value
    count = sum(rooted_at.values())
    if not listing:
        return count
    return count, _connected_subsets(tree)


def _connected_subsets(graph):
    """按最小顶点扩展边界枚举导出连通子集"""
    index = {v: i for i, v in enumerate(graph.vertices)}
    adjacency = graph.adjacency
    found = []

    def extend(current, frontier, excluded, start):
        found.append(frozenset(current))
        candidates = sorted(frontier, key=lambda v: index[v])
        excluded = set(excluded)
        for k, vertex in enumerate(candidates):
            grown = set(candidates[k + 1:]) | {
                u for u in adjacency[vertex]
                if index[u] > index[start] and u not in current and u not in excluded
            }
            extend(current | {vertex}, grown - {vertex}, excluded, start)
            # 不含 vertex 的分支中它不再出现
            excluded.add(vertex)

    for start in graph.vertices:
        frontier = {u for u in adjacency[start] if index[u] > index[start]}
        extend({start}, frontier, set(), start)
    return sorted(found, key=lambda s: (len(s), sorted(natural_key(v) for v in s)))
