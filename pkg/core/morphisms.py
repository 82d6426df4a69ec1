"""
图范畴中的态射：收缩、图嵌入与有根树的序嵌入

收缩由顶点映射唯一决定；边映射只在非收缩边上定义，并与目标边集一一对应。
"""

import logging
from collections import defaultdict

from networkx.utils import UnionFind

from core.graph import Graph, RootedTree, Tree
from utils.exceptions import (
    DisconnectedFiber, EdgeMismatch, Incomposable, InvalidEmbedding, NonSurjective,
    NotInjective, NotRootPreserving, UnknownEdge, UnknownVertex,
)
from utils.helpers import natural_key, sort_ids

logger = logging.getLogger(__name__)


def _pair_key(a, b):
    return tuple(sorted((a, b), key=natural_key))


class Contraction:
    """收缩：连通纤维的满的同伦等价"""

    def __init__(self, source, target, vertex_map, edge_map, source_root=None, target_root=None):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        self.edge_map = dict(edge_map)
        self.contracted = frozenset(e for e in source.edge_ids if e not in self.edge_map)
        self.source_root = source_root
        self.target_root = target_root

    @property
    def is_rooted(self):
        return self.source_root is not None and self.target_root is not None

    def __call__(self, vertex):
        return self.vertex_map[vertex]

    def fiber(self, vertex):
        """纤维 φ⁻¹(w)，按自然序"""
        return sort_ids(v for v, w in self.vertex_map.items() if w == vertex)

    def fibers(self):
        return {w: self.fiber(w) for w in self.target.vertices}

    def rooted_source(self):
        return RootedTree(self.source, self.source_root)

    def rooted_target(self):
        return RootedTree(self.target, self.target_root)

    def __eq__(self, other):
        return (
            isinstance(other, Contraction)
            and self.source == other.source
            and self.target == other.target
            and self.vertex_map == other.vertex_map
            and self.edge_map == other.edge_map
            and self.source_root == other.source_root
            and self.target_root == other.target_root
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.vertex_map.items()))))

    def __repr__(self):
        return f"Contraction({self.source!r} -> {self.target!r}, contracted={sort_ids(self.contracted)})"


def make_contraction(source, target, vertex_map, edge_map=None, roots=None):
    """
    构造并校验收缩

    Args:
        source: 源图
        target: 目标图
        vertex_map: dict，源顶点 -> 目标顶点（须为全映射）
        edge_map: 可选的显式边映射；缺省时由顶点映射推出，重边按相同标识符匹配
        roots: 可选 (源根, 目标根)

    Returns:
        Contraction: 校验过的收缩
    """
    vertex_map = {str(k): str(v) for k, v in vertex_map.items()}
    if set(vertex_map) != set(source.vertices):
        missing = set(source.vertices) - set(vertex_map)
        raise UnknownVertex(f"顶点映射不是全映射，缺少 {sort_ids(missing)}")
    for image in vertex_map.values():
        if not target.has_vertex(image):
            raise UnknownVertex(f"像 {image!r} 不是目标图的顶点")
    if set(vertex_map.values()) != set(target.vertices):
        raise NonSurjective("顶点映射不是满射")

    fibers = defaultdict(list)
    for v, w in vertex_map.items():
        fibers[w].append(v)
    for w, fiber in fibers.items():
        if not source.induces_connected(fiber):
            raise DisconnectedFiber(f"纤维 {sort_ids(fiber)} 不连通")

    if edge_map is None:
        edge_map = _derive_edge_map(source, target, vertex_map)
    else:
        edge_map = _check_edge_map(source, target, vertex_map, edge_map)

    # 每个纤维内的收缩边恰好构成其生成树
    contracted = [e for e in source.edges if e.id not in edge_map]
    uf = UnionFind(source.vertices)
    per_fiber = defaultdict(int)
    for edge in contracted:
        a, b = edge.ends
        if vertex_map[a] != vertex_map[b]:
            raise EdgeMismatch(f"边 {edge.id!r} 跨越两个纤维却没有像")
        if uf[a] == uf[b]:
            raise EdgeMismatch(f"收缩边 {edge.id!r} 在纤维内成圈")
        uf.union(a, b)
        per_fiber[vertex_map[a]] += 1
    for w, fiber in fibers.items():
        if per_fiber[w] != len(fiber) - 1:
            raise EdgeMismatch(f"纤维 {sort_ids(fiber)} 的收缩边数不等于顶点数减一")

    source_root = target_root = None
    if roots is not None:
        source_root, target_root = str(roots[0]), str(roots[1])
        if vertex_map.get(source_root) != target_root:
            raise NotRootPreserving("收缩不保持根")

    return Contraction(source, target, vertex_map, edge_map, source_root, target_root)


def _derive_edge_map(source, target, vertex_map):
    """按像端点对分组匹配边；同组多条边时要求标识符一致"""
    source_groups = defaultdict(list)
    for edge in source.edges:
        a, b = (vertex_map[x] for x in edge.ends)
        source_groups[_pair_key(a, b)].append(edge.id)
    target_groups = defaultdict(list)
    for edge in target.edges:
        target_groups[_pair_key(*edge.ends)].append(edge.id)

    edge_map = {}
    for key, target_ids in target_groups.items():
        source_ids = source_groups.get(key, [])
        if key[0] == key[1]:
            # 目标中的自环：由纤维内同名的边承担
            for target_id in target_ids:
                if target_id not in source_ids:
                    raise EdgeMismatch(f"目标自环 {target_id!r} 没有唯一的原像")
                edge_map[target_id] = target_id
            continue
        if len(source_ids) != len(target_ids):
            raise EdgeMismatch(f"端点对 {key} 上源边 {len(source_ids)} 条、目标边 {len(target_ids)} 条")
        if len(source_ids) == 1:
            edge_map[source_ids[0]] = target_ids[0]
        elif set(source_ids) == set(target_ids):
            edge_map.update({e: e for e in source_ids})
        else:
            raise EdgeMismatch(f"端点对 {key} 上的重边无法唯一匹配")
    for key, source_ids in source_groups.items():
        if key[0] != key[1] and key not in target_groups:
            raise EdgeMismatch(f"源边 {source_ids} 的像端点对 {key} 上没有目标边")
    return edge_map


def _check_edge_map(source, target, vertex_map, edge_map):
    edge_map = {str(k): str(v) for k, v in edge_map.items()}
    for e, f in edge_map.items():
        if not source.has_edge(e):
            raise UnknownEdge(f"未知的源边: {e!r}")
        if not target.has_edge(f):
            raise UnknownEdge(f"未知的目标边: {f!r}")
        a, b = (vertex_map[x] for x in source.edge(e).ends)
        if _pair_key(a, b) != _pair_key(*target.edge(f).ends):
            raise EdgeMismatch(f"边 {e!r} 的像 {f!r} 与顶点映射不相容")
    if sorted(edge_map.values()) != sorted(target.edge_ids):
        raise EdgeMismatch("边映射不是到目标边集的双射")
    return edge_map


def identity_contraction(graph, root=None):
    roots = None if root is None else (root, root)
    return Contraction(
        graph, graph, {v: v for v in graph.vertices}, {e: e for e in graph.edge_ids},
        *(roots or (None, None)),
    )


def compose(first, second):
    """
    复合收缩：先 first 再 second

    Args:
        first: T -> T'
        second: T' -> T''

    Returns:
        Contraction: T -> T''
    """
    if not first.target.same_as(second.source):
        raise Incomposable("first 的目标与 second 的源不一致")
    if first.is_rooted and second.is_rooted and first.target_root != second.source_root:
        raise Incomposable("根不一致")
    vertex_map = {v: second.vertex_map[w] for v, w in first.vertex_map.items()}
    edge_map = {
        e: second.edge_map[f] for e, f in first.edge_map.items() if f in second.edge_map
    }
    roots = (None, None)
    if first.is_rooted and second.is_rooted:
        roots = (first.source_root, second.target_root)
    return Contraction(first.source, second.target, vertex_map, edge_map, *roots)


def quotient_by_edges(graph, edges, root=None):
    """
    按边集做商 G/S

    合并块以块内自然序最小的顶点命名；未收缩的边保留标识符与端点顺序。
    S 含圈时结果不再是同伦等价，返回的映射仅记录顶点与边的去向。

    Args:
        graph: 图
        edges: 要收缩的边标识符集合
        root: 可选根，随映射一起传递

    Returns:
        tuple: (商图, Contraction)
    """
    edges = set(edges)
    for e in edges:
        if not graph.has_edge(e):
            raise UnknownEdge(f"未知的边: {e!r}")
    uf = UnionFind(graph.vertices)
    for e in edges:
        uf.union(*graph.edge(e).ends)
    blocks = defaultdict(list)
    for v in graph.vertices:
        blocks[uf[v]].append(v)
    name = {}
    for members in blocks.values():
        representative = sort_ids(members)[0]
        for v in members:
            name[v] = representative

    kept = [
        (edge.id, name[edge.ends[0]], name[edge.ends[1]])
        for edge in graph.edges if edge.id not in edges
    ]
    vertices = sorted(set(name.values()), key=natural_key)
    if isinstance(graph, Tree):
        quotient = Tree(vertices, kept)
    else:
        quotient = Graph(vertices, kept)
    roots = (None, None) if root is None else (root, name[root])
    contraction = Contraction(graph, quotient, name, {e[0]: e[0] for e in kept}, *roots)
    return quotient, contraction


class GraphEmbedding:
    """图的单射态射"""

    def __init__(self, source, target, vertex_map, edge_map):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        self.edge_map = dict(edge_map)

    def half_edge_image(self, half_edge):
        """
        半边的像：像边上位于 ι(v(h)) 的那一端

        Args:
            half_edge: (edge_id, end)

        Returns:
            tuple: 目标图中的半边
        """
        edge_id, end = half_edge
        edge = self.source.edge(edge_id)
        image = self.target.edge(self.edge_map[edge_id])
        mapped = tuple(self.vertex_map[x] for x in edge.ends)
        if mapped == image.ends:
            return image.id, end
        return image.id, 1 - end

    def __eq__(self, other):
        return (
            isinstance(other, GraphEmbedding)
            and self.source == other.source
            and self.target == other.target
            and self.vertex_map == other.vertex_map
            and self.edge_map == other.edge_map
        )

    def __repr__(self):
        return f"GraphEmbedding({self.source!r} -> {self.target!r})"


def make_embedding(source, target, vertex_map, edge_map):
    """
    构造并校验图嵌入

    Args:
        source: 源图
        target: 目标图
        vertex_map: 顶点单射
        edge_map: 边单射，须与关联关系相容

    Returns:
        GraphEmbedding
    """
    vertex_map = {str(k): str(v) for k, v in vertex_map.items()}
    edge_map = {str(k): str(v) for k, v in edge_map.items()}
    if set(vertex_map) != set(source.vertices) or set(edge_map) != set(source.edge_ids):
        raise InvalidEmbedding("嵌入必须定义在全部顶点与边上")
    if len(set(vertex_map.values())) != len(vertex_map):
        raise NotInjective("顶点映射不是单射")
    if len(set(edge_map.values())) != len(edge_map):
        raise NotInjective("边映射不是单射")
    for v, w in vertex_map.items():
        if not target.has_vertex(w):
            raise UnknownVertex(f"像 {w!r} 不是目标图的顶点")
    for e, f in edge_map.items():
        image = target.edge(f)
        mapped = _pair_key(*(vertex_map[x] for x in source.edge(e).ends))
        if mapped != _pair_key(*image.ends):
            raise InvalidEmbedding(f"边 {e!r} 的像 {f!r} 与顶点映射不相容")
    return GraphEmbedding(source, target, vertex_map, edge_map)


def identity_embedding(graph):
    return GraphEmbedding(
        graph, graph, {v: v for v in graph.vertices}, {e: e for e in graph.edge_ids}
    )


class OrderEmbedding:
    """有根树之间保根的序嵌入"""

    def __init__(self, source, target, vertex_map):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)

    def __eq__(self, other):
        return (
            isinstance(other, OrderEmbedding)
            and self.source == other.source
            and self.target == other.target
            and self.vertex_map == other.vertex_map
        )

    def __repr__(self):
        return f"OrderEmbedding({self.source!r} -> {self.target!r})"


def make_order_embedding(source, target, vertex_map):
    """
    构造并校验序嵌入

    Args:
        source: RootedTree
        target: RootedTree
        vertex_map: 顶点单射

    Returns:
        OrderEmbedding
    """
    vertex_map = {str(k): str(v) for k, v in vertex_map.items()}
    if set(vertex_map) != set(source.tree.vertices):
        raise InvalidEmbedding("序嵌入必须定义在全部顶点上")
    if len(set(vertex_map.values())) != len(vertex_map):
        raise NotInjective("顶点映射不是单射")
    if vertex_map[source.root] != target.root:
        raise NotRootPreserving("序嵌入不保持根")
    for v in source.tree.vertices:
        for w in source.tree.vertices:
            if source.leq(v, w) != target.leq(vertex_map[v], vertex_map[w]):
                raise InvalidEmbedding(f"顶点对 ({v!r}, {w!r}) 的序关系未被保持")
    return OrderEmbedding(source, target, vertex_map)


def rooted_duality(morphism):
    """
    有根收缩与序嵌入之间的对偶

    收缩 φ: T -> T' 对应序嵌入 T' -> T，把每个顶点送到其纤维中的最大顶点；
    序嵌入 ψ: T' -> T 对应收缩 T -> T'，把 w 送到像位于 w 上方（含相等）的最小顶点。

    Args:
        morphism: 有根的 Contraction 或 OrderEmbedding

    Returns:
        对偶态射
    """
    if isinstance(morphism, Contraction):
        if not morphism.is_rooted:
            raise NotRootPreserving("对偶需要有根收缩")
        source = morphism.rooted_source()
        target = morphism.rooted_target()
        vertex_map = {w: source.maximum(morphism.fiber(w)) for w in target.tree.vertices}
        return OrderEmbedding(target, source, vertex_map)

    if isinstance(morphism, OrderEmbedding):
        small, big = morphism.source, morphism.target
        vertex_map = {}
        for w in big.tree.vertices:
            above = [u for u in small.tree.vertices if big.leq(w, morphism.vertex_map[u])]
            lowest = [u for u in above if all(small.leq(u, other) for other in above)]
            if len(lowest) != 1:
                raise InvalidEmbedding(f"顶点 {w!r} 上方没有唯一的最小原像")
            vertex_map[w] = lowest[0]
        return make_contraction(
            big.tree, small.tree, vertex_map, roots=(big.root, small.root)
        )

    raise TypeError(f"无法对 {type(morphism).__name__} 取对偶")
