"""
多重图、树与有根树

图是至多一维的有限 CW 复形：允许自环与重边，边以唯一标识符区分。
顶点与边始终按自然顺序存储，所有枚举因此是确定性的。
"""

from functools import cached_property

import networkx as nx
from networkx.utils import UnionFind

from utils.exceptions import (
    DuplicateEdge, DuplicateVertex, InvalidGraph, NotATree, UnknownEdge, UnknownVertex,
)
from utils.helpers import natural_key, sort_ids


class Edge:
    """一条边：标识符与有序端点对，两端相同即为自环"""

    __slots__ = ('id', 'ends')

    def __init__(self, edge_id, ends):
        if len(ends) != 2:
            raise InvalidGraph(f"边 {edge_id!r} 必须恰有两个端点")
        self.id = str(edge_id)
        self.ends = (str(ends[0]), str(ends[1]))

    @property
    def is_loop(self):
        return self.ends[0] == self.ends[1]

    def other_end(self, vertex):
        """返回边在 vertex 另一侧的端点"""
        if self.ends[0] == vertex:
            return self.ends[1]
        if self.ends[1] == vertex:
            return self.ends[0]
        raise UnknownVertex(f"顶点 {vertex!r} 不在边 {self.id!r} 上")

    def __eq__(self, other):
        return isinstance(other, Edge) and self.id == other.id and self.ends == other.ends

    def __hash__(self):
        return hash((self.id, self.ends))

    def __repr__(self):
        return f"Edge({self.id!r}, {self.ends[0]!r}-{self.ends[1]!r})"


class Graph:
    """有限多重图"""

    def __init__(self, vertices, edges=()):
        """
        初始化图

        Args:
            vertices: 顶点标识符序列
            edges: Edge 或 (id, a, b) 三元组序列
        """
        vertex_list = [str(v) for v in vertices]
        if len(set(vertex_list)) != len(vertex_list):
            raise DuplicateVertex("顶点标识符重复")
        vertex_set = frozenset(vertex_list)

        edge_list = []
        seen = set()
        for item in edges:
            edge = item if isinstance(item, Edge) else Edge(item[0], (item[1], item[2]))
            if edge.id in seen:
                raise DuplicateEdge(f"边标识符重复: {edge.id!r}")
            for end in edge.ends:
                if end not in vertex_set:
                    raise UnknownVertex(f"边 {edge.id!r} 的端点 {end!r} 未声明")
            seen.add(edge.id)
            edge_list.append(edge)

        self._vertices = tuple(sort_ids(vertex_list))
        self._edges = tuple(sorted(edge_list, key=lambda e: natural_key(e.id)))
        self._vertex_set = vertex_set

    # ------------------------------------------------------------------
    # 基本访问
    # ------------------------------------------------------------------
    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def vertex_set(self):
        return self._vertex_set

    @property
    def size(self):
        """|G|：边数"""
        return len(self._edges)

    @cached_property
    def _edge_index(self):
        return {edge.id: edge for edge in self._edges}

    @cached_property
    def edge_ids(self):
        return tuple(edge.id for edge in self._edges)

    def edge(self, edge_id):
        try:
            return self._edge_index[edge_id]
        except KeyError:
            raise UnknownEdge(f"未知的边: {edge_id!r}") from None

    def has_edge(self, edge_id):
        return edge_id in self._edge_index

    def has_vertex(self, vertex):
        return vertex in self._vertex_set

    # ------------------------------------------------------------------
    # 半边
    # ------------------------------------------------------------------
    @cached_property
    def _half_edges(self):
        table = {v: [] for v in self._vertices}
        for edge in self._edges:
            for end, vertex in enumerate(edge.ends):
                table[vertex].append((edge.id, end))
        # 边的顺序已是自然序，端点标记 0 在 1 之前
        return {v: tuple(hs) for v, hs in table.items()}

    def half_edges(self, vertex):
        """
        顶点处的半边，按 (边标识符, 端点标记) 排序

        Args:
            vertex: 顶点

        Returns:
            tuple: ((edge_id, end), ...)，自环贡献两条
        """
        try:
            return self._half_edges[vertex]
        except KeyError:
            raise UnknownVertex(f"未知的顶点: {vertex!r}") from None

    def vertex_of(self, half_edge):
        """半边 h 所在的顶点 v(h)"""
        edge_id, end = half_edge
        return self.edge(edge_id).ends[end]

    def degree(self, vertex):
        return len(self.half_edges(vertex))

    def neighbors(self, vertex):
        """相邻顶点集合（不含通过自环到达的自身）"""
        result = set()
        for edge_id, end in self.half_edges(vertex):
            other = self._edge_index[edge_id].ends[1 - end]
            if other != vertex:
                result.add(other)
        return result

    @cached_property
    def adjacency(self):
        return {v: frozenset(self.neighbors(v)) for v in self._vertices}

    def leaves(self):
        """一度顶点"""
        return [v for v in self._vertices if self.degree(v) == 1]

    # ------------------------------------------------------------------
    # 连通性
    # ------------------------------------------------------------------
    def to_networkx(self):
        """转为 networkx 多重图，边键为边标识符"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for edge in self._edges:
            graph.add_edge(edge.ends[0], edge.ends[1], key=edge.id)
        return graph

    def to_networkx_simple(self):
        """转为 networkx 简单图（重边合并、自环保留）"""
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(edge.ends for edge in self._edges)
        return graph

    @cached_property
    def components(self):
        """连通分支（按最小顶点的自然序排列）"""
        parts = [frozenset(c) for c in nx.connected_components(self.to_networkx())]
        return tuple(sorted(parts, key=lambda c: natural_key(sort_ids(c)[0])))

    @property
    def is_connected(self):
        return len(self.components) <= 1

    @property
    def rank(self):
        """图拟阵的秩 |V| - #分支"""
        return len(self._vertices) - len(self.components)

    def induces_connected(self, subset):
        """
        判断顶点子集的导出子图是否连通

        Args:
            subset: 顶点集合（非空）

        Returns:
            bool
        """
        subset = set(subset)
        if not subset:
            return False
        uf = UnionFind(subset)
        for edge in self._edges:
            a, b = edge.ends
            if a in subset and b in subset:
                uf.union(a, b)
        root = uf[next(iter(subset))]
        return all(uf[v] == root for v in subset)

    def is_tree(self):
        return (
            len(self._vertices) >= 1
            and self.is_connected
            and len(self._edges) == len(self._vertices) - 1
            and not any(edge.is_loop for edge in self._edges)
        )

    # ------------------------------------------------------------------
    # 比较
    # ------------------------------------------------------------------
    def same_as(self, other):
        return self._vertices == other.vertices and self._edges == other.edges

    def __eq__(self, other):
        return isinstance(other, Graph) and self.same_as(other)

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"{type(self).__name__}(|V|={len(self._vertices)}, |E|={len(self._edges)})"


class Tree(Graph):
    """树：连通、无自环且边数等于顶点数减一"""

    def __init__(self, vertices, edges=()):
        super().__init__(vertices, edges)
        if not self.is_tree():
            raise NotATree(f"不是树: {len(self.vertices)} 个顶点, {len(self.edges)} 条边")

    @classmethod
    def from_graph(cls, graph):
        if isinstance(graph, Tree):
            return graph
        return cls(graph.vertices, graph.edges)


class RootedTree:
    """有根树；根是唯一最大元，v <= w 当且仅当 w 位于 v 到根的路径上"""

    def __init__(self, tree, root):
        self.tree = Tree.from_graph(tree)
        root = str(root)
        if not self.tree.has_vertex(root):
            raise UnknownVertex(f"根 {root!r} 不是树的顶点")
        self.root = root

    @cached_property
    def parent(self):
        """每个非根顶点的唯一覆盖元"""
        return dict(nx.bfs_predecessors(self.tree.to_networkx(), self.root))

    @cached_property
    def depth(self):
        depths = {self.root: 0}
        for child, parent in nx.bfs_predecessors(self.tree.to_networkx(), self.root):
            depths[child] = depths[parent] + 1
        return depths

    def ancestors(self, vertex):
        """vertex 及其上方的全部顶点（从 vertex 到根）"""
        chain = [vertex]
        while chain[-1] != self.root:
            chain.append(self.parent[chain[-1]])
        return chain

    def leq(self, v, w):
        """偏序 v <= w"""
        return w in self.ancestors(v)

    def maximum(self, vertices):
        """
        子树中的最大顶点（最靠近根）

        Args:
            vertices: 导出连通子图的顶点集合

        Returns:
            str: 唯一最大元
        """
        return min(vertices, key=lambda v: (self.depth[v], natural_key(v)))

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.root == other.root and self.tree == other.tree

    def __hash__(self):
        return hash((self.tree, self.root))

    def __repr__(self):
        return f"RootedTree(|T|={self.tree.size}, root={self.root!r})"
