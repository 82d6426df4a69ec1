"""
图拟阵的平坦集

图拟阵的平坦集与顶点集的连通划分一一对应：每块导出连通子图，
平坦集的边为全部块内边（含自环）。
"""

import logging
from functools import cached_property

from networkx.utils import UnionFind

from config import resolve_guard
from core.graph import Graph
from core.morphisms import quotient_by_edges
from utils.exceptions import NotAFlat, TooLarge, UnknownEdge
from utils.helpers import natural_key, sort_ids

logger = logging.getLogger(__name__)


def _block_key(block):
    return tuple(natural_key(v) for v in sort_ids(block))


class Flat:
    """一个平坦集：顶点划分及其闭边集"""

    def __init__(self, graph, blocks):
        self.graph = graph
        self.blocks = tuple(sorted((frozenset(b) for b in blocks), key=_block_key))
        block_of = {}
        for k, block in enumerate(self.blocks):
            for v in block:
                block_of[v] = k
        self.block_of = block_of
        self.edges = frozenset(
            e.id for e in graph.edges if block_of[e.ends[0]] == block_of[e.ends[1]]
        )

    @property
    def rank(self):
        return len(self.graph.vertices) - len(self.blocks)

    @property
    def corank(self):
        return self.graph.rank - self.rank

    def nontrivial_blocks(self):
        return [b for b in self.blocks if len(b) > 1]

    def leq(self, other):
        """划分加细序：self 的每一块落在 other 的某一块内"""
        return all(
            len({other.block_of[v] for v in block}) == 1 for block in self.blocks
        )

    def key(self):
        return tuple(_block_key(b) for b in self.blocks)

    def __eq__(self, other):
        return isinstance(other, Flat) and self.graph == other.graph and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        shown = [sort_ids(b) for b in self.nontrivial_blocks()]
        return f"Flat(rank={self.rank}, blocks={shown})"


class FlatLattice:
    """平坦集格，按秩分层"""

    def __init__(self, graph, flats):
        self.graph = graph
        self.flats = sorted(flats, key=lambda f: (f.rank, f.key()))

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    @property
    def bottom(self):
        return self.flats[0]

    @property
    def top(self):
        return self.flats[-1]

    def by_rank(self, rank):
        return [f for f in self.flats if f.rank == rank]

    def by_corank(self, corank):
        return [f for f in self.flats if f.corank == corank]

    @cached_property
    def mobius_from_bottom(self):
        """μ(⊥, F)"""
        values = {}
        for flat in self.flats:
            if flat == self.bottom:
                values[flat] = 1
                continue
            values[flat] = -sum(
                values[lower] for lower in self.flats
                if lower.rank < flat.rank and lower.leq(flat)
            )
        return values

    def summary(self):
        """按余秩统计的平坦集个数"""
        counts = {}
        for flat in self.flats:
            counts[flat.corank] = counts.get(flat.corank, 0) + 1
        return dict(sorted(counts.items()))


def _connected_blocks(adjacency, order, start, allowed):
    """allowed 中包含 start 的全部导出连通子集（按最小候选分支取或不取）"""
    results = []

    def grow(block, frontier, excluded):
        if not frontier:
            results.append(frozenset(block))
            return
        vertex = min(frontier, key=order.__getitem__)
        widened = (frontier - {vertex}) | {
            u for u in adjacency[vertex]
            if u in allowed and u not in block and u not in excluded and u != vertex
        }
        grow(block | {vertex}, widened, excluded)
        grow(block, frontier - {vertex}, excluded | {vertex})

    grow({start}, {u for u in adjacency[start] if u in allowed and u != start}, frozenset())
    return results


def connected_partitions(graph):
    """顶点集划分为导出连通块的全部方式"""
    adjacency = graph.adjacency
    order = {v: k for k, v in enumerate(graph.vertices)}
    partitions = []

    def split(remaining, blocks):
        if not remaining:
            partitions.append(list(blocks))
            return
        start = min(remaining, key=order.__getitem__)
        for block in _connected_blocks(adjacency, order, start, remaining):
            split(remaining - block, blocks + [block])

    split(frozenset(graph.vertices), [])
    return partitions


def flats(graph, max_vertices=None):
    """
    枚举图拟阵的全部平坦集

    Args:
        graph: 图
        max_vertices: 顶点数上限，缺省读取配置

    Returns:
        FlatLattice
    """
    limit = resolve_guard('max_flat_vertices', max_vertices)
    if len(graph.vertices) > limit:
        logger.warning("平坦集枚举拒绝计算: %d 个顶点超过上限 %d", len(graph.vertices), limit)
        raise TooLarge(f"平坦集枚举: {len(graph.vertices)} 个顶点超过上限 {limit}")
    lattice = FlatLattice(graph, [Flat(graph, p) for p in connected_partitions(graph)])
    logger.debug("平坦集 %r: %d 个", graph, len(lattice))
    return lattice


def closure(graph, edges):
    """
    边集的闭包：端点并查集，再取全部块内边

    Args:
        graph: 图
        edges: 边标识符集合

    Returns:
        Flat
    """
    uf = UnionFind(graph.vertices)
    for e in edges:
        if not graph.has_edge(e):
            raise UnknownEdge(f"未知的边: {e!r}")
        uf.union(*graph.edge(e).ends)
    return Flat(graph, uf.to_sets())


def is_flat(graph, edges):
    edges = frozenset(edges)
    return closure(graph, edges).edges == edges


def flat_from_edges(graph, edges):
    """由闭边集构造平坦集，不闭时报 NotAFlat"""
    flat = closure(graph, edges)
    if flat.edges != frozenset(edges):
        raise NotAFlat(f"边集不是平坦集，闭包多出 {sort_ids(flat.edges - frozenset(edges))}")
    return flat


def minor(graph, flat):
    """
    平坦集给出的两个子式

    Args:
        graph: 图
        flat: graph 的 Flat

    Returns:
        tuple: (限制图 M_F：全部顶点与 F 的边, 收缩图 G/F)
    """
    if flat.graph != graph or closure(graph, flat.edges) != flat:
        raise NotAFlat("给定的平坦集不属于该图")
    restriction = Graph(graph.vertices, [graph.edge(e) for e in sort_ids(flat.edges)])
    contracted, _ = quotient_by_edges(graph, flat.edges)
    return restriction, contracted


def rank_one_count(graph, max_vertices=None):
    """秩为 1 的平坦集个数"""
    return len(flats(graph, max_vertices).by_rank(1))


def corank_one_count(graph, max_vertices=None):
    """余秩为 1 的平坦集个数"""
    return len(flats(graph, max_vertices).by_corank(1))
