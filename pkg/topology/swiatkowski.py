"""
约化 Świątkowski 复形

S̃(G) 是边多项式环 A_G 上各顶点局部模 S̃(v) 的张量积，双分次 (i, n)：
每条边次数 (0,1)，每个差分因子 h - h' 次数 (1,1)。

生成元记为 (monomial, occupied, factors)：
    monomial  边下标的非降元组，次数 n - i - |occupied|
    occupied  被占据的孤立顶点（次数 (0,1)，边界为零）
    factors   ((v, j), ...)，按顶点顺序排列，表示 h_v^(j) - h_v^(0)，j >= 1
"""

import logging
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from algebra.homology import betti_from_boundaries, homology_from_boundaries
from algebra.matrices import IntMatrix
from config import resolve_guard
from utils.exceptions import BoundsTooLarge, ConsistencyError, OutOfBounds
from utils.helpers import binomial, multichoose

logger = logging.getLogger(__name__)


def _elementary_symmetric(weights, k):
    """e_k(weights)"""
    table = [1] + [0] * k
    for w in weights:
        for j in range(k, 0, -1):
            table[j] += table[j - 1] * w
    return table[k]


def piece_rank_formula(graph, i, n):
    """
    S̃(G) 在双次数 (i, n) 的秩（闭式计数）

    Σ_{|D|=i} Π_{v∈D}(deg v - 1) · Σ_o C(#孤立点, o) · multichoose(|E|, n - i - o)
    """
    if i < 0 or n < 0:
        return 0
    weights = [graph.degree(v) - 1 for v in graph.vertices if graph.degree(v) >= 2]
    isolated = sum(1 for v in graph.vertices if graph.degree(v) == 0)
    local = _elementary_symmetric(weights, i) if i <= len(weights) else 0
    if not local:
        return 0
    total = 0
    for o in range(isolated + 1):
        total += binomial(isolated, o) * multichoose(graph.size, n - i - o)
    return local * total


class SwiatkowskiComplex:
    """截断到 n <= n_max、i <= i_max + 1 的约化 Świątkowski 复形"""

    def __init__(self, graph, n_max, i_max, max_generators=None):
        """
        初始化复形

        Args:
            graph: 图
            n_max: 粒子数上界
            i_max: 需要计算同调的最高次数（边界矩阵建到 i_max + 1）
            max_generators: 生成元总数上限，缺省读取配置
        """
        if n_max < 0 or i_max < 0:
            raise OutOfBounds("截断上界必须非负")
        self.graph = graph
        self.n_max = n_max
        self.i_max = i_max
        self.edge_index = {e: k for k, e in enumerate(graph.edge_ids)}
        self.vertex_position = {v: k for k, v in enumerate(graph.vertices)}
        self.essential = [v for v in graph.vertices if graph.degree(v) >= 2]
        self.isolated = [v for v in graph.vertices if graph.degree(v) == 0]

        limit = resolve_guard('max_generators', max_generators)
        total = sum(self.rank(i, n) for i, n in self.bidegrees())
        if total > limit:
            logger.warning("复形生成元 %d 个超过上限 %d", total, limit)
            raise BoundsTooLarge(f"复形需要 {total} 个生成元，超过上限 {limit}")
        logger.debug("Świątkowski 复形 %r: n<=%d, i<=%d, 生成元 %d", graph, n_max, i_max + 1, total)
        self._bases = {}
        self._indices = {}
        self._boundaries = {}

    def bidegrees(self):
        """全部存储的双次数"""
        return [(i, n) for i in range(self.i_max + 2) for n in range(self.n_max + 1)]

    def contains(self, i, n):
        return 0 <= i <= self.i_max + 1 and 0 <= n <= self.n_max

    def rank(self, i, n):
        return piece_rank_formula(self.graph, i, n)

    # ------------------------------------------------------------------
    # 基
    # ------------------------------------------------------------------
    def basis(self, i, n):
        """
        双次数 (i, n) 的有序生成元列表

        顺序：顶点集按升序组合，差分下标按字典序，占据集按大小与字典序，单项式按分次字典序。
        """
        if not self.contains(i, n):
            raise OutOfBounds(f"双次数 ({i}, {n}) 不在截断范围内")
        if (i, n) not in self._bases:
            generators = []
            for support in combinations(self.essential, i):
                choices = [range(1, self.graph.degree(v)) for v in support]
                for indices in product(*choices):
                    factors = tuple(zip(support, indices))
                    # 单项式次数 n - i - o 非负
                    for o in range(min(len(self.isolated), n - i) + 1):
                        for occupied in combinations(self.isolated, o):
                            for monomial in combinations_with_replacement(
                                range(self.graph.size), n - i - o
                            ):
                                generators.append((monomial, occupied, factors))
            self._bases[(i, n)] = generators
            self._indices[(i, n)] = {g: k for k, g in enumerate(generators)}
        return self._bases[(i, n)]

    def index(self, i, n):
        self.basis(i, n)
        return self._indices[(i, n)]

    # ------------------------------------------------------------------
    # 边界
    # ------------------------------------------------------------------
    def boundary(self, i, n):
        """
        ∂_{i,n}: piece(i, n) -> piece(i-1, n)

        Returns:
            IntMatrix: 形状 rank(i-1, n) × rank(i, n)
        """
        if not self.contains(i, n):
            raise OutOfBounds(f"双次数 ({i}, {n}) 不在截断范围内")
        if (i, n) in self._boundaries:
            return self._boundaries[(i, n)]
        columns = self.basis(i, n)
        if i == 0:
            matrix = IntMatrix(0, len(columns))
        else:
            target = self.index(i - 1, n)
            matrix = IntMatrix(len(target), len(columns))
            for col, (monomial, occupied, factors) in enumerate(columns):
                for t, (v, j) in enumerate(factors):
                    half_edges = self.graph.half_edges(v)
                    plus = self.edge_index[half_edges[j][0]]
                    minus = self.edge_index[half_edges[0][0]]
                    if plus == minus:
                        continue
                    sign = -1 if t % 2 else 1
                    rest = factors[:t] + factors[t + 1:]
                    for edge, coefficient in ((plus, sign), (minus, -sign)):
                        image = (tuple(sorted(monomial + (edge,))), occupied, rest)
                        matrix.add(target[image], col, coefficient)
        self._boundaries[(i, n)] = matrix
        return matrix

    def check_square_zero(self):
        """验证 ∂∘∂ = 0，返回不满足的双次数"""
        failures = []
        for i, n in self.bidegrees():
            if i >= 2 and not (self.boundary(i - 1, n) @ self.boundary(i, n)).is_zero():
                failures.append((i, n))
        return failures

    # ------------------------------------------------------------------
    # 同调
    # ------------------------------------------------------------------
    def _check_homology_bounds(self, i, n):
        if i < 0 or n < 0 or i > self.i_max or n > self.n_max:
            raise OutOfBounds(f"H_{i}(UConf_{n}) 超出已构造的范围 i<={self.i_max}, n<={self.n_max}")

    def homology(self, i, n):
        """H_i(UConf_n(G); Z)"""
        self._check_homology_bounds(i, n)
        return homology_from_boundaries(self.boundary(i, n), self.boundary(i + 1, n), check=False)

    def betti(self, i, n):
        """dim H_i(UConf_n(G); Q)"""
        self._check_homology_bounds(i, n)
        return betti_from_boundaries(self.boundary(i, n), self.boundary(i + 1, n), check=False)

    def __repr__(self):
        return f"SwiatkowskiComplex({self.graph!r}, n_max={self.n_max}, i_max={self.i_max})"


@lru_cache(maxsize=128)
def _cached_complex(graph, n_max, i_max, max_generators):
    return SwiatkowskiComplex(graph, n_max, i_max, max_generators)


def build_complex(graph, n_max, i_max, max_generators=None):
    """
    构造（并缓存）截断复形

    Args:
        graph: 图
        n_max: 粒子数上界
        i_max: 同调次数上界
        max_generators: 生成元上限

    Returns:
        SwiatkowskiComplex
    """
    return _cached_complex(graph, n_max, i_max, resolve_guard('max_generators', max_generators))


def homology(graph, i, n, coefficients='z', max_generators=None):
    """
    H_i(UConf_n(G))

    Args:
        graph: 图
        i: 同调次数
        n: 粒子数
        coefficients: 'z' 返回 HomologyGroup，'q' 返回 Betti 数

    Returns:
        HomologyGroup 或 int
    """
    if i < 0 or n < 0:
        raise OutOfBounds("次数与粒子数必须非负")
    complex_ = build_complex(graph, n, i, max_generators)
    if coefficients == 'q':
        return complex_.betti(i, n)
    return complex_.homology(i, n)


def betti(graph, i, n, max_generators=None):
    return homology(graph, i, n, 'q', max_generators)


def essential_vertex_count(graph):
    """度数至少为 3 的顶点个数"""
    return sum(1 for v in graph.vertices if graph.degree(v) >= 3)


def homology_degree_bound(graph):
    """
    i 大于此数时 H_i(UConf_n(G)) = 0

    每个连通分支贡献其本质顶点数；没有本质顶点的圈分支贡献 1。
    """
    circles = sum(
        1 for part in graph.components if all(graph.degree(v) == 2 for v in part)
    )
    return essential_vertex_count(graph) + circles


def euler_characteristic(graph, n, max_generators=None):
    """
    χ(UConf_n(G)) = Σ_i (-1)^i dim H_i(UConf_n(G); Q)

    求和到 homology_degree_bound 为止，并与链层面的交错和相互验证。
    """
    top = homology_degree_bound(graph)
    complex_ = build_complex(graph, n, top, max_generators)
    total = sum((-1) ** i * complex_.betti(i, n) for i in range(top + 1))
    chain_level = chain_euler_characteristic(graph, n)
    if total != chain_level:
        raise ConsistencyError(
            f"χ 截断在 i<={top} 与链层面交错和 {chain_level} 不符，高次同调非零"
        )
    return total


def chain_euler_characteristic(graph, n):
    """Σ_i (-1)^i rank piece(i, n)，对全部 i 求和"""
    width = sum(1 for v in graph.vertices if graph.degree(v) >= 2)
    return sum((-1) ** i * piece_rank_formula(graph, i, n) for i in range(width + 1))
