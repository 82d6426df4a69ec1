"""
精确整数矩阵与 Smith 标准形

边界矩阵按“列对应源、行对应目标”存储：∂_k 的形状为 dim C_{k-1} × dim C_k。
"""

import logging
from typing import NamedTuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)


class IntMatrix:
    """稀疏整数矩阵：按行存储非零元"""

    def __init__(self, nrows, ncols, entries=None):
        """
        初始化矩阵

        Args:
            nrows: 行数
            ncols: 列数
            entries: 可选 {(i, j): 值}，零值被忽略
        """
        self.nrows = int(nrows)
        self.ncols = int(ncols)
        self.rows = {}
        for (i, j), value in (entries or {}).items():
            self.add(i, j, value)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, rows, ncols=None):
        """由嵌套列表构造；空列表需显式给出列数"""
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(len(rows), ncols, entries)

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------
    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, key):
        i, j = key
        return self.rows.get(i, {}).get(j, 0)

    def add(self, i, j, value):
        """A[i, j] += value"""
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"下标 ({i}, {j}) 超出形状 {self.shape}")
        if not value:
            return
        row = self.rows.setdefault(i, {})
        total = row.get(j, 0) + int(value)
        if total:
            row[j] = total
        else:
            del row[j]
            if not row:
                del self.rows[i]

    def items(self):
        """按 (行, 列) 顺序遍历非零元"""
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield (i, j), row[j]

    @property
    def nnz(self):
        return sum(len(row) for row in self.rows.values())

    def is_zero(self):
        return not self.rows

    def to_dense(self):
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), value in self.items():
            dense[i][j] = value
        return dense

    def to_domain(self, domain=ZZ):
        """转为稀疏格式的 sympy DomainMatrix"""
        rows = {
            i: {j: domain(v) for j, v in row.items()} for i, row in self.rows.items()
        }
        return DomainMatrix(rows, self.shape, domain)

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------
    def transpose(self):
        return IntMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.items()})

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"形状不匹配: {self.shape} @ {other.shape}")
        result = IntMatrix(self.nrows, other.ncols)
        for i, row in self.rows.items():
            for k, a in row.items():
                for j, b in other.rows.get(k, {}).items():
                    result.add(i, j, a * b)
        return result

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


class SmithResult(NamedTuple):
    """U·A·V = D；invariants 为 D 的非零对角元"""
    invariants: tuple
    rank: int
    U: IntMatrix = None
    V: IntMatrix = None


class _Eliminator:
    """带行列索引的稀疏消元状态"""

    def __init__(self, matrix, transforms):
        self.rows = {i: dict(row) for i, row in matrix.rows.items()}
        self.cols = {}
        for i, row in self.rows.items():
            for j in row:
                self.cols.setdefault(j, set()).add(i)
        self.transforms = transforms
        if transforms:
            self.u = {i: {i: 1} for i in range(matrix.nrows)}
            # V 以转置形式按行存储：列运算即转置的行运算
            self.vt = {j: {j: 1} for j in range(matrix.ncols)}

    @staticmethod
    def _axpy(target, source, factor):
        """target += factor * source，返回发生变化的键及其是否非零"""
        changes = []
        for key, value in source.items():
            total = target.get(key, 0) + factor * value
            if total:
                target[key] = total
                changes.append((key, True))
            else:
                target.pop(key, None)
                changes.append((key, False))
        return changes

    def add_row(self, target, source, factor):
        """第 target 行 += factor * 第 source 行"""
        row = self.rows.setdefault(target, {})
        for j, nonzero in self._axpy(row, self.rows[source], factor):
            if nonzero:
                self.cols.setdefault(j, set()).add(target)
            else:
                self.cols[j].discard(target)
        if not row:
            del self.rows[target]
        if self.transforms:
            self._axpy(self.u[target], self.u[source], factor)

    def add_col(self, target, source, factor):
        """第 target 列 += factor * 第 source 列"""
        for i in list(self.cols.get(source, ())):
            value = self.rows[i][source]
            row = self.rows[i]
            total = row.get(target, 0) + factor * value
            if total:
                row[target] = total
                self.cols.setdefault(target, set()).add(i)
            else:
                row.pop(target, None)
                self.cols[target].discard(i)
        if self.transforms:
            self._axpy(self.vt[target], self.vt[source], factor)

    def choose_pivot(self):
        """最小绝对值优先，Markowitz 填充代价次之"""
        best = None
        for i, row in self.rows.items():
            for j, value in row.items():
                key = (abs(value), (len(row) - 1) * (len(self.cols[j]) - 1), i, j)
                if best is None or key < best:
                    best = key
        return None if best is None else (best[2], best[3])

    def eliminate(self, i, j):
        """清空主元所在的行与列，返回最终主元位置"""
        while True:
            pivot = self.rows[i][j]
            for other in sorted(self.cols[j] - {i}):
                self.add_row(other, i, -(self.rows[other][j] // pivot))
            for other in sorted(set(self.rows[i]) - {j}):
                self.add_col(other, j, -(self.rows[i][other] // pivot))
            rest = [(abs(self.rows[r][j]), r, j) for r in self.cols[j] if r != i]
            rest += [(abs(v), i, c) for c, v in self.rows[i].items() if c != j]
            if not rest:
                return i, j
            # 余数严格变小，换到更小的主元继续
            _, i, j = min(rest)

    def retire(self, i, j):
        value = self.rows.pop(i)[j]
        del self.cols[j]
        return value


def smith_normal_form(matrix, transforms=False):
    """
    计算整数矩阵的 Smith 标准形

    Args:
        matrix: IntMatrix
        transforms: 是否同时返回幺模矩阵 U, V

    Returns:
        SmithResult: 不变因子 d1 | d2 | ...，秩，以及可选的 U, V
    """
    state = _Eliminator(matrix, transforms)
    pivots = []
    while True:
        position = state.choose_pivot()
        if position is None:
            break
        i, j = state.eliminate(*position)
        pivots.append((i, j, state.retire(i, j)))
    logger.debug("SNF %dx%d: 秩 %d", matrix.nrows, matrix.ncols, len(pivots))

    if not transforms:
        invariants = _diagonal_invariants([abs(d) for _, _, d in pivots])
        return SmithResult(tuple(invariants), len(pivots))

    # 置换行列使主元落在对角线上
    row_order = [i for i, _, _ in pivots]
    row_order += [i for i in range(matrix.nrows) if i not in set(row_order)]
    col_order = [j for _, j, _ in pivots]
    col_order += [j for j in range(matrix.ncols) if j not in set(col_order)]
    u = [dict(state.u[i]) for i in row_order]
    vt = [dict(state.vt[j]) for j in col_order]
    diagonal = [d for _, _, d in pivots]
    for k, d in enumerate(diagonal):
        if d < 0:
            diagonal[k] = -d
            u[k] = {key: -value for key, value in u[k].items()}
    _fix_divisibility(diagonal, u, vt)

    U = IntMatrix(matrix.nrows, matrix.nrows,
                  {(r, c): v for r, row in enumerate(u) for c, v in row.items()})
    V = IntMatrix(matrix.ncols, matrix.ncols,
                  {(r, c): v for c, row in enumerate(vt) for r, v in row.items()})
    return SmithResult(tuple(diagonal), len(pivots), U, V)


def _diagonal_invariants(diagonal):
    """把对角元整理成整除链"""
    diagonal = list(diagonal)
    for a in range(len(diagonal)):
        for b in range(a + 1, len(diagonal)):
            x, y = diagonal[a], diagonal[b]
            if y % x:
                g = ZZ.gcd(x, y)
                diagonal[a], diagonal[b] = g, x * y // g
    return [int(d) for d in diagonal]


def _combine(rows, a, b, coefficients):
    """行 a, b 同时换成 (p·a + q·b, r·a + s·b)"""
    p, q, r, s = coefficients
    first, second = rows[a], rows[b]
    new_first, new_second = {}, {}
    for key in set(first) | set(second):
        x, y = first.get(key, 0), second.get(key, 0)
        if p * x + q * y:
            new_first[key] = p * x + q * y
        if r * x + s * y:
            new_second[key] = r * x + s * y
    rows[a], rows[b] = new_first, new_second


def _fix_divisibility(diagonal, u, vt):
    """用 2×2 幺模变换把 diag(a, b) 换成 diag(gcd, lcm)，同时更新 U 与 V"""
    for a in range(len(diagonal)):
        for b in range(a + 1, len(diagonal)):
            x, y = diagonal[a], diagonal[b]
            if y % x == 0:
                continue
            s, t, g = (int(v) for v in ZZ.gcdex(ZZ(x), ZZ(y)))
            # U' = [[s, t], [-y/g, x/g]]，V' = [[1, -t·y/g], [1, s·x/g]]
            _combine(u, a, b, (s, t, -y // g, x // g))
            _combine(vt, a, b, (1, 1, -t * y // g, s * x // g))
            diagonal[a], diagonal[b] = g, x * y // g


def rank_over_rationals(matrix):
    """
    有理数域上的秩

    Args:
        matrix: IntMatrix

    Returns:
        int
    """
    if matrix.is_zero():
        return 0
    return int(matrix.to_domain(QQ).rank())


def rational_rref(matrix):
    """
    有理数域上的简化行阶梯形

    Args:
        matrix: DomainMatrix（QQ）

    Returns:
        tuple: (sympy Matrix, 主元列元组)
    """
    reduced, pivots = matrix.rref()
    return reduced.to_Matrix(), tuple(pivots)


def rational_nullspace(matrix):
    """
    整数矩阵在 QQ 上的零空间基

    Args:
        matrix: IntMatrix

    Returns:
        list: 每个基向量为长度 ncols 的 sympy Rational 列表
    """
    n = matrix.ncols
    if matrix.is_zero():
        return [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    reduced, pivots = rational_rref(matrix.to_domain(QQ))
    basis = []
    for free in (j for j in range(n) if j not in set(pivots)):
        vector = [0] * n
        vector[free] = 1
        for row, column in enumerate(pivots):
            vector[column] = -reduced[row, free]
        basis.append(vector)
    return basis
