"""
链复形的同调：整系数（Smith 标准形）与有理系数（行化简）
"""

import logging
from typing import NamedTuple

from sympy import QQ, Matrix, Rational
from sympy.polys.matrices import DomainMatrix

from algebra.matrices import (
    rank_over_rationals, rational_nullspace, rational_rref, smith_normal_form,
)
from utils.exceptions import NotAComplex

logger = logging.getLogger(__name__)


class HomologyGroup(NamedTuple):
    """有限生成阿贝尔群 Z^r ⊕ Z/d1 ⊕ Z/d2 ⊕ ...，满足 d1 | d2 | ..."""
    free_rank: int
    torsion: tuple = ()

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def describe(self):
        """可读形式，例如 Z^2 + Z/2"""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion)}


def _check_pair(d_k, d_k1):
    if d_k.ncols != d_k1.nrows:
        raise NotAComplex(f"形状不可复合: ∂_k 为 {d_k.shape}, ∂_(k+1) 为 {d_k1.shape}")
    if not (d_k @ d_k1).is_zero():
        raise NotAComplex("∂_k · ∂_(k+1) ≠ 0")


def homology_from_boundaries(d_k, d_k1, check=True):
    """
    由相邻边界映射计算 H_k

    Args:
        d_k: ∂_k: C_k -> C_(k-1)，形状 dim C_(k-1) × dim C_k
        d_k1: ∂_(k+1): C_(k+1) -> C_k
        check: 是否验证 ∂_k · ∂_(k+1) = 0

    Returns:
        HomologyGroup
    """
    if check:
        _check_pair(d_k, d_k1)
    smith = smith_normal_form(d_k1)
    rank_k = smith_normal_form(d_k).rank
    free_rank = d_k.ncols - rank_k - smith.rank
    torsion = tuple(d for d in smith.invariants if d > 1)
    return HomologyGroup(free_rank, torsion)


def betti_from_boundaries(d_k, d_k1, check=True):
    """有理系数 Betti 数 dim C_k - rank ∂_k - rank ∂_(k+1)"""
    if check:
        _check_pair(d_k, d_k1)
    return d_k.ncols - rank_over_rationals(d_k) - rank_over_rationals(d_k1)


# ----------------------------------------------------------------------
# 有理同调的基与诱导映射
# ----------------------------------------------------------------------
def _columns_to_domain(columns, height):
    """列向量列表 -> QQ 上的 DomainMatrix"""
    if not columns:
        return None
    rows = [[QQ.from_sympy(Rational(column[i])) for column in columns]
            for i in range(height)]
    return DomainMatrix(rows, (height, len(columns)), QQ)


def _boundary_columns(d_k1):
    """∂_(k+1) 的像的一组基（线性无关的列）"""
    if d_k1.is_zero():
        return []
    _, pivots = rational_rref(d_k1.to_domain(QQ))
    dense = d_k1.to_dense()
    return [[dense[i][j] for i in range(d_k1.nrows)] for j in pivots]


class RationalHomologyBasis(NamedTuple):
    """Z_k = B ⊕ span(representatives)"""
    boundaries: list
    representatives: list
    dimension: int


def rational_homology_basis(d_k, d_k1):
    """
    选取 H_k(·; Q) 的代表元

    Args:
        d_k: ∂_k
        d_k1: ∂_(k+1)

    Returns:
        RationalHomologyBasis
    """
    height = d_k.ncols
    cycles = rational_nullspace(d_k)
    boundaries = _boundary_columns(d_k1)
    combined = _columns_to_domain(boundaries + cycles, height)
    if combined is None:
        return RationalHomologyBasis(boundaries, [], 0)
    _, pivots = rational_rref(combined)
    offset = len(boundaries)
    representatives = [cycles[p - offset] for p in pivots if p >= offset]
    return RationalHomologyBasis(boundaries, representatives, len(representatives))


def induced_map_on_homology(chain_matrix, source_basis, target_basis):
    """
    链映射在 H_k(·; Q) 上诱导的矩阵

    Args:
        chain_matrix: IntMatrix，C_k(源) -> C_k(目标)
        source_basis: 源的 RationalHomologyBasis
        target_basis: 目标的 RationalHomologyBasis

    Returns:
        sympy Matrix: 形状 dim H_k(目标) × dim H_k(源)
    """
    rows_out = target_basis.dimension
    cols_out = source_basis.dimension
    if rows_out == 0 or cols_out == 0:
        return Matrix.zeros(rows_out, cols_out)
    dense = Matrix(chain_matrix.to_dense())
    images = [list(dense * Matrix(r)) for r in source_basis.representatives]
    known = target_basis.boundaries + target_basis.representatives
    height = chain_matrix.nrows
    reduced, pivots = rational_rref(_columns_to_domain(known + images, height))
    if tuple(pivots[:len(known)]) != tuple(range(len(known))) or len(pivots) != len(known):
        raise NotAComplex("链映射没有把闭链送到闭链")
    offset = len(target_basis.boundaries)
    result = Matrix.zeros(rows_out, cols_out)
    for col, _ in enumerate(images):
        for row in range(rows_out):
            result[row, col] = reduced[offset + row, len(known) + col]
    logger.debug("诱导映射 %dx%d, 秩 %d", rows_out, cols_out, result.rank())
    return result


