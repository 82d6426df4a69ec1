"""
多变量多项式拟合

在矩形整数窗口的顶角上做 Newton 前向差分插值，再在更大的稳定子窗口上验证。
"""

import logging
from math import factorial
from typing import NamedTuple

import numpy as np
from sympy import QQ, Integer, Poly, Rational

from algebra.polynomials import MultiPoly
from config import GROWTH_CONFIG
from utils.exceptions import WindowTooSmall

logger = logging.getLogger(__name__)


class FitResult(NamedTuple):
    """拟合结果"""
    polynomial: MultiPoly
    degree_bound: int
    stable: bool
    degrees: tuple
    total_degree: int
    window: tuple
    fit_corner: tuple
    stability_window: tuple
    mismatches: tuple

    @property
    def verdict(self):
        if self.stable:
            return f"stable at degree <= {self.degree_bound}"
        return f"not stable at degree <= {self.degree_bound}"


def sample_window(samples):
    """
    由样本推出矩形窗口

    Args:
        samples: {坐标元组: 整数值}

    Returns:
        tuple: ((lo, hi), ...) 每个坐标一段
    """
    if not samples:
        raise WindowTooSmall("没有样本")
    points = list(samples)
    r = len(points[0])
    window = []
    for c in range(r):
        values = sorted({p[c] for p in points})
        lo, hi = values[0], values[-1]
        if values != list(range(lo, hi + 1)):
            raise WindowTooSmall(f"第 {c + 1} 个坐标的样本不连续")
        window.append((lo, hi))
    expected = int(np.prod([hi - lo + 1 for lo, hi in window]))
    if len(points) != expected:
        raise WindowTooSmall("样本窗口不是矩形")
    return tuple(window)


def _forward_differences(values):
    """
    各坐标方向的前向差分表

    Args:
        values: (d+1)^r 的 numpy object 数组

    Returns:
        numpy object 数组，下标 j̄ 处为 Δ^j̄ f(角点)
    """
    table = values
    for axis in range(table.ndim):
        layers = [
            np.take(np.diff(table, n=j, axis=axis), 0, axis=axis)
            for j in range(table.shape[axis])
        ]
        table = np.stack(layers, axis=axis)
    return table


def _shifted_binomial(variable, shift, j):
    """C(x - shift, j) 作为 sympy 表达式"""
    expr = Integer(1)
    for k in range(j):
        expr *= variable - shift - k
    return expr / factorial(j)


def fit_polynomial(samples, degree=None, margin=None):
    """
    在样本窗口上拟合多项式并判定稳定性

    Args:
        samples: {坐标元组: 整数值}，覆盖矩形窗口
        degree: 每个坐标的次数上界 d；缺省取 min(点数) - 1 - margin
        margin: 窗口须比次数多出的点数，缺省读取配置

    Returns:
        FitResult
    """
    margin = GROWTH_CONFIG['margin'] if margin is None else margin
    window = sample_window(samples)
    r = len(window)
    smallest = min(hi - lo + 1 for lo, hi in window)
    if degree is None:
        degree = smallest - 1 - margin
        if degree < 0:
            raise WindowTooSmall(f"窗口每个坐标至少需要 {margin + 1} 个点")
    elif smallest < degree + 1 + margin:
        raise WindowTooSmall(f"次数 {degree} 需要每个坐标至少 {degree + 1 + margin} 个点")

    corner = tuple(hi - degree for _, hi in window)
    shape = (degree + 1,) * r
    values = np.empty(shape, dtype=object)
    for index in np.ndindex(shape):
        point = tuple(a + k for a, k in zip(corner, index))
        values[index] = int(samples[point])
    table = _forward_differences(values)

    variables = MultiPoly.variables(r)
    expr = Integer(0)
    for index in np.ndindex(shape):
        coefficient = table[index]
        if not coefficient:
            continue
        term = Rational(int(coefficient))
        for variable, shift, j in zip(variables, corner, index):
            term *= _shifted_binomial(variable, shift, j)
        expr += term
    polynomial = MultiPoly(Poly(expr, *variables, domain=QQ))

    stability_window = tuple((max(lo, hi - degree - margin), hi) for lo, hi in window)
    mismatches = []
    for point, value in sorted(samples.items()):
        inside = all(lo <= x <= hi for x, (lo, hi) in zip(point, stability_window))
        if inside and polynomial(*point) != value:
            mismatches.append(point)
    logger.debug("拟合 r=%d, d=%d, 角点 %s, 不符点 %d 个", r, degree, corner, len(mismatches))
    return FitResult(
        polynomial=polynomial,
        degree_bound=degree,
        stable=not mismatches,
        degrees=polynomial.degrees(),
        total_degree=polynomial.total_degree,
        window=window,
        fit_corner=corner,
        stability_window=stability_window,
        mismatches=tuple(mismatches),
    )


def residuals(result, samples):
    """每个样本点的 (值, 拟合值, 残差)"""
    rows = []
    for point, value in sorted(samples.items()):
        fitted = result.polynomial(*point)
        rows.append((point, value, fitted, value - fitted))
    return rows
