"""
增长分析

在细分/发芽网格上求值不变量，拟合多项式并核对次数上界；
与闭式公式逐点对照；Hom 集大小的有界增长与锥上 H_1 对 n 的无关性检查。
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from algebra.fitting import fit_polynomial, residuals
from analysis.invariants import InvariantSpec, grid_tree
from analysis.oracles import b1_cone_tree, bounded_growth_bound, closed_form_oracle, oracle_parameters
from config import GROWTH_CONFIG
from core.constructions import enumerate_trees, hom_count
from utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


def expand_window(window, r):
    """
    规范化窗口：一段区间广播到 r 个坐标

    Args:
        window: [(lo, hi), ...]
        r: 坐标个数

    Returns:
        tuple: ((lo, hi), ...)
    """
    window = [tuple(int(x) for x in part) for part in window]
    if len(window) == 1 and r > 1:
        window = window * r
    if len(window) != r:
        raise ValidationError(f"窗口有 {len(window)} 段，网格为 {r} 维")
    return tuple(window)


def grid_points(window):
    """窗口中全部网格点，按字典序"""
    shape = tuple(hi - lo + 1 for lo, hi in window)
    offsets = tuple(lo for lo, _ in window)
    return [tuple(int(a + k) for a, k in zip(offsets, index)) for index in np.ndindex(shape)]


def _evaluate_point(task):
    spec, mode, items, point = task
    return spec.evaluate(grid_tree(spec.base, mode, items, point))


def invariant_grid(spec, mode, items, window, workers=None):
    """
    在网格 T(ē, m̄) / T(v̄, m̄) 上逐点求值

    Args:
        spec: InvariantSpec（base 为基树）
        mode: 'subdivide' 或 'sprout'
        items: 细分的边或发芽的顶点
        window: [(lo, hi), ...]，单段时广播
        workers: 进程数，缺省读取配置

    Returns:
        dict: {m̄: 值}，按字典序插入
    """
    if spec.base is None:
        raise ValidationError("网格求值需要基树")
    window = expand_window(window, len(items))
    points = grid_points(window)
    workers = GROWTH_CONFIG['workers'] if workers is None else workers
    tasks = [(spec, mode, list(items), point) for point in points]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            values = list(executor.map(_evaluate_point, tasks))
    else:
        values = [_evaluate_point(task) for task in tasks]
    logger.debug("网格 %s/%s: %d 个点", spec.label(), mode, len(points))
    return dict(zip(points, (int(v) for v in values)))


@dataclass
class GrowthReport:
    """网格样本、拟合多项式与次数判定"""
    mode: str
    items: list
    window: tuple
    samples: dict
    fit: object
    claimed_degree: int
    invariant: str = None
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.fit.stable and self.fit.total_degree <= self.claimed_degree

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    @property
    def stabilization(self):
        if self.fit.stable:
            return f"stable on window, total degree {self.fit.total_degree}"
        return "not stable on window"

    def rows(self):
        """每个网格点的 (m̄, 值, 拟合值, 残差)"""
        return residuals(self.fit, self.samples)

    def to_dict(self):
        return {
            'invariant': self.invariant,
            'mode': self.mode,
            'items': [list(x) if isinstance(x, tuple) else x for x in self.items],
            'window': [list(part) for part in self.window],
            'claimed_degree': self.claimed_degree,
            'polynomial': str(self.fit.polynomial),
            'total_degree': self.fit.total_degree,
            'stabilization': self.stabilization,
            'verdict': self.verdict,
        }


def growth_report(samples, claimed_degree, mode=None, items=None, margin=None, invariant=None):
    """
    在样本窗口顶部拟合并判定次数上界

    Args:
        samples: {m̄: 值}
        claimed_degree: 声称的总次数上界
        mode, items: 仅作记录
        margin: 稳定性验证的余量，缺省读取配置
        invariant: 不变量标签

    Returns:
        GrowthReport: 拟合稳定且总次数不超过上界时通过
    """
    fit = fit_polynomial(samples, degree=claimed_degree, margin=margin)
    report = GrowthReport(
        mode=mode,
        items=list(items or []),
        window=fit.window,
        samples=dict(samples),
        fit=fit,
        claimed_degree=claimed_degree,
        invariant=invariant,
    )
    logger.info("增长报告 %s: %s, %s", invariant or '-', report.verdict, report.stabilization)
    return report


def cross_check(spec, oracle, mode, items, window, fixed=None, coordinates=None, workers=None):
    """
    网格上的计算值与闭式公式逐点对照

    Args:
        spec: InvariantSpec
        oracle: 公式名称
        mode, items, window: 同 invariant_grid
        fixed: 公式的固定参数
        coordinates: 网格坐标对应的公式参数名，缺省为 m 或 m1..mr

    Returns:
        dict: rows, passed, failures
    """
    parameters = oracle_parameters(oracle)
    samples = invariant_grid(spec, mode, items, window, workers)
    if coordinates is None:
        coordinates = ('m',) if len(items) == 1 else tuple(f"m{k + 1}" for k in range(len(items)))
    rows = []
    failures = []
    for point, computed in samples.items():
        params = dict(fixed or {})
        params.update(zip(coordinates, point))
        if 'tree' in parameters:
            params['tree'] = grid_tree(spec.base, mode, items, point)
        expected = closed_form_oracle(oracle, params)
        row = {'point': list(point), 'computed': computed, 'oracle': expected,
               'equal': computed == expected}
        rows.append(row)
        if not row['equal']:
            failures.append(row)
    if failures:
        logger.warning("交叉验证 %s vs %s: %d 处不符", spec.label(), oracle, len(failures))
    return {
        'invariant': spec.label(),
        'oracle': oracle,
        'rows': rows,
        'passed': not failures,
        'failures': failures,
    }


def bounded_growth_sweep(target, max_edges):
    """
    对全部 |T| <= max_edges 的树（同构类各一）检查 |Hom(T, R)| <= |Aut R| · C(|T|, |R|)

    Returns:
        dict: rows, violations
    """
    rows = []
    violations = []
    for n_edges in range(max_edges + 1):
        for tree in enumerate_trees(n_edges):
            count = hom_count(tree, target)
            bound = bounded_growth_bound(target, n_edges)
            row = {'edges': n_edges, 'count': count, 'bound': bound}
            rows.append(row)
            if count > bound:
                violations.append(row)
    return {'rows': rows, 'violations': violations}


def biconnected_stability(tree, n_range, i=1):
    """
    cone(T) 上 H_1(UConf_n) 对 n 的无关性

    Args:
        tree: 树
        n_range: 粒子数的可迭代范围
        i: 同调次数

    Returns:
        dict: values {n: Betti 数}, stable, closed_form
    """
    values = {}
    for n in n_range:
        spec = InvariantSpec('betti_cone', {'i': i, 'n': n, 'coeff': 'q'})
        values[n] = spec.evaluate(tree)
    return {
        'values': values,
        'stable': len(set(values.values())) <= 1,
        'closed_form': b1_cone_tree(tree) if i == 1 else None,
    }
