"""
可求值的不变量

InvariantSpec 把一种不变量及其参数包装成树上的整数函数，供网格求值与交叉验证使用。
"""

import logging
from dataclasses import dataclass, field

from core.constructions import cone, hom_count, sprout, subdivide, subtrees
from core.graph import Tree
from matroid.kazhdan_lusztig import ih_dimension
from topology.swiatkowski import euler_characteristic, homology
from utils.constants import COEFFICIENTS, GROWTH_MODES, INVARIANT_KINDS
from utils.exceptions import OutOfBounds, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantSpec:
    """不变量种类、参数与基树"""
    kind: str
    params: dict = field(default_factory=dict)
    base: Tree = None
    root: str = None

    def __post_init__(self):
        if self.kind not in INVARIANT_KINDS:
            raise ValidationError(f"未知的不变量种类: {self.kind!r}")
        params = dict(self.params)
        if self.kind in ('betti', 'betti_cone'):
            params.setdefault('coeff', 'q')
            if params['coeff'] not in COEFFICIENTS:
                raise ValidationError(f"系数必须是 z 或 q: {params['coeff']!r}")
        missing = [p for p in INVARIANT_KINDS[self.kind] if p not in params]
        if missing:
            raise ValidationError(f"不变量 {self.kind} 缺少参数: {', '.join(missing)}")
        for name in ('i', 'n'):
            if name in params and int(params[name]) < 0:
                raise OutOfBounds(f"参数 {name} 必须非负")
        object.__setattr__(self, 'params', params)
        if self.root is not None and self.base is not None and not self.base.has_vertex(self.root):
            raise ValidationError(f"根 {self.root!r} 不是基树的顶点")

    def __hash__(self):
        return hash((self.kind, tuple(sorted((k, str(v)) for k, v in self.params.items()))))

    def label(self):
        shown = ", ".join(
            f"{k}={v}" for k, v in sorted(self.params.items()) if k != 'target'
        )
        return f"{self.kind}({shown})" if shown else self.kind

    def evaluate(self, tree):
        """
        在一棵树上求值

        Args:
            tree: 树

        Returns:
            int
        """
        kind, params = self.kind, self.params
        if kind == 'betti':
            return _betti(tree, params)
        if kind == 'betti_cone':
            return _betti(cone(tree)[0], params)
        if kind == 'ih_cone':
            return ih_dimension(cone(tree)[0], int(params['i']))
        if kind == 'euler':
            return euler_characteristic(tree, int(params['n']))
        if kind == 'euler_cone':
            return euler_characteristic(cone(tree)[0], int(params['n']))
        if kind == 'subtree_count':
            return subtrees(tree)
        return hom_count(tree, params['target'])


def _betti(graph, params):
    i, n = int(params['i']), int(params['n'])
    if params['coeff'] == 'q':
        return homology(graph, i, n, 'q')
    group = homology(graph, i, n, 'z')
    if group.torsion:
        logger.warning("H_%d(UConf_%d) 含挠: %s", i, n, group.describe())
    return group.free_rank


def grid_tree(base, mode, items, point):
    """
    网格点上的树 T(ē, m̄) 或 T(v̄, m̄)

    Args:
        base: 基树
        mode: 'subdivide' 或 'sprout'
        items: 边（细分）或顶点（发芽）列表
        point: m̄

    Returns:
        Tree
    """
    if mode not in GROWTH_MODES:
        raise ValidationError(f"未知的增长模式: {mode!r}")
    if len(items) != len(point):
        raise ValidationError(f"{len(items)} 个生长位置与 {len(point)} 维网格点不符")
    if mode == 'subdivide':
        return subdivide(base, items, point)[0]
    return sprout(base, items, point)[0]
