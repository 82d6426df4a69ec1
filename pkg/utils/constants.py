"""
常量定义
"""

# 图 JSON 格式
GRAPH_FORMAT = 'treecat-graph'
GRAPH_FORMAT_VERSION = 1
GRAPH_FIELDS = ('format', 'version', 'vertices', 'edges', 'root')
GRAPH_REQUIRED_FIELDS = ('format', 'version', 'vertices', 'edges')
EDGE_FIELDS = ('id', 'ends')

# 系数环
COEFFICIENTS = ['z', 'q']

# 增长模式
GROWTH_MODES = ['subdivide', 'sprout']

# 不变量种类及其参数
INVARIANT_KINDS = {
    'betti': ('i', 'n', 'coeff'),
    'betti_cone': ('i', 'n', 'coeff'),
    'ih_cone': ('i',),
    'euler': ('n',),
    'euler_cone': ('n',),
    'subtree_count': (),
    'hom_count': ('target',),
}

# 闭式公式名称
ORACLE_NAMES = [
    'fan_ih',
    'thag_ih2',
    'star_b1',
    'cone_star_b1',
    'b1_cone_tree',
    'b1_cone_recursion',
    'ih2_via_subtrees',
    'gal_chi_star',
    'gal_chi_cone_star',
    'gal_chi_cone_star_expanded',
    'ih2_subdivided_star',
    'bounded_growth_bound',
]

# CLI 子命令
SUBCOMMANDS = [
    'homology', 'chi', 'kl', 'ihdim', 'flats', 'triples',
    'e1', 'growth', 'crosscheck', 'homcount', 'reproduce',
]

# 输出格式
OUTPUT_FORMATS = ['json', 'csv']

# 退出码
EXIT_CODES = {
    'success': 0,
    'internal': 1,
    'validation': 2,
    'guard': 3,
}

# 构造中新生成的标识符的分隔符
CONE_APEX = 'p'
CONE_EDGE_PREFIX = 'c'
SUBDIVISION_SEPARATOR = '/'
SPROUT_VERTEX_SEPARATOR = '+'
SPROUT_EDGE_SEPARATOR = '~'
