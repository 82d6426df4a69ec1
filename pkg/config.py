"""
treecat 配置文件
"""

import os
from dotenv import load_dotenv

# 获取项目根目录
BASE_DIR = os.path.dirname(os.path.abspath(__file__))

# 加载环境变量（项目根目录下的 .env）
load_dotenv(os.path.join(BASE_DIR, '.env'))

# 规模保护配置
GUARD_CONFIG = {
    'max_canonical_vertices': int(os.getenv('TREECAT_MAX_VERTICES', '10')),  # 一般图暴力规范形的顶点上限
    'max_flat_vertices': int(os.getenv('TREECAT_MAX_FLAT_VERTICES', '12')),  # 平坦集枚举的顶点上限
    'max_generators': int(os.getenv('TREECAT_MAX_GENERATORS', '5000000')),  # Świątkowski 复形生成元总数上限
    'max_triple_edges': int(os.getenv('TREECAT_MAX_TRIPLE_EDGES', '10')),  # (R,W,U) 三元组枚举的树边数上限
}

# 增长分析配置
GROWTH_CONFIG = {
    'margin': int(os.getenv('TREECAT_WINDOW_MARGIN', '2')),  # 窗口相对次数上界的余量
    'workers': int(os.getenv('TREECAT_WORKERS', '1')),  # 网格点并行进程数，1 表示顺序计算
}

# 日志配置
LOGGING_CONFIG = {
    'level': os.getenv('TREECAT_LOG_LEVEL', 'WARNING'),
    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
}

# 输出配置
OUTPUT_CONFIG = {
    'default_format': os.getenv('TREECAT_OUTPUT_FORMAT', 'json'),
    'csv_encoding': 'utf-8',
}

# reproduce 验收套件的默认规模（桌面级）
REPRODUCE_CONFIG = {
    'fan_m_range': (2, 5),
    'fan_i_range': (1, 2),
    'thag_max_m': 4,
    'corank_max_edges': 5,
    'boolean_max_edges': 6,
    'star_max_m': 5,
    'star_max_n': 5,
    'cone_max_edges': 4,
    'cone_n_range': (2, 4),
    'euler_max_m': 3,
    'euler_max_n': 4,
    'triple_max_edges': 5,
    'leaf_lemma_max_edges': 6,
    'leaf_corollary_max_edges': 5,
    'growth_betti_max_n': 3,
    'growth_betti_max_i': 1,
    'growth_ih_max_i': 2,
    'thag_window': (0, 5),
    'thag_claimed_degree': 2,
    'structural_seed': 20240601,
    'structural_samples': 20,
}


def resolve_guard(name, override=None):
    """
    读取规模保护参数

    Args:
        name: GUARD_CONFIG 中的键名
        override: 显式覆盖值（CLI 参数或调用方传入），None 表示使用默认

    Returns:
        int: 生效的上限
    """
    if override is not None:
        return int(override)
    return GUARD_CONFIG[name]
