"""
共享夹具
"""

import json

import numpy as np
import pytest

from core.constructions import cone, path_tree, star_tree
from core.graph import Graph
from utils.graph_io import graph_to_dict


@pytest.fixture
def path3():
    return path_tree(3)


@pytest.fixture
def star3():
    return star_tree(3)


@pytest.fixture
def fan3():
    """cone(I_3)"""
    return cone(path_tree(3))[0]


@pytest.fixture
def theta():
    """两个顶点之间三条平行边"""
    return Graph(['a', 'b'], [('x', 'a', 'b'), ('y', 'a', 'b'), ('z', 'a', 'b')])


@pytest.fixture
def k4():
    return Graph(['a', 'b', 'c', 'd'], [
        ('ab', 'a', 'b'), ('ac', 'a', 'c'), ('ad', 'a', 'd'),
        ('bc', 'b', 'c'), ('bd', 'b', 'd'), ('cd', 'c', 'd'),
    ])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def write_graph(tmp_path):
    """把图写成 JSON 文件并返回路径"""
    def _write(graph, name='graph.json', root=None):
        path = tmp_path / name
        path.write_text(json.dumps(graph_to_dict(graph, root)), encoding='utf-8')
        return str(path)
    return _write
