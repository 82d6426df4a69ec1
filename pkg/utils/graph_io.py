"""
图的 JSON 读写

格式：{"format": "treecat-graph", "version": 1, "vertices": [...],
       "edges": [{"id": ..., "ends": [a, b]}, ...], "root": ...(可选)}
未知字段直接拒绝。
"""

import json
import logging

from core.graph import Graph, RootedTree, Tree
from utils.constants import (
    EDGE_FIELDS, GRAPH_FIELDS, GRAPH_FORMAT, GRAPH_FORMAT_VERSION, GRAPH_REQUIRED_FIELDS,
)
from utils.exceptions import NotATree, SchemaError

logger = logging.getLogger(__name__)


def graph_from_dict(data):
    """
    由字典构造图

    Args:
        data: 符合 treecat-graph 格式的字典

    Returns:
        tuple: (Graph, root 或 None)
    """
    if not isinstance(data, dict):
        raise SchemaError("图文件顶层必须是对象")
    unknown = sorted(set(data) - set(GRAPH_FIELDS))
    if unknown:
        raise SchemaError(f"未知字段: {', '.join(unknown)}")
    missing = [f for f in GRAPH_REQUIRED_FIELDS if f not in data]
    if missing:
        raise SchemaError(f"缺少字段: {', '.join(missing)}")
    if data['format'] != GRAPH_FORMAT:
        raise SchemaError(f"format 必须是 {GRAPH_FORMAT!r}")
    if data['version'] != GRAPH_FORMAT_VERSION:
        raise SchemaError(f"不支持的版本: {data['version']!r}")
    if not isinstance(data['vertices'], list) or not isinstance(data['edges'], list):
        raise SchemaError("vertices 与 edges 必须是数组")

    edges = []
    for record in data['edges']:
        if not isinstance(record, dict) or set(record) != set(EDGE_FIELDS):
            raise SchemaError(f"边记录必须恰有 id 与 ends: {record!r}")
        ends = record['ends']
        if not isinstance(ends, list) or len(ends) != 2:
            raise SchemaError(f"边 {record['id']!r} 的 ends 必须是两个顶点")
        edges.append((record['id'], ends[0], ends[1]))
    graph = Graph(data['vertices'], edges)

    root = data.get('root')
    if root is not None:
        root = str(root)
        if not graph.has_vertex(root):
            raise SchemaError(f"根 {root!r} 不是顶点")
    return graph, root


def graph_to_dict(graph, root=None):
    """图转为字典（字段顺序固定）"""
    if isinstance(graph, RootedTree):
        graph, root = graph.tree, graph.root
    data = {
        'format': GRAPH_FORMAT,
        'version': GRAPH_FORMAT_VERSION,
        'vertices': list(graph.vertices),
        'edges': [{'id': e.id, 'ends': list(e.ends)} for e in graph.edges],
    }
    if root is not None:
        data['root'] = root
    return data


def load_graph(path):
    """
    读取图文件

    Args:
        path: JSON 文件路径

    Returns:
        tuple: (Graph, root 或 None)
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: JSON 解析失败: {e}") from e
    graph, root = graph_from_dict(data)
    logger.debug("读取 %s: %r", path, graph)
    return graph, root


def load_tree(path):
    """读取树文件，返回 (Tree, root 或 None)"""
    graph, root = load_graph(path)
    if not graph.is_tree():
        raise NotATree(f"{path} 中的图不是树")
    return Tree.from_graph(graph), root


def dump_graph(graph, path=None, root=None):
    """写出图；path 为 None 时返回 JSON 文本"""
    text = json.dumps(graph_to_dict(graph, root), ensure_ascii=False)
    if path is None:
        return text
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text + '\n')
    return path
