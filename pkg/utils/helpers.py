"""
辅助工具函数
"""

import math
import re

_CHUNK = re.compile(r'(\d+)')


def natural_key(identifier):
    """
    标识符的自然排序键（"v2" 排在 "v10" 之前）

    Args:
        identifier: 顶点或边的标识符

    Returns:
        tuple: 可比较的排序键
    """
    text = str(identifier)
    parts = _CHUNK.split(text)
    key = []
    for part in parts:
        if not part:
            continue
        if part.isdigit():
            key.append((0, int(part), part))
        else:
            key.append((1, 0, part))
    return tuple(key)


def sort_ids(identifiers):
    """按自然顺序排序标识符"""
    return sorted(identifiers, key=natural_key)


def fresh_id(taken, base):
    """
    生成一个不与已有标识符冲突的新标识符

    Args:
        taken: 已占用的标识符集合
        base: 首选名称

    Returns:
        str: base 本身或 base 加撇号
    """
    candidate = base
    while candidate in taken:
        candidate += "'"
    return candidate


def binomial(a, b):
    """
    广义二项式系数，允许上指标为负

    Args:
        a: 上指标（整数）
        b: 下指标（整数）

    Returns:
        int: C(a, b)，b < 0 时为 0
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    # C(-k, b) = (-1)^b C(k+b-1, b)
    return (-1) ** b * math.comb(b - a - 1, b)


def multichoose(n, k):
    """n 个元素中可重复选 k 个的方案数"""
    if k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return math.comb(n + k - 1, k)


def permutation_sign(sequence):
    """
    序列排成升序所需置换的符号

    Args:
        sequence: 互不相同的可比较元素

    Returns:
        int: +1 或 -1
    """
    inversions = 0
    items = list(sequence)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def parse_window(spec):
    """
    解析窗口描述

    Args:
        spec: "0..6" 或 "0..6,1..3"（每个坐标一段）

    Returns:
        list: [(lo, hi), ...]
    """
    ranges = []
    for part in str(spec).split(','):
        part = part.strip()
        if '..' not in part:
            raise ValueError(f"窗口格式应为 lo..hi: {part!r}")
        lo, hi = part.split('..', 1)
        lo, hi = int(lo), int(hi)
        if lo < 0 or hi < lo:
            raise ValueError(f"窗口区间非法: {part!r}")
        ranges.append((lo, hi))
    return ranges


def parse_list(spec):
    """
    解析逗号分隔的标识符列表

    Args:
        spec: "a,b,c"；有向边写作 "tail>head"

    Returns:
        list: 字符串或 (tail, head) 二元组
    """
    items = []
    for part in str(spec).split(','):
        part = part.strip()
        if not part:
            continue
        if '>' in part:
            tail, head = part.split('>', 1)
            items.append((tail.strip(), head.strip()))
        else:
            items.append(part)
    return items
