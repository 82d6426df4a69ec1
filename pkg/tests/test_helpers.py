"""
测试辅助函数
"""

import pytest

from utils.helpers import (
    binomial, fresh_id, multichoose, natural_key, parse_list, parse_window, permutation_sign,
    sort_ids,
)


def test_natural_order():
    assert sort_ids(['v10', 'v2', 'e1', 'v1']) == ['e1', 'v1', 'v2', 'v10']
    assert natural_key('v2') < natural_key('v10')


def test_fresh_id():
    assert fresh_id({'p'}, 'q') == 'q'
    assert fresh_id({'p', "p'"}, 'p') == "p''"


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(4, -1) == 0
    assert binomial(-2, 3) == -4


def test_multichoose():
    assert multichoose(3, 2) == 6
    assert multichoose(0, 0) == 1
    assert multichoose(0, 2) == 0
    assert multichoose(4, -1) == 0


def test_permutation_sign():
    assert permutation_sign([1, 2, 3]) == 1
    assert permutation_sign([2, 1, 3]) == -1
    assert permutation_sign([3, 1, 2]) == 1


def test_parse_window():
    assert parse_window('0..6') == [(0, 6)]
    assert parse_window('0..6, 1..3') == [(0, 6), (1, 3)]
    for bad in ('6', '3..1', '-1..2'):
        with pytest.raises(ValueError):
            parse_window(bad)


def test_parse_list():
    assert parse_list('e1, e2') == ['e1', 'e2']
    assert parse_list('v0>v1,e3') == [('v0', 'v1'), 'e3']
    assert parse_list(' , ') == []
