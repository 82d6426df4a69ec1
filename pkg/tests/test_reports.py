"""
测试报告生成器
"""

import json
from fractions import Fraction

import pytest

from analysis.growth import growth_report
from visualization.reports import ReportGenerator
from utils.exceptions import ValidationError


@pytest.fixture
def quadratic_report():
    samples = {(m,): m * m + 1 for m in range(6)}
    return growth_report(samples, 2, 'subdivide', ['e1'], invariant='demo')


def test_unknown_format():
    with pytest.raises(ValidationError):
        ReportGenerator('xml')


def test_json_render_handles_fractions_and_sets():
    text = ReportGenerator('json').render({'x': Fraction(3, 2), 'y': frozenset({'b', 'a'}), 'z': (1, 2)})
    assert json.loads(text) == {'x': '3/2', 'y': ['a', 'b'], 'z': [1, 2]}


def test_csv_render_from_rows():
    text = ReportGenerator('csv').render({'ignored': True}, [{'p': 0, 'q': 1, 'dim': 3}])
    assert text.splitlines() == ['p,q,dim', '0,1,3']


def test_csv_render_falls_back_to_data():
    text = ReportGenerator('csv').render({'count': 5})
    assert text.splitlines() == ['count', '5']


def test_growth_frame(quadratic_report):
    reporter = ReportGenerator('csv')
    frame = reporter.growth_frame(quadratic_report)
    assert list(frame.columns) == ['m1', 'value', 'fitted', 'residual']
    assert (frame['residual'] == 0).all()
    summary = reporter.generate_growth_report(quadratic_report)
    assert summary['verdict'] == 'pass'
    assert len(summary['grid']) == 6


def test_cross_check_frame():
    result = {'rows': [{'point': [1, 2], 'computed': 4, 'oracle': 4, 'equal': True}]}
    frame = ReportGenerator().cross_check_frame(result)
    assert list(frame.columns) == ['m1', 'm2', 'computed', 'oracle', 'equal']


def test_reproduce_frame_is_stable():
    results = [
        {'criterion': 1, 'description': '扇形', 'passed': True, 'detail': 'ok'},
        {'criterion': 2, 'description': '星形', 'passed': False, 'detail': 'm=3'},
    ]
    reporter = ReportGenerator('csv')
    first = reporter.render({}, reporter.reproduce_frame(results))
    second = reporter.render({}, reporter.reproduce_frame(results))
    assert first == second
    assert first.splitlines()[0] == 'criterion,description,status,detail'
    assert ',FAIL,' in first.splitlines()[2]


def test_write(tmp_path):
    path = tmp_path / 'out.json'
    ReportGenerator().write('{"kl": [1]}', str(path))
    assert path.read_text(encoding='utf-8') == '{"kl": [1]}\n'
