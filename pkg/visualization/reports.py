"""
报告生成器

把计算结果整理成 pandas 表格或有序字典，再输出为 CSV / JSON 文本。
"""

import json
from fractions import Fraction
from io import StringIO

import pandas as pd

from config import OUTPUT_CONFIG
from utils.constants import OUTPUT_FORMATS
from utils.exceptions import ValidationError


def _plain(value):
    """Fraction / tuple / frozenset 转为 JSON 友好的值"""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


class ReportGenerator:
    """报告生成器"""

    def __init__(self, output_format=None):
        """初始化报告生成器"""
        self.output_format = output_format or OUTPUT_CONFIG['default_format']
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationError(f"--format 只能是 json 或 csv: {self.output_format!r}")

    def growth_frame(self, report):
        """
        增长报告的网格表

        列：m1..mr, value, fitted, residual
        """
        rows = []
        for point, value, fitted, residual in report.rows():
            row = {f"m{k + 1}": x for k, x in enumerate(point)}
            row.update(value=value, fitted=_plain(fitted), residual=_plain(residual))
            rows.append(row)
        return pd.DataFrame(rows)

    def generate_growth_report(self, report):
        """增长报告：摘要加逐点表"""
        summary = report.to_dict()
        summary['grid'] = self.growth_frame(report).to_dict('records')
        return summary

    def cross_check_frame(self, result):
        rows = []
        for row in result['rows']:
            record = {f"m{k + 1}": x for k, x in enumerate(row['point'])}
            record.update(computed=row['computed'], oracle=row['oracle'], equal=row['equal'])
            rows.append(record)
        return pd.DataFrame(rows)

    def reproduce_frame(self, results):
        """验收结果表：criterion, description, status, detail"""
        return pd.DataFrame([
            {
                'criterion': r['criterion'],
                'description': r['description'],
                'status': 'PASS' if r['passed'] else 'FAIL',
                'detail': r['detail'],
            }
            for r in results
        ], columns=['criterion', 'description', 'status', 'detail'])

    def render(self, data, table=None):
        """
        按输出格式生成文本

        Args:
            data: 有序字典（JSON 输出）
            table: 可选 DataFrame 或记录列表（CSV 输出）；缺省由 data 展开

        Returns:
            str
        """
        if self.output_format == 'json':
            return json.dumps(_plain(data), ensure_ascii=False)
        if table is None:
            table = data if isinstance(data, list) else [data]
        if not isinstance(table, pd.DataFrame):
            table = pd.DataFrame([_plain(row) for row in table])
        buffer = StringIO()
        table.to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue().rstrip('\n')

    def write(self, text, filename):
        """写出渲染后的文本"""
        with open(filename, 'w', encoding=OUTPUT_CONFIG['csv_encoding']) as f:
            f.write(text + '\n')
        return filename
