"""
treecat 命令行入口

用法示例:
    treecat kl --graph fan3.json
    treecat homology --graph star3.json --n 2 --i 1
    treecat growth --tree i1.json --mode subdivide --edges e0 --window 0..7 \
        --invariant betti --n 3 --i 1 --claimed-degree 4
    treecat reproduce --format csv
"""

import argparse
import logging
import sys

from cli import commands
from cli.reproduce import run_reproduce
from config import LOGGING_CONFIG
from utils.constants import (
    COEFFICIENTS, EXIT_CODES, GROWTH_MODES, INVARIANT_KINDS, ORACLE_NAMES, OUTPUT_FORMATS,
)
from utils.exceptions import ConsistencyError, GuardError, TreecatError, ValidationError
from utils.helpers import parse_list, parse_window
from visualization.reports import ReportGenerator

logger = logging.getLogger(__name__)


def setup_logging(verbose=False):
    """按 LOGGING_CONFIG 配置根日志（只配置一次）"""
    level = logging.DEBUG if verbose else getattr(logging, LOGGING_CONFIG['level'].upper(), logging.WARNING)
    root = logging.getLogger()
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOGGING_CONFIG['format']))
        root.addHandler(handler)
    root.setLevel(level)


def _window(text):
    try:
        return parse_window(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _items(text):
    items = parse_list(text)
    if not items:
        raise argparse.ArgumentTypeError("列表不能为空")
    return items


def _non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"需要整数: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"需要非负整数: {text!r}")
    return value


class _Parser(argparse.ArgumentParser):
    """用法错误抛出 ValidationError，而不是直接退出"""

    def error(self, message):
        raise ValidationError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=None, help='输出格式（缺省 json）')
    common.add_argument('--output', default=None, help='结果写入文件而不是 stdout')
    common.add_argument('--max-vertices', type=_non_negative, default=None, help='平坦集枚举的顶点上限')
    common.add_argument('--max-generators', type=_non_negative, default=None, help='复形生成元上限')
    common.add_argument('--verbose', action='store_true', help='DEBUG 日志')

    graph_input = _Parser(add_help=False)
    graph_input.add_argument('--graph', default=None, help='图 JSON 文件')
    graph_input.add_argument('--tree', default=None, help='树 JSON 文件')
    graph_input.add_argument('--root', default=None, help='根顶点（覆盖文件中的 root）')

    parser = _Parser(prog='treecat', description='树与锥的函子性不变量')
    subparsers = parser.add_subparsers(dest='command', parser_class=_Parser)
    subparsers.required = True
    parents = [common, graph_input]

    p = subparsers.add_parser('homology', parents=parents, help='H_i(UConf_n(G))')
    p.add_argument('--n', type=_non_negative)
    p.add_argument('--i', type=_non_negative)
    p.add_argument('--coeff', choices=COEFFICIENTS, default='z')

    p = subparsers.add_parser('chi', parents=parents, help='Euler 示性数或特征多项式')
    p.add_argument('--n', type=_non_negative)

    subparsers.add_parser('kl', parents=parents, help='Kazhdan-Lusztig 多项式')

    p = subparsers.add_parser('ihdim', parents=parents, help='dim IH_{2i}')
    p.add_argument('--i', type=_non_negative)

    p = subparsers.add_parser('flats', parents=parents, help='平坦集格')
    p.add_argument('--summary', action='store_true', help='只输出各余秩的个数')

    subparsers.add_parser('triples', parents=parents, help='cone(T) 平坦集的 (R,W,U) 参数化')

    p = subparsers.add_parser('e1', parents=parents, help='E^1 页各项维数')
    p.add_argument('--i', type=_non_negative)

    for name in ('growth', 'crosscheck'):
        p = subparsers.add_parser(name, parents=parents,
                                  help='增长报告' if name == 'growth' else '与闭式公式对照')
        p.add_argument('--mode', choices=GROWTH_MODES)
        p.add_argument('--edges', type=_items, default=None, help='细分的边，如 e0,e1 或 a>b')
        p.add_argument('--vertices', type=_items, default=None, help='发芽的顶点')
        p.add_argument('--window', type=_window, help='网格窗口，如 0..6 或 0..6,1..3')
        p.add_argument('--invariant', choices=list(INVARIANT_KINDS), default='betti')
        p.add_argument('--n', type=_non_negative)
        p.add_argument('--i', type=_non_negative)
        p.add_argument('--coeff', choices=COEFFICIENTS, default='q')
        p.add_argument('--target', default=None, help='hom_count 的目标树')
        if name == 'growth':
            p.add_argument('--claimed-degree', type=_non_negative)
        else:
            p.add_argument('--oracle', choices=ORACLE_NAMES)

    p = subparsers.add_parser('homcount', parents=parents, help='|Hom(T, R)| 与其上界')
    p.add_argument('--target', default=None, help='目标树 R')

    p = subparsers.add_parser('reproduce', parents=[common], help='运行验收套件')
    p.add_argument('--criteria', type=_items, default=None, help='只运行指定编号，如 1,4,8')
    return parser


def dispatch(args, reporter):
    """
    执行子命令

    Returns:
        tuple: (输出文本, 退出码)
    """
    if args.command == 'reproduce':
        results = run_reproduce(args.criteria)
        table = reporter.reproduce_frame(results)
        data = {'criteria': results, 'passed': all(r['passed'] for r in results)}
        code = EXIT_CODES['success'] if data['passed'] else EXIT_CODES['internal']
        return reporter.render(data, table), code
    handler = getattr(commands, f"{args.command}_command")
    if args.command in ('growth', 'crosscheck'):
        data, table = handler(args, reporter)
    else:
        data, table = handler(args)
    return reporter.render(data, table), EXIT_CODES['success']


def run(argv=None):
    """
    解析参数并执行

    Args:
        argv: 参数列表，缺省为 sys.argv[1:]

    Returns:
        int: 退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValidationError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_CODES['validation']
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    setup_logging(args.verbose)
    try:
        reporter = ReportGenerator(args.format)
        text, code = dispatch(args, reporter)
        if args.output:
            reporter.write(text, args.output)
        else:
            print(text)
    except ValidationError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_CODES['validation']
    except GuardError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_CODES['guard']
    except ConsistencyError as e:
        logger.error("一致性校验失败: %s", e)
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_CODES['internal']
    except OSError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_CODES['validation']
    except TreecatError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_CODES['internal']
    return code


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
