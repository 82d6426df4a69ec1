"""
子命令实现

每个处理函数接收解析后的参数，返回 (JSON 数据, CSV 表格或 None)。
"""

import logging

from analysis.growth import cross_check, growth_report, invariant_grid
from analysis.invariants import InvariantSpec
from analysis.oracles import bounded_growth_bound
from core.constructions import hom_count
from core.graph import Tree
from matroid.characteristic import characteristic_polynomial
from matroid.cone_flats import e1_dimensions, flat_triples, triple_to_flat
from matroid.flats import flats
from matroid.kazhdan_lusztig import ih_dimension, kl_polynomial
from topology.swiatkowski import euler_characteristic, homology
from utils.exceptions import NotATree, ValidationError
from utils.graph_io import load_graph, load_tree
from utils.helpers import sort_ids

logger = logging.getLogger(__name__)


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            flag = '--' + name.replace('_', '-')
            raise ValidationError(f"缺少参数 {flag}")


def load_input_graph(args):
    """--graph 或 --tree 给出的图"""
    if args.graph is not None:
        graph, _ = load_graph(args.graph)
        return graph
    if args.tree is not None:
        tree, _ = load_tree(args.tree)
        return tree
    raise ValidationError("需要 --graph 或 --tree")


def load_input_tree(args):
    """--tree（或是树的 --graph）给出的树，--root 覆盖文件中的根"""
    if args.tree is not None:
        tree, root = load_tree(args.tree)
    elif args.graph is not None:
        graph, root = load_graph(args.graph)
        if not graph.is_tree():
            raise NotATree(f"--graph {args.graph} 不是树")
        tree = Tree.from_graph(graph)
    else:
        raise ValidationError("需要 --tree")
    if getattr(args, 'root', None) is not None:
        root = args.root
    return tree, root


def homology_command(args):
    _require(args, 'n', 'i')
    graph = load_input_graph(args)
    if args.coeff == 'q':
        data = {'betti': homology(graph, args.i, args.n, 'q', args.max_generators)}
    else:
        data = homology(graph, args.i, args.n, 'z', args.max_generators).to_dict()
    return data, None


def chi_command(args):
    """给出 --n 时为 χ(UConf_n(G))，否则为图拟阵的特征多项式"""
    graph = load_input_graph(args)
    if args.n is not None:
        return {'n': args.n, 'euler': euler_characteristic(graph, args.n, args.max_generators)}, None
    chi = characteristic_polynomial(graph)
    return {'characteristic_polynomial': chi.to_list()}, None


def kl_command(args):
    graph = load_input_graph(args)
    return {'kl': kl_polynomial(graph, args.max_vertices).to_list()}, None


def ihdim_command(args):
    _require(args, 'i')
    graph = load_input_graph(args)
    return {'i': args.i, 'ih_dimension': ih_dimension(graph, args.i, args.max_vertices)}, None


def flats_command(args):
    graph = load_input_graph(args)
    lattice = flats(graph, args.max_vertices)
    if args.summary:
        summary = lattice.summary()
        rows = [{'corank': c, 'count': n} for c, n in summary.items()]
        return {'count': len(lattice), 'by_corank': {str(c): n for c, n in summary.items()}}, rows
    rows = [
        {
            'rank': flat.rank,
            'corank': flat.corank,
            'blocks': [sort_ids(b) for b in flat.nontrivial_blocks()],
            'edges': sort_ids(flat.edges),
        }
        for flat in lattice
    ]
    table = [dict(r, blocks=str(r['blocks']), edges=' '.join(r['edges'])) for r in rows]
    return {'count': len(lattice), 'flats': rows}, table


def triples_command(args):
    tree, _ = load_input_tree(args)
    rows = []
    for triple in flat_triples(tree):
        flat = triple_to_flat(tree, triple)
        row = triple.describe()
        row.update(corank=flat.corank, flat=sort_ids(flat.edges))
        rows.append(row)
    table = [
        {'R_edges': r['R_edges'], 'W': ' '.join(r['W']), 'corank': r['corank'],
         'flat': ' '.join(r['flat'])}
        for r in rows
    ]
    return {'count': len(rows), 'triples': rows}, table


def e1_command(args):
    _require(args, 'i')
    tree, _ = load_input_tree(args)
    dims = e1_dimensions(tree, args.i, args.max_vertices)
    rows = [{'p': p, 'q': q, 'dim': d} for (p, q), d in sorted(dims.items())]
    return {'i': args.i, 'e1': rows}, rows


def _invariant_spec(args, tree):
    kind = args.invariant
    params = {}
    for name in ('i', 'n'):
        if getattr(args, name) is not None:
            params[name] = getattr(args, name)
    if kind in ('betti', 'betti_cone'):
        params['coeff'] = args.coeff
    if kind == 'hom_count':
        _require(args, 'target')
        params['target'], _ = load_tree(args.target)
    return InvariantSpec(kind, params, base=tree, root=args.root)


def _grid_items(args):
    """网格方向：subdivide 取 --edges，sprout 取 --vertices，不能为空"""
    items = args.edges if args.mode == 'subdivide' else args.vertices
    if not items:
        flag = '--edges' if args.mode == 'subdivide' else '--vertices'
        raise ValidationError(f"{args.mode} 模式需要 {flag}")
    return items


def growth_command(args, reporter):
    _require(args, 'mode', 'window', 'claimed_degree')
    tree, _ = load_input_tree(args)
    items = _grid_items(args)
    spec = _invariant_spec(args, tree)
    samples = invariant_grid(spec, args.mode, items, args.window)
    report = growth_report(samples, args.claimed_degree, args.mode, items, invariant=spec.label())
    return reporter.generate_growth_report(report), reporter.growth_frame(report)


def crosscheck_command(args, reporter):
    _require(args, 'mode', 'window', 'oracle')
    tree, _ = load_input_tree(args)
    items = _grid_items(args)
    spec = _invariant_spec(args, tree)
    fixed = {name: getattr(args, name) for name in ('i', 'n') if getattr(args, name) is not None}
    result = cross_check(spec, args.oracle, args.mode, items, args.window, fixed=fixed)
    return result, reporter.cross_check_frame(result)


def homcount_command(args):
    _require(args, 'target')
    tree, _ = load_input_tree(args)
    target, _ = load_tree(args.target)
    count = hom_count(tree, target)
    bound = bounded_growth_bound(target, tree.size)
    return {'count': count, 'bound': bound}, None
