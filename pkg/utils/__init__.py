from .exceptions import TreecatError, ValidationError, GuardError, ConsistencyError
from .helpers import natural_key, sort_ids, fresh_id, binomial, multichoose, parse_window, parse_list
from .constants import GRAPH_FORMAT, GRAPH_FORMAT_VERSION, SUBCOMMANDS, EXIT_CODES

__all__ = [
    'TreecatError',
    'ValidationError',
    'GuardError',
    'ConsistencyError',
    'natural_key',
    'sort_ids',
    'fresh_id',
    'binomial',
    'multichoose',
    'parse_window',
    'parse_list',
    'GRAPH_FORMAT',
    'GRAPH_FORMAT_VERSION',
    'SUBCOMMANDS',
    'EXIT_CODES',
]
