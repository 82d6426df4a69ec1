from .main import build_parser, main, run, setup_logging
from .reproduce import CRITERIA, run_reproduce

__all__ = [
    'build_parser',
    'main',
    'run',
    'setup_logging',
    'CRITERIA',
    'run_reproduce',
]
