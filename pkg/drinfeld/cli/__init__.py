"""
DRINFELD CLI Components

Command-line surface and the named verification suites:
- subcommands expand, carlitz, goss, hecke, matrix, verify, suites
- SuiteRun checks with pass/fail verdicts, witnesses and certified precision
"""

from .suites import Evidence, SuiteRun, SUITES, SUITE_LABELS, suite_names, run_suite
from .main import build_parser, main, parse_form, render_text

__all__ = [
    'Evidence',
    'SuiteRun',
    'SUITES',
    'SUITE_LABELS',
    'suite_names',
    'run_suite',
    'build_parser',
    'main',
    'parse_form',
    'render_text',
]
