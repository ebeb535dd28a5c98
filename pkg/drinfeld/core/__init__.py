"""
DRINFELD Core Components

Shared infrastructure for every layer:
- Configuration management
- Logging
- Exception hierarchy
- Data models and report schemas
- Common utilities
"""

from .config import Config
from .logger import Logger, set_log_level
from .exceptions import (
    DrinfeldError,
    FieldError,
    ArithmeticDomainError,
    NotIrreducibleError,
    GradingError,
    InsufficientPrecisionError,
    ResourceLimitError,
    LevelError,
    UnknownActionError,
    SuiteError,
    OracleDomainError,
    SpanError,
)
from .models import RunConfig, OutputFormat, Verdict, MembershipVerdict, CheckResult, SuiteReport

__all__ = [
    'Config',
    'Logger',
    'set_log_level',
    'DrinfeldError',
    'FieldError',
    'ArithmeticDomainError',
    'NotIrreducibleError',
    'GradingError',
    'InsufficientPrecisionError',
    'ResourceLimitError',
    'LevelError',
    'UnknownActionError',
    'SuiteError',
    'OracleDomainError',
    'SpanError',
    'RunConfig',
    'OutputFormat',
    'Verdict',
    'MembershipVerdict',
    'CheckResult',
    'SuiteReport',
]
