"""
DRINFELD Logging System

Centralized logging for the library. Messages go to stderr (stdout is
reserved for CLI reports) and optionally to a log file.
"""

import json
import os
import logging
import sys
from typing import Any, Optional

from .config import Config


class Logger:
    """Centralized logging system for DRINFELD."""

    def __init__(self, name: str = "drinfeld", level: str = "WARNING", config: Optional[Config] = None):
        """Initialize logger.

        Args:
            name: Logger name
            level: Fallback log level when the configuration has none
            config: Optional Config instance to read logging settings from
        """
        self.name = name
        self.config = config or Config()

        config_level = self.config.get('logging.level', level) or level
        self.level = getattr(logging, str(config_level).upper(), logging.WARNING)

        self.logger = self._setup_logger()

    def _setup_logger(self) -> logging.Logger:
        """Set up logger with console and optional file handlers."""
        logger = logging.getLogger(f"drinfeld.{self.name}" if self.name != "drinfeld" else self.name)
        logger.setLevel(self.level)

        # Clear existing handlers
        logger.handlers.clear()
        logger.propagate = False

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self.level)
        console_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        console_handler.setFormatter(console_formatter)
        logger.addHandler(console_handler)

        log_file = self.config.get('logging.file')
        if log_file:
            try:
                file_handler = logging.FileHandler(log_file, mode='a')
                file_handler.setLevel(logging.DEBUG)
                file_handler.setFormatter(logging.Formatter(
                    '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
                ))
                logger.addHandler(file_handler)
            except Exception as e:
                print(f"Warning: Could not set up file log handler: {e}", file=sys.stderr)

        return logger

    @staticmethod
    def _format(message: str, data: dict) -> str:
        if data:
            return f"{message} | Data: {json.dumps(data, default=str, sort_keys=True)}"
        return message

    def info(self, message: str, **kwargs: Any) -> None:
        """Log info message."""
        self.logger.info(self._format(message, kwargs))

    def warning(self, message: str, **kwargs: Any) -> None:
        """Log warning message."""
        self.logger.warning(self._format(message, kwargs))

    def error(self, message: str, **kwargs: Any) -> None:
        """Log error message."""
        self.logger.error(self._format(message, kwargs))

    def debug(self, message: str, **kwargs: Any) -> None:
        """Log debug message."""
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(self._format(message, kwargs))

    def critical(self, message: str, **kwargs: Any) -> None:
        """Log critical message."""
        self.logger.critical(self._format(message, kwargs))

    def log_step_start(self, step: str, **kwargs: Any) -> None:
        """Log the start of a computation step."""
        self.info(f"Starting {step}", step=step, **kwargs)

    def log_step_complete(self, step: str, **kwargs: Any) -> None:
        """Log completion of a computation step."""
        self.info(f"Completed {step}", step=step, **kwargs)


def set_log_level(level: str) -> None:
    """Apply a level to every drinfeld logger already created, and to later ones via the config."""
    value = getattr(logging, str(level).upper(), None)
    if not isinstance(value, int):
        raise ValueError(f"unknown log level {level!r}")
    os.environ["DRINFELD_LOG_LEVEL"] = str(level).upper()
    for name, logger in logging.Logger.manager.loggerDict.items():
        if not isinstance(logger, logging.Logger):
            continue
        if name == "drinfeld" or name.startswith("drinfeld."):
            logger.setLevel(value)
            for handler in logger.handlers:
                if not isinstance(handler, logging.FileHandler):
                    handler.setLevel(value)
