"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Logger - Logging interface and console implementation with structured fields.

Solution data goes to standard output, so every log line goes to the error stream.
"""

import sys
import traceback
from abc import ABC, abstractmethod
from datetime import datetime
from enum import IntEnum
from typing import Any, Optional, TextIO


class LogLevel(IntEnum):
    """Severity threshold, lowest first."""

    DEBUG = 10
    INFO = 20
    WARN = 30
    ERROR = 40


class Logger(ABC):
    """Abstract logger interface; keyword fields are rendered as key=value pairs."""

    @abstractmethod
    def debug(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        """Log a debug message."""
        pass

    @abstractmethod
    def info(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        """Log an info message."""
        pass

    @abstractmethod
    def warn(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        """Log a warning message."""
        pass

    @abstractmethod
    def error(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        """Log an error message."""
        pass


class ConsoleLogger(Logger):
    """Logger writing timestamped lines to the error stream."""

    def __init__(
        self,
        name: str = "DomoFV",
        level: LogLevel = LogLevel.INFO,
        stream: Optional[TextIO] = None
    ) -> None:
        """
        Initialize the console logger.

        Args:
            name: Name prefix for log messages
            level: Lowest level written
            stream: Target stream (default: sys.stderr at write time)
        """
        self._name = name
        self._level = level
        self._stream = stream

    def level(self) -> LogLevel:
        """Get the current threshold."""
        return self._level

    def set_level(self, level: LogLevel) -> None:
        """
        Change the threshold.

        Args:
            level: Lowest level written from now on
        """
        self._level = level

    def _format_message(
        self,
        level: LogLevel,
        message: str,
        error: Optional[Exception],
        fields: dict
    ) -> str:
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S.%f")[:-3]
        formatted = f"[{timestamp}] [{level.name}] [{self._name}] {message}"
        if fields:
            formatted += " " + " ".join(f"{key}={value}" for key, value in fields.items())
        if error is not None:
            tb = "".join(traceback.format_exception(type(error), error, error.__traceback__))
            formatted += f"\n{tb}"
        return formatted

    def _write(
        self,
        level: LogLevel,
        message: str,
        error: Optional[Exception],
        fields: dict
    ) -> None:
        if level < self._level:
            return
        print(self._format_message(level, message, error, fields), file=self._stream or sys.stderr)

    def debug(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        self._write(LogLevel.DEBUG, message, error, fields)

    def info(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        self._write(LogLevel.INFO, message, error, fields)

    def warn(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        self._write(LogLevel.WARN, message, error, fields)

    def error(self, message: str, /, error: Optional[Exception] = None, **fields: Any) -> None:
        self._write(LogLevel.ERROR, message, error, fields)


# Default logger instance
DefaultLogger = ConsoleLogger()
