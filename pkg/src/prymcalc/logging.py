"""Logging for prymcalc.

Records carry the genus and the CLI command they belong to, plus the error
code when a computation fails. These fields are passed per call with
``extra=`` or bound for a block with ``log_context``. Handlers write to stderr
only, so command output on stdout is identical between runs.
"""

import json
import logging
import os
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from datetime import UTC, datetime
from typing import Any

# Record attributes rendered as structured context, in this order
CONTEXT_FIELDS = ("genus", "command", "error_code")

DEFAULT_LEVEL = logging.WARNING

_bound: ContextVar[tuple[tuple[str, Any], ...]] = ContextVar("prymcalc_log_context", default=())


def _context_of(record: logging.LogRecord) -> dict[str, Any]:
    return {
        field: getattr(record, field)
        for field in CONTEXT_FIELDS
        if getattr(record, field, None) is not None
    }


class ContextFilter(logging.Filter):
    """Fill in fields bound by ``log_context`` that the logging call did not set."""

    def filter(self, record: logging.LogRecord) -> bool:
        for field, value in _bound.get():
            if getattr(record, field, None) is None:
                setattr(record, field, value)
        return True


@contextmanager
def log_context(**fields: Any) -> Iterator[None]:
    """Bind ``genus``, ``command`` or ``error_code`` for every record logged in the block.

    Raises:
        ValueError: For a field outside CONTEXT_FIELDS
    """
    unknown = sorted(set(fields) - set(CONTEXT_FIELDS))
    if unknown:
        raise ValueError(f"unknown log context fields: {unknown}")
    merged = dict(_bound.get())
    merged.update({field: value for field, value in fields.items() if value is not None})
    token = _bound.set(tuple(merged.items()))
    try:
        yield
    finally:
        _bound.reset(token)


class JSONFormatter(logging.Formatter):
    """One JSON object per record, context fields at top level."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": datetime.now(UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        log_data.update(_context_of(record))

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        if record.levelno <= logging.DEBUG:
            log_data["source"] = {
                "file": record.pathname,
                "line": record.lineno,
                "function": record.funcName,
            }

        return json.dumps(log_data, ensure_ascii=False)


class ConsoleFormatter(logging.Formatter):
    """Coloured single-line records with the context as a ``[key=value ...]`` suffix."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, "")
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        context = " ".join(f"{field}={value}" for field, value in _context_of(record).items())
        suffix = f" [{context}]" if context else ""

        return (
            f"{color}{timestamp} [{record.levelname:8}]{self.RESET} "
            f"{record.name}: {record.getMessage()}{suffix}"
        )


def _level_from_env() -> int:
    name = os.environ.get("PRYM_LOG_LEVEL", "").upper()
    level = logging.getLevelName(name) if name else DEFAULT_LEVEL
    return level if isinstance(level, int) else DEFAULT_LEVEL


_configured = False


def configure_logging() -> None:
    """Configure the ``prymcalc`` logger tree once.

    Environment Variables:
        PRYM_LOG_LEVEL: DEBUG, INFO, WARNING (default), ERROR or CRITICAL
        PRYM_LOG_JSON: 'true' selects JSONFormatter
    """
    global _configured
    if _configured:
        return

    log_level = _level_from_env()
    use_json = os.environ.get("PRYM_LOG_JSON", "false").lower() == "true"

    root_logger = logging.getLogger("prymcalc")
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.addFilter(ContextFilter())
    handler.setFormatter(JSONFormatter() if use_json else ConsoleFormatter())

    root_logger.addHandler(handler)
    root_logger.propagate = False

    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Logger under the configured ``prymcalc`` tree (``name`` is usually ``__name__``)."""
    configure_logging()
    return logging.getLogger(name)
