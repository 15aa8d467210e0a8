"""Tests for centralized logging module."""

import json
import logging
import os
import sys
from unittest.mock import patch

import pytest
from typer.testing import CliRunner

import prymcalc.logging as log_module
from prymcalc.algebra.brill_noether import BNParams, series_count
from prymcalc.algebra.certificate import companion_divisor_class
from prymcalc.algebra.picard import slope_inequalities
from prymcalc.cli.main import app
from prymcalc.logging import (
    ContextFilter,
    ConsoleFormatter,
    JSONFormatter,
    configure_logging,
    get_logger,
    log_context,
)


def _record(level: int = logging.INFO, msg: str = "Test message", args: tuple = ()):
    return logging.LogRecord(
        name="test",
        level=level,
        pathname="/path/to/file.py",
        lineno=10,
        msg=msg,
        args=args,
        exc_info=None,
    )


class TestJSONFormatter:
    """Test JSON log formatter."""

    def test_formats_basic_message(self):
        """Formats basic log message as JSON."""
        data = json.loads(JSONFormatter().format(_record()))

        assert data["level"] == "INFO"
        assert data["logger"] == "test"
        assert data["message"] == "Test message"
        assert "timestamp" in data

    def test_formats_message_with_args(self):
        """Formats log message with arguments."""
        data = json.loads(JSONFormatter().format(_record(msg="rho = %d", args=(0,))))

        assert data["message"] == "rho = 0"

    def test_includes_genus_and_command(self):
        """Includes the genus and command extras."""
        record = _record()
        record.genus = 15
        record.command = "class-d15"

        data = json.loads(JSONFormatter().format(record))

        assert data["genus"] == 15
        assert data["command"] == "class-d15"

    def test_omits_absent_extras(self):
        """Records without extras carry no genus key."""
        data = json.loads(JSONFormatter().format(_record()))

        assert "genus" not in data
        assert "command" not in data

    def test_includes_source_for_debug(self):
        """Includes source location for DEBUG level."""
        data = json.loads(JSONFormatter().format(_record(level=logging.DEBUG)))

        assert "source" in data
        assert data["source"]["line"] == 10

    def test_keeps_unicode(self):
        """Class names with Greek letters are not escaped."""
        data_text = JSONFormatter().format(_record(msg="δ0ram coefficient"))

        assert "δ0ram" in data_text


class TestConsoleFormatter:
    """Test console log formatter."""

    def test_formats_with_level(self):
        """Formats message with level."""
        record = _record()
        record.name = "prymcalc.algebra"

        result = ConsoleFormatter().format(record)

        assert "INFO" in result
        assert "prymcalc.algebra" in result
        assert "Test message" in result

    def test_formats_warning_level(self):
        """Formats warning message."""
        result = ConsoleFormatter().format(_record(level=logging.WARNING))

        assert "WARNING" in result


class TestConfigureLogging:
    """Test configure_logging function."""

    def setup_method(self):
        """Reset logging configuration before each test."""
        log_module._configured = False

    def teardown_method(self):
        log_module._configured = False

    def test_default_level_is_warning(self):
        """Default log level is WARNING."""
        with patch.dict(os.environ, {}, clear=True):
            configure_logging()
            assert logging.getLogger("prymcalc").level == logging.WARNING

    def test_respects_log_level_env(self):
        """Respects PRYM_LOG_LEVEL environment variable."""
        with patch.dict(os.environ, {"PRYM_LOG_LEVEL": "debug"}, clear=True):
            configure_logging()
            assert logging.getLogger("prymcalc").level == logging.DEBUG

    def test_unknown_level_falls_back_to_warning(self):
        """An unknown level name falls back to WARNING."""
        with patch.dict(os.environ, {"PRYM_LOG_LEVEL": "LOUD"}, clear=True):
            configure_logging()
            assert logging.getLogger("prymcalc").level == logging.WARNING

    def test_uses_json_formatter_when_enabled(self):
        """Uses JSON formatter when PRYM_LOG_JSON=true."""
        with patch.dict(os.environ, {"PRYM_LOG_JSON": "true"}, clear=True):
            configure_logging()
            handler = logging.getLogger("prymcalc").handlers[0]
            assert isinstance(handler.formatter, JSONFormatter)

    def test_uses_console_formatter_by_default(self):
        """Uses console formatter by default."""
        with patch.dict(os.environ, {}, clear=True):
            configure_logging()
            handler = logging.getLogger("prymcalc").handlers[0]
            assert isinstance(handler.formatter, ConsoleFormatter)

    def test_logs_to_stderr(self):
        """The handler writes to stderr, never stdout."""
        with patch.dict(os.environ, {}, clear=True):
            configure_logging()
            handler = logging.getLogger("prymcalc").handlers[0]
            assert isinstance(handler, logging.StreamHandler)
            assert handler.stream is sys.stderr

    def test_only_configures_once(self):
        """Only configures logging once."""
        configure_logging()
        logger = logging.getLogger("prymcalc")
        original_handlers = len(logger.handlers)

        configure_logging()
        assert len(logger.handlers) == original_handlers


class TestGetLogger:
    """Test get_logger function."""

    def test_returns_named_logger(self):
        """Returns logger with correct name."""
        logger = get_logger("prymcalc.algebra.grr")
        assert isinstance(logger, logging.Logger)
        assert logger.name == "prymcalc.algebra.grr"

    def test_auto_configures_logging(self):
        """Automatically configures logging on first call."""
        log_module._configured = False

        get_logger("prymcalc.test")

        assert log_module._configured is True


class _Capture(logging.Handler):
    """Collects records after ContextFilter, as the configured handler sees them."""

    def __init__(self):
        super().__init__(logging.DEBUG)
        self.addFilter(ContextFilter())
        self.records: list[logging.LogRecord] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.records.append(record)


@pytest.fixture
def captured():
    logger = logging.getLogger("prymcalc")
    handler = _Capture()
    previous = logger.level
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)
    yield handler
    logger.removeHandler(handler)
    logger.setLevel(previous)


class TestLogContext:
    """Test log_context and ContextFilter."""

    def test_bound_genus_reaches_json(self):
        """Fields bound for a block appear in the JSON output."""
        record = _record()
        with log_context(genus=15, command="census"):
            ContextFilter().filter(record)

        data = json.loads(JSONFormatter().format(record))

        assert data["genus"] == 15
        assert data["command"] == "census"

    def test_explicit_extra_wins(self):
        """A genus passed with extra= is not overwritten by the bound one."""
        record = _record()
        record.genus = 24
        with log_context(genus=15):
            ContextFilter().filter(record)

        assert record.genus == 24

    def test_nested_blocks_merge(self):
        record = _record()
        with log_context(command="slopes"), log_context(genus=13):
            ContextFilter().filter(record)

        assert (record.command, record.genus) == ("slopes", 13)

    def test_context_ends_with_block(self):
        record = _record()
        with log_context(genus=15):
            pass
        ContextFilter().filter(record)

        assert not hasattr(record, "genus")

    def test_unknown_field_rejected(self):
        with pytest.raises(ValueError, match="unknown log context fields"):
            with log_context(curve="C"):
                pass

    def test_console_suffix(self):
        """Console records end with the bound context."""
        record = _record()
        with log_context(genus=15, command="canonical"):
            ContextFilter().filter(record)

        result = ConsoleFormatter().format(record)

        assert result.endswith("Test message [genus=15 command=canonical]")

    def test_console_without_context_has_no_suffix(self):
        assert ConsoleFormatter().format(_record()).endswith("Test message")


class TestGenusInLogs:
    """Genus-bearing computations and commands log their genus."""

    def test_series_count_debug(self, captured: _Capture):
        series_count(BNParams(15, 4, 16))

        record = next(r for r in captured.records if "Linear series count" in r.getMessage())
        assert json.loads(JSONFormatter().format(record))["genus"] == 15

    def test_slope_checks_debug(self, captured: _Capture):
        slope_inequalities(companion_divisor_class())

        record = next(r for r in captured.records if "Slope checks" in r.getMessage())
        assert record.genus == 15

    def test_failed_command_logs_genus_command_and_code(self, captured: _Capture):
        """A failing ``canonical 3`` logs a warning carrying all three context fields."""
        result = CliRunner().invoke(app, ["canonical", "3"])

        assert result.exit_code == 1
        warning = next(r for r in captured.records if r.levelno == logging.WARNING)
        data = json.loads(JSONFormatter().format(warning))
        assert data["genus"] == 3
        assert data["command"] == "canonical"
        assert data["error_code"] == "E112"
