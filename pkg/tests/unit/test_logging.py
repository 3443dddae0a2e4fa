"""Unit tests for the structured logging layer."""

from typing import List

import pytest

from normslab.core.logging import LogEntry, LogLevel, LogManager, LogProvider, track_call
from normslab.core.logging.providers.console import ConsoleLogProvider


class MockLogProvider(LogProvider):
    def __init__(self):
        self.logs: List[LogEntry] = []

    def log(self, entry: LogEntry):
        self.logs.append(entry)


class BrokenProvider(LogProvider):
    def log(self, entry: LogEntry):
        raise RuntimeError("disk full")


@pytest.fixture
def log_manager():
    manager = LogManager.get_instance()
    manager.clear_providers()
    manager.clear_subscribers()
    manager.set_level(LogLevel.DEBUG)
    manager.enabled = True
    yield manager
    manager.clear_providers()
    manager.clear_subscribers()
    manager.set_level(LogLevel.WARNING)


def test_log_manager_singleton():
    """Test that get_instance returns one manager."""
    assert LogManager.get_instance() is LogManager.get_instance()


def test_log_flow(log_manager):
    """Test that entries reach providers with their fields."""
    provider = MockLogProvider()
    log_manager.register_provider(provider)

    log_manager.info("Test message", "test.source", m=2)

    assert len(provider.logs) == 1
    entry = provider.logs[0]
    assert entry.message == "Test message"
    assert entry.source == "test.source"
    assert entry.level == LogLevel.INFO.value
    assert entry.context == {"m": 2}


def test_threshold_filters_providers_not_subscribers(log_manager):
    """Test that entries below the threshold still reach subscribers."""
    provider = MockLogProvider()
    seen: List[LogEntry] = []
    log_manager.register_provider(provider)
    log_manager.subscribe(seen.append)
    log_manager.set_level("WARNING")

    log_manager.debug("quiet", "test")
    log_manager.error("loud", "test")

    assert [e.message for e in provider.logs] == ["loud"]
    assert [e.message for e in seen] == ["quiet", "loud"]


def test_disabled_manager(log_manager):
    """Test that a disabled manager skips providers."""
    provider = MockLogProvider()
    log_manager.register_provider(provider)
    log_manager.enabled = False
    log_manager.critical("dropped", "test")
    assert provider.logs == []


def test_broken_provider_is_ignored(log_manager):
    """Test that a failing provider does not stop the others."""
    provider = MockLogProvider()
    log_manager.register_provider(BrokenProvider())
    log_manager.register_provider(provider)
    log_manager.warning("still here", "test")
    assert len(provider.logs) == 1


def test_trace_context(log_manager):
    """Test that the trace id is stamped on entries."""
    provider = MockLogProvider()
    log_manager.register_provider(provider)
    log_manager.set_context("trace-1", "span-1")
    log_manager.info("traced", "test")
    assert provider.logs[0].trace_id == "trace-1"
    assert log_manager.get_context()["span_id"] == "span-1"


def test_track_call_records_duration(log_manager):
    """Test entry and exit logs with a duration on exit."""
    provider = MockLogProvider()
    log_manager.register_provider(provider)

    @track_call(level=LogLevel.INFO, source="square")
    def square(x):
        return x * x

    assert square(7) == 49
    assert [e.message for e in provider.logs][0] == "Entering square"
    exit_entry = provider.logs[-1]
    assert exit_entry.message.startswith("Exiting square")
    assert exit_entry.duration >= 0


def test_track_call_logs_exceptions(log_manager):
    """Test that exceptions are logged at ERROR and re-raised."""
    provider = MockLogProvider()
    log_manager.register_provider(provider)

    @track_call()
    def boom():
        raise ValueError("bad input")

    with pytest.raises(ValueError, match="bad input"):
        boom()
    error = provider.logs[-1]
    assert error.level == LogLevel.ERROR.value
    assert error.error == "ValueError"
    assert error.source.endswith("boom")


def test_console_provider_writes_stderr(capsys):
    """Test that the console provider writes to stderr only."""
    provider = ConsoleLogProvider("test-console")
    provider.log(LogEntry(level=LogLevel.WARNING, message="careful", source="unit"))
    captured = capsys.readouterr()
    assert "[unit] careful" in captured.err
    assert captured.out == ""


def test_entry_render():
    """Test the console line with a trace id and an error class."""
    entry = LogEntry(
        level=LogLevel.ERROR,
        message="Exception in fon_add: short",
        source="fon_add",
        trace_id="fon",
        context={"error": "PrecisionExhausted"},
    )
    assert entry.render() == "[fon] [fon_add] Exception in fon_add: short (PrecisionExhausted)"
    assert entry.duration is None
