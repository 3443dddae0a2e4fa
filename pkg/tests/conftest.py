"""Test ordering and the observability reset shared by every suite."""

import pytest

from normslab.core.logging import LogLevel, LogManager
from normslab.core.telemetry import TelemetryManager


def pytest_collection_modifyitems(items):
    """Run performance tests first.

    Their time bounds are measured most reliably before the other suites
    have filled the profile and Teichmuller caches.
    """
    performance = [item for item in items if "performance" in str(item.fspath)]
    others = [item for item in items if "performance" not in str(item.fspath)]
    items[:] = performance + others


@pytest.fixture(autouse=True)
def reset_observability():
    """Drop providers and subscribers that a CLI run or a test left behind."""
    log_manager = LogManager.get_instance()
    telemetry = TelemetryManager.get_instance()
    log_manager.clear_providers()
    log_manager.clear_subscribers()
    log_manager.set_context(trace_id=None)
    telemetry.clear_providers()
    yield
    log_manager.clear_providers()
    log_manager.clear_subscribers()
    log_manager.set_level(LogLevel.WARNING)
    log_manager.enabled = True
    telemetry.clear_providers()
