"""
TelemetryCollector bridges logging and telemetry: it subscribes to log
entries and turns them into counters and operation timers.

Metrics:
    log.count.<level>             every entry
    log.errors.total              ERROR and CRITICAL entries
    errors.<ExceptionClass>       failures logged by ``track_call``
    operation.duration.<source>   exit entries of ``track_call``
"""

import sys
import threading

from normslab.core.logging.types import LogEntry, LogLevel
from normslab.core.telemetry.manager import TelemetryManager

_ERROR_LEVELS = {LogLevel.ERROR.value, LogLevel.CRITICAL.value}


class TelemetryCollector:
    _instance = None
    _lock = threading.Lock()

    def __init__(self):
        self._telemetry_manager = TelemetryManager.get_instance()

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = cls()
        return cls._instance

    def on_log_entry(self, entry: LogEntry):
        telemetry = self._telemetry_manager
        tags = {"source": entry.source, "level": entry.level}
        try:
            telemetry.record_counter(name=f"log.count.{entry.level.lower()}", tags=tags)

            if entry.level in _ERROR_LEVELS:
                telemetry.record_counter(
                    name="log.errors.total",
                    tags=tags,
                    context={"message": entry.message[:100]},
                )
                if entry.error:
                    telemetry.record_counter(name=f"errors.{entry.error}", tags=tags)

            if entry.duration is not None:
                telemetry.record_timer(
                    name=f"operation.duration.{entry.source}",
                    duration=entry.duration,
                    tags={"source": entry.source},
                )
        except Exception as e:
            print(f"[TelemetryCollector] dropped entry {entry.id}: {e}", file=sys.stderr)
