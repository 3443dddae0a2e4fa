import threading
from contextvars import ContextVar
from typing import Any, Callable, Dict, List, Optional

from normslab.core.logging.interface import LogProvider
from normslab.core.logging.types import LogEntry, LogLevel

# Context variables for tracing
_trace_id_ctx = ContextVar("trace_id", default=None)
_span_id_ctx = ContextVar("span_id", default=None)

_LEVEL_ORDER = {
    LogLevel.DEBUG.value: 10,
    LogLevel.INFO.value: 20,
    LogLevel.WARNING.value: 30,
    LogLevel.ERROR.value: 40,
    LogLevel.CRITICAL.value: 50,
}


class LogManager:
    """Process-wide fan-out of structured log entries.

    Entries below ``threshold`` skip the providers but still reach subscribers,
    so telemetry sees every tracked call regardless of console verbosity.
    """

    _instance = None
    _lock = threading.Lock()

    def __init__(self):
        self._providers: List[LogProvider] = []
        self._subscribers: List[Callable[[LogEntry], None]] = []
        self.threshold: LogLevel = LogLevel.WARNING
        self.enabled = True

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = cls()
        return cls._instance

    def initialize(self):
        for provider in self._providers:
            provider.initialize()

    def shutdown(self):
        for provider in self._providers:
            provider.shutdown()

    def register_provider(self, provider: LogProvider):
        self._providers.append(provider)

    def subscribe(self, callback: Callable[[LogEntry], None]):
        self._subscribers.append(callback)

    def clear_providers(self):
        """Clear all registered providers (for testing purposes)."""
        self._providers.clear()

    def clear_subscribers(self):
        """Clear all subscribers (for testing purposes)."""
        self._subscribers.clear()

    def set_level(self, level: LogLevel | str):
        self.threshold = LogLevel(level)

    def set_context(self, trace_id: Optional[str], span_id: Optional[str] = None):
        _trace_id_ctx.set(trace_id)
        if span_id:
            _span_id_ctx.set(span_id)

    def get_context(self) -> Dict[str, Optional[str]]:
        return {"trace_id": _trace_id_ctx.get(), "span_id": _span_id_ctx.get()}

    def log(
        self,
        level: LogLevel,
        message: str,
        source: str,
        context: Optional[Dict[str, Any]] = None,
    ):
        entry = LogEntry(
            level=level,
            message=message,
            source=source,
            trace_id=_trace_id_ctx.get(),
            span_id=_span_id_ctx.get(),
            context=context or {},
        )

        if self.enabled and _LEVEL_ORDER[entry.level] >= _LEVEL_ORDER[
            LogLevel(self.threshold).value
        ]:
            for provider in self._providers:
                try:
                    provider.log(entry)
                except Exception:
                    # A broken provider must not abort a computation
                    pass

        for subscriber in self._subscribers:
            try:
                subscriber(entry)
            except Exception:
                pass

    # Convenience methods
    def debug(self, message: str, source: str, **kwargs):
        self.log(LogLevel.DEBUG, message, source, kwargs)

    def info(self, message: str, source: str, **kwargs):
        self.log(LogLevel.INFO, message, source, kwargs)

    def warning(self, message: str, source: str, **kwargs):
        self.log(LogLevel.WARNING, message, source, kwargs)

    def error(self, message: str, source: str, **kwargs):
        self.log(LogLevel.ERROR, message, source, kwargs)

    def critical(self, message: str, source: str, **kwargs):
        self.log(LogLevel.CRITICAL, message, source, kwargs)
