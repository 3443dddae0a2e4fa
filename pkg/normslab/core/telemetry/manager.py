import threading
from typing import Any, Dict, List, Optional

from normslab.core.telemetry.interface import TelemetryProvider
from normslab.core.telemetry.types import MetricType, TelemetryEvent


class TelemetryManager:
    """Process-wide dispatcher of metrics to the registered providers."""

    _instance = None
    _lock = threading.Lock()

    def __init__(self):
        self._providers: List[TelemetryProvider] = []

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = cls()
        return cls._instance

    def register_provider(self, provider: TelemetryProvider):
        self._providers.append(provider)

    def clear_providers(self):
        self._providers.clear()

    @property
    def providers(self) -> List[TelemetryProvider]:
        return list(self._providers)

    def record(self, event: TelemetryEvent):
        for provider in self._providers:
            try:
                provider.record(event)
            except Exception:
                # metrics never abort a computation
                pass

    def _emit(
        self,
        kind: MetricType,
        name: str,
        value: float,
        tags: Optional[Dict[str, str]],
        context: Optional[Dict[str, Any]] = None,
    ):
        self.record(
            TelemetryEvent(
                metric_name=name,
                metric_type=kind,
                value=value,
                tags=tags or {},
                context=context or {},
            )
        )

    def record_counter(
        self,
        name: str,
        value: float = 1.0,
        tags: Optional[Dict[str, str]] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        self._emit(MetricType.COUNTER, name, value, tags, context)

    def record_gauge(self, name: str, value: float, tags: Optional[Dict[str, str]] = None):
        self._emit(MetricType.GAUGE, name, value, tags)

    def record_timer(self, name: str, duration: float, tags: Optional[Dict[str, str]] = None):
        """``duration`` is in seconds."""
        self._emit(MetricType.TIMER, name, duration, tags)

    def flush(self):
        for provider in self._providers:
            provider.flush()
