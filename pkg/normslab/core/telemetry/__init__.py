from normslab.core.telemetry.types import TelemetryEvent, MetricType
from normslab.core.telemetry.interface import TelemetryProvider
from normslab.core.telemetry.manager import TelemetryManager
from normslab.core.telemetry.collector import TelemetryCollector

__all__ = [
    "TelemetryEvent",
    "MetricType",
    "TelemetryProvider",
    "TelemetryManager",
    "TelemetryCollector",
]
