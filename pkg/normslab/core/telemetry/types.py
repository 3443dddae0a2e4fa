"""Re-exports of the telemetry models in normslab.models.telemetry."""

from normslab.models.telemetry import MetricType, TelemetryEvent, TimerSummary

__all__ = ["MetricType", "TelemetryEvent", "TimerSummary"]
