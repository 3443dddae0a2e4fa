from normslab.core.telemetry.providers.memory import InMemoryTelemetryProvider

__all__ = ["InMemoryTelemetryProvider"]
