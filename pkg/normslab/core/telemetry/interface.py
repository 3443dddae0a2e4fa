from abc import ABC, abstractmethod

from normslab.core.telemetry.types import TelemetryEvent


class TelemetryProvider(ABC):
    """Receives every event the TelemetryManager records."""

    @abstractmethod
    def record(self, event: TelemetryEvent) -> None: ...

    def flush(self) -> None:
        """Called once by the CLI after the document is written."""
