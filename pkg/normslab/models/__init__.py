"""Models package for norms-lab.

This package contains the pydantic models used throughout the library,
organized by purpose: arithmetic documents, verification reports, settings,
and logging/telemetry events.
"""

# Arithmetic documents
from .documents import (
    CycloDocument,
    FactorizationDocument,
    PAdicDocument,
    SequenceDocument,
    SeriesDocument,
)

# Verification reports
from .reports import (
    ApfReport,
    CompatibilityReport,
    CompositeRecord,
    CongruenceReport,
    CrossCheckRecord,
    FonAddReport,
    LevelAgreement,
    LevelRecord,
    LiftReport,
    OortReport,
    PairWitness,
    RamificationReport,
    StabilityReport,
)

# Settings
from .config import ArithmeticSettings, LoggingSettings, Settings, TelemetrySettings

# Logging models
from .logging import LogEntry, LogLevel

# Telemetry models
from .telemetry import MetricType, TelemetryEvent

__all__ = [
    # Arithmetic documents
    "CycloDocument",
    "FactorizationDocument",
    "PAdicDocument",
    "SequenceDocument",
    "SeriesDocument",
    # Verification reports
    "ApfReport",
    "CompatibilityReport",
    "CompositeRecord",
    "CongruenceReport",
    "CrossCheckRecord",
    "FonAddReport",
    "LevelAgreement",
    "LevelRecord",
    "LiftReport",
    "OortReport",
    "PairWitness",
    "RamificationReport",
    "StabilityReport",
    # Settings
    "ArithmeticSettings",
    "LoggingSettings",
    "Settings",
    "TelemetrySettings",
    # Logging models
    "LogEntry",
    "LogLevel",
    # Telemetry models
    "MetricType",
    "TelemetryEvent",
]
