"""Telemetry events and the per-operation timer summary shown by ``--timings``."""

from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field


class MetricType(str, Enum):
    COUNTER = "COUNTER"
    GAUGE = "GAUGE"
    TIMER = "TIMER"


class TelemetryEvent(BaseModel):
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    metric_name: str
    metric_type: MetricType
    value: float
    tags: Dict[str, str] = Field(default_factory=dict)
    context: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(use_enum_values=True)


class TimerSummary(BaseModel):
    """Call count and total seconds of one tracked operation."""

    name: str
    calls: int
    total: float

    def line(self) -> str:
        return f"{self.name}: {self.calls} call(s), {self.total:.4f}s"
