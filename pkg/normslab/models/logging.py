"""Structured log entries.

``track_call`` puts ``duration`` (seconds) into the context of exit entries
and ``error`` (the exception class name) into the context of failures.
"""

import uuid
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class LogLevel(str, Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LogEntry(BaseModel):
    id: str = Field(default_factory=lambda: str(uuid.uuid4()))
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    level: LogLevel
    message: str
    source: str
    trace_id: Optional[str] = None
    span_id: Optional[str] = None
    context: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(use_enum_values=True)

    @property
    def duration(self) -> Optional[float]:
        return self.context.get("duration")

    @property
    def error(self) -> Optional[str]:
        return self.context.get("error")

    def render(self) -> str:
        """One console line: trace id, source, message and the error class if any."""
        text = f"[{self.source}] {self.message}"
        if self.error:
            text += f" ({self.error})"
        if self.trace_id:
            text = f"[{self.trace_id}] {text}"
        return text
