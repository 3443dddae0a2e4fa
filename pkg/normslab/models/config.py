"""Configuration models for norms-lab."""

from typing import List

from pydantic import BaseModel, Field

from normslab.models.logging import LogLevel


class ArithmeticSettings(BaseModel):
    """Working precision and tower limits."""

    precision: int = Field(default=60, ge=20)
    max_level: int = Field(default=5, ge=1)
    coercion_margin: int = Field(default=5, ge=1)
    pthpower_margin: int = Field(default=5, ge=0)


class LoggingSettings(BaseModel):
    level: LogLevel = LogLevel.WARNING
    enabled: bool = True
    providers: List[str] = Field(default_factory=lambda: ["console"])


class TelemetrySettings(BaseModel):
    enabled: bool = True


class Settings(BaseModel):
    """Validated contents of config.toml."""

    arithmetic: ArithmeticSettings = Field(default_factory=ArithmeticSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    telemetry: TelemetrySettings = Field(default_factory=TelemetrySettings)
