"""In-memory telemetry provider backing the CLI ``--timings`` report."""

from collections import defaultdict
from typing import Dict, List

from normslab.core.telemetry.interface import TelemetryProvider
from normslab.core.telemetry.types import MetricType, TelemetryEvent
from normslab.models.telemetry import TimerSummary


class InMemoryTelemetryProvider(TelemetryProvider):
    def __init__(self, name: str = "memory"):
        self.name = name
        self.events: List[TelemetryEvent] = []
        self.counters: Dict[str, float] = defaultdict(float)
        self.gauges: Dict[str, float] = {}
        self.timers: Dict[str, List[float]] = defaultdict(list)

    def record(self, event: TelemetryEvent) -> None:
        self.events.append(event)
        kind = MetricType(event.metric_type)
        if kind is MetricType.COUNTER:
            self.counters[event.metric_name] += event.value
        elif kind is MetricType.GAUGE:
            self.gauges[event.metric_name] = event.value
        else:
            self.timers[event.metric_name].append(event.value)

    def get_counter(self, name: str) -> float:
        return self.counters.get(name, 0.0)

    def get_timers(self, name: str) -> List[float]:
        return self.timers.get(name, [])

    def timer_summary(self) -> List[TimerSummary]:
        """One summary per timed operation, sorted by name."""
        return [
            TimerSummary(name=name, calls=len(values), total=sum(values))
            for name, values in sorted(self.timers.items())
        ]

    def clear(self):
        self.events.clear()
        self.counters.clear()
        self.gauges.clear()
        self.timers.clear()
