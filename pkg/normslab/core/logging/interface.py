from abc import ABC, abstractmethod

from normslab.core.logging.types import LogEntry


class LogProvider(ABC):
    """Receives the entries that pass the LogManager's level threshold.

    Providers must not write to stdout; it carries the result document.
    """

    @abstractmethod
    def log(self, entry: LogEntry) -> None: ...

    def initialize(self) -> None:
        pass

    def shutdown(self) -> None:
        pass
