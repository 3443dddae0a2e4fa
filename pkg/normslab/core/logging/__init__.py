from normslab.core.logging.types import LogEntry, LogLevel
from normslab.core.logging.interface import LogProvider
from normslab.core.logging.manager import LogManager
from normslab.core.logging.decorators import track_call

__all__ = ["LogEntry", "LogLevel", "LogProvider", "LogManager", "track_call"]
