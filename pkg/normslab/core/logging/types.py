"""
Logging types module.

This module re-exports logging models; they are defined in
normslab.models.logging.
"""

from normslab.models.logging import LogEntry, LogLevel

__all__ = ["LogEntry", "LogLevel"]
