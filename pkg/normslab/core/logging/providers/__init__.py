from normslab.core.logging.providers.console import ConsoleLogProvider

__all__ = ["ConsoleLogProvider"]
