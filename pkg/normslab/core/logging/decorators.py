import functools
import time
from typing import Any, Callable, Optional

from normslab.core.logging.manager import LogManager, LogLevel


def track_call(level: LogLevel = LogLevel.DEBUG, source: Optional[str] = None):
    """
    Decorator to track function entry and exit logs.

    The exit entry carries the wall-clock ``duration`` in its context, which
    the telemetry collector turns into a timer.

    Args:
        level: Log level to use for the entry/exit logs.
        source: Custom source identifier. Defaults to module.function.
    """

    def decorator(func: Callable) -> Callable:
        name = source or f"{func.__module__}.{func.__qualname__}"

        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            logger = LogManager.get_instance()
            start_time = time.perf_counter()

            logger.log(level=level, message=f"Entering {func.__name__}", source=name)

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                duration = time.perf_counter() - start_time
                logger.log(
                    level=LogLevel.ERROR,
                    message=f"Exception in {func.__name__}: {e}",
                    source=name,
                    context={"error": type(e).__name__, "duration": duration},
                )
                raise

            duration = time.perf_counter() - start_time
            logger.log(
                level=level,
                message=f"Exiting {func.__name__} (Duration: {duration:.4f}s)",
                source=name,
                context={"duration": duration},
            )
            return result

        return wrapper

    return decorator
