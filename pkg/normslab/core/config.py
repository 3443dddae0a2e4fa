"""Settings loading.

Precedence for the working precision: explicit flag, then the
``NORMS_LAB_PRECISION`` environment variable, then ``config.toml``, then the
built-in default. The config path itself comes from ``--config`` or
``NORMS_LAB_CONFIG``.
"""

import logging
import os
from pathlib import Path
from typing import Optional, Union

import toml
from pydantic import ValidationError

from normslab.core.errors import InvalidInput
from normslab.models.config import Settings

logger = logging.getLogger(__name__)

CONFIG_ENV = "NORMS_LAB_CONFIG"
PRECISION_ENV = "NORMS_LAB_PRECISION"
DEFAULT_CONFIG = Path("config.toml")


def resolve_config_path(config_path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    if config_path:
        return Path(config_path)
    env_path = os.environ.get(CONFIG_ENV)
    if env_path:
        return Path(env_path)
    if DEFAULT_CONFIG.exists():
        return DEFAULT_CONFIG
    return None


def load_settings(
    config_path: Optional[Union[str, Path]] = None,
    precision: Optional[int] = None,
) -> Settings:
    """Load and validate settings.

    Args:
        config_path: Explicit config file; falls back to env and ./config.toml.
        precision: Flag value; wins over everything else when given.

    Raises:
        InvalidInput: unreadable or invalid configuration.
    """
    path = resolve_config_path(config_path)
    data = {}
    if path is not None:
        if not path.exists():
            raise InvalidInput(f"Config file not found: {path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = toml.load(f)
        except (toml.TomlDecodeError, OSError) as e:
            raise InvalidInput(f"Failed to load config from {path}: {e}") from e
        logger.debug("Loaded config from %s", path)

    arithmetic = dict(data.get("arithmetic", {}))
    env_precision = os.environ.get(PRECISION_ENV)
    if env_precision:
        try:
            arithmetic["precision"] = int(env_precision)
        except ValueError as e:
            raise InvalidInput(
                f"{PRECISION_ENV} must be an integer, got {env_precision!r}"
            ) from e
    if precision is not None:
        arithmetic["precision"] = precision

    try:
        return Settings(
            arithmetic=arithmetic,
            logging=data.get("logging", {}),
            telemetry=data.get("telemetry", {}),
        )
    except ValidationError as e:
        raise InvalidInput(f"Invalid configuration: {e}") from e
