# Description: configuration lookup, logging setup and worker sizing shared by every module.
# file name: myutils.py

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

DEFAULTS_PATH = Path(__file__).resolve().parent.parent / "settings" / "defaults.yaml"
ENV_PREFIX = "IBF_"


@lru_cache(maxsize=1)
def load_defaults() -> Dict[str, Any]:
    """Read settings/defaults.yaml once; a missing or broken file yields no defaults."""
    try:
        with open(DEFAULTS_PATH, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError):
        return {}
    return data if isinstance(data, dict) else {}


def get_config_value(key: str, default: Optional[Any] = None) -> Optional[Any]:
    """Safely retrieve configuration values from the environment or the defaults file."""
    env_value = os.environ.get(ENV_PREFIX + key.upper())
    if env_value is not None:
        return env_value

    defaults = load_defaults()
    if not defaults:
        return default
    return defaults.get(key.lower(), default)


def get_config_int(key: str, default: int) -> int:
    value = get_config_value(key, default)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"Configuration value {key}={value!r} is not an integer")


def worker_count() -> int:
    """Workers for chunked verification; IBF_THREADS=0 means one per CPU."""
    threads = get_config_int("threads", 0)
    if threads < 0:
        raise ValueError(f"IBF_THREADS must be >= 0, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def configure_logging(level: Optional[str] = None) -> None:
    level_name = str(level or get_config_value("log_level", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
