"""
Configuration loader for the project.
"""
import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from .errors import ConfigError

THREADS_ENV = "SPECTRA_BOUNDS_THREADS"


def get_project_root() -> Path:
    """Get the project root directory."""
    return Path(__file__).parent.parent


def _parse_threads(raw: str) -> int:
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if threads < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return threads


def load_config(config_path: Optional[Path] = None) -> dict:
    """Load configuration from settings.yaml, then apply environment overrides."""
    config_path = config_path or get_project_root() / "config" / "settings.yaml"

    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f)

    load_dotenv()

    # Allow environment variable overrides
    if os.environ.get(THREADS_ENV):
        config["runtime"]["threads"] = _parse_threads(os.environ[THREADS_ENV])

    return config


_config = None


def get_config() -> dict:
    """Get cached configuration."""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config():
    """Drop the cached configuration (tests, env changes)."""
    global _config
    _config = None
