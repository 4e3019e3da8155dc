from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from typing_extensions import NotRequired, Required, TypedDict

from bvkit.exceptions import BVError

__all__ = ["BVConfig", "ConfigError", "DEFAULT_CONFIG", "load_config"]


class ConfigError(BVError, ValueError):
    """A configuration file is missing a key or has a value of the wrong type."""


class BVConfig(TypedDict, total=False):
    """Configuration schema of a bvkit session."""

    schema_version: Required[float]
    """Configuration schema version."""

    budget: NotRequired[int]
    """Structures a single proof search may explore. Default is ``10**6``."""

    progress_every: NotRequired[int]
    """Progress is reported each time this many structures were explored."""

    session: NotRequired[str]
    """Session display name. If not provided, default is `"bvkit"`."""

    metadata: NotRequired[dict[str, Any]]
    """Additional session-specific metadata."""


DEFAULT_CONFIG: BVConfig = {
    "schema_version": 1.0,
    "budget": 10**6,
    "progress_every": 10**4,
    "session": "bvkit",
    "metadata": {},
}


def load_config(path: str | Path) -> BVConfig:
    """Read a session configuration from a YAML file.

    Missing optional keys take their value from `DEFAULT_CONFIG`.

    Raises
    ------
    ConfigError
        If the file is not a mapping, lacks ``schema_version`` or a value
        has the wrong type.
    """
    with open(path) as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path} does not contain a mapping")
    if "schema_version" not in data:
        raise ConfigError(f"{path} has no schema_version")
    config: BVConfig = {**DEFAULT_CONFIG, **data}  # type: ignore[typeddict-item]
    for key in ("budget", "progress_every"):
        value = config.get(key)
        if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
            raise ConfigError(f"{key} must be a positive integer, got {value!r}")
    if not isinstance(config.get("metadata"), dict):
        raise ConfigError("metadata must be a mapping")
    return config
