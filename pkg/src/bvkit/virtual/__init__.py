from ._config import DEFAULT_CONFIG, BVConfig, ConfigError, load_config
from ._container import SessionContainer, Signal, SignalCache

__all__ = [
    "BVConfig",
    "ConfigError",
    "DEFAULT_CONFIG",
    "SessionContainer",
    "Signal",
    "SignalCache",
    "load_config",
]
