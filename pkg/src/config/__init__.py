"""Configuration module."""

from src.config.defaults import CONFIG, get, get_config
from src.config.loader import find_config_file, load_config, load_config_from_file
from src.config.models import (
    LieGraphConfig,
    LinalgMethod,
    OutputFormat,
    Strategy,
)

__all__ = [
    "CONFIG",
    "get",
    "get_config",
    "find_config_file",
    "load_config",
    "load_config_from_file",
    "LieGraphConfig",
    "LinalgMethod",
    "OutputFormat",
    "Strategy",
]
