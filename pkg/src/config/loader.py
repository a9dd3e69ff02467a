"""Configuration loader for liegraph."""

from __future__ import annotations

import sys
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from src.config.defaults import SECTIONS, get_config
from src.config.models import (
    CacheConfig,
    CanonicalConfig,
    EngineConfig,
    LieGraphConfig,
    LinalgConfig,
    LinalgMethod,
    OutputConfig,
    OutputFormat,
    Strategy,
)
from src.errors import ConfigError
from src.linalg.rank import MIN_PRIME

E = TypeVar("E", bound=Enum)


def _enum(kind: Type[E], value: Any, key: str) -> E:
    if isinstance(value, kind):
        return value
    try:
        return kind(value)
    except ValueError:
        choices = ", ".join(m.value for m in kind)
        raise ConfigError(f"Invalid {key} {value!r}; expected one of: {choices}") from None


def _int(value: Any, key: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{key} must be >= {minimum}, got {value}")
    return value


def _section(data: Dict[str, Any], name: str) -> Dict[str, Any]:
    section = data.get(name, {})
    if not isinstance(section, dict):
        raise ConfigError(f"[{name}] must be a table, got {type(section).__name__}")
    return section


def _with_defaults(data: Dict[str, Any]) -> Dict[str, Any]:
    """Lay ``data`` over the defaults section by section."""
    merged: Dict[str, Any] = get_config()
    for name, section in data.items():
        if isinstance(section, dict):
            merged[name].update(section)
        else:
            merged[name] = section
    return merged


def _create_config_from_dict(data: Dict[str, Any]) -> LieGraphConfig:
    """Create LieGraphConfig from a dictionary.

    Keys missing from ``data`` take their value from ``defaults.CONFIG``.

    Raises:
        ConfigError: Unknown section or an invalid value.
    """
    unknown = set(data) - set(SECTIONS)
    if unknown:
        raise ConfigError(f"Unknown config section(s): {', '.join(sorted(unknown))}")
    data = _with_defaults(data)

    engine_data = _section(data, "engine")
    engine = EngineConfig(
        strategy=_enum(Strategy, engine_data["strategy"], "engine.strategy"),
        workers=_int(engine_data["workers"], "engine.workers", 1),
    )

    cache_data = _section(data, "cache")
    cache = CacheConfig(
        enabled=bool(cache_data["enabled"]),
        directory=cache_data["directory"],
    )

    canonical_data = _section(data, "canonical")
    canonical = CanonicalConfig(
        max_order=_int(canonical_data["max_order"], "canonical.max_order", 1),
    )

    linalg_data = _section(data, "linalg")
    linalg = LinalgConfig(
        method=_enum(LinalgMethod, linalg_data["method"], "linalg.method"),
        prime=_int(linalg_data["prime"], "linalg.prime", MIN_PRIME + 1),
    )

    output_data = _section(data, "output")
    output = OutputConfig(
        format=_enum(OutputFormat, output_data["format"], "output.format"),
        colors=bool(output_data["colors"]),
        verbose=bool(output_data["verbose"]),
    )

    return LieGraphConfig(
        engine=engine,
        cache=cache,
        canonical=canonical,
        linalg=linalg,
        output=output,
    )


def load_config_from_file(path: Path) -> LieGraphConfig:
    """Load configuration from a TOML file.

    Args:
        path: Path to the TOML configuration file.

    Returns:
        LieGraphConfig instance with loaded configuration.

    Raises:
        ConfigError: If the file is missing or invalid.
    """
    return _create_config_from_dict(_read_toml(path))


def _read_toml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise ConfigError(f"Config file not found: {path}")
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"Invalid TOML in {path}: {e}") from e


def load_config(
    config_path: Optional[Path] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> LieGraphConfig:
    """Load configuration with optional overrides.

    Args:
        config_path: Optional path to a TOML config file.
        overrides: Dotted keys such as ``"cache.enabled"``; ``None`` values are ignored.

    Returns:
        LieGraphConfig instance.
    """
    config_dict: Dict[str, Any] = {}
    if config_path is not None:
        config_dict = {k: dict(v) if isinstance(v, dict) else v for k, v in _read_toml(config_path).items()}

    if overrides:
        for key, value in overrides.items():
            if value is None:
                continue
            if "." in key:
                parts = key.split(".")
                current = config_dict
                for part in parts[:-1]:
                    if part not in current:
                        current[part] = {}
                    current = current[part]
                current[parts[-1]] = value
            else:
                config_dict[key] = value

    return _create_config_from_dict(config_dict)


def find_config_file() -> Optional[Path]:
    """Find the configuration file in standard locations.

    Searches in order:
    1. ./liegraph.toml
    2. ~/.config/liegraph/config.toml

    Returns:
        Path to the config file if found, None otherwise.
    """
    search_paths = [
        Path.cwd() / "liegraph.toml",
        Path.home() / ".config" / "liegraph" / "config.toml",
    ]

    for path in search_paths:
        if path.exists():
            return path

    return None
