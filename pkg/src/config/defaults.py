"""
Default configuration for liegraph, one entry per TOML section.

Every value here can be overridden from ``liegraph.toml`` or on the command line.
"""

from __future__ import annotations

from typing import Any, Dict

from src.graphs.canonical import DEFAULT_MAX_ORDER
from src.linalg.rank import DEFAULT_PRIME

CONFIG: Dict[str, Dict[str, Any]] = {
    # ==========================================================================
    # Engine
    # ==========================================================================

    "engine": {
        # "blockwise" sums ranks over (support, weight) blocks; "monolithic"
        # ranks the full differential and is only useful as a cross-check
        "strategy": "blockwise",
        # >1 ranks blocks in a process pool
        "workers": 1,
    },

    # ==========================================================================
    # Essential-table cache
    # ==========================================================================

    "cache": {
        "enabled": True,
        # $LIEGRAPH_CACHE_DIR wins; None falls back to ~/.cache/liegraph
        "directory": None,
    },

    # ==========================================================================
    # Canonical codes (exhaustive within colour classes, so keep this small)
    # ==========================================================================

    "canonical": {
        "max_order": DEFAULT_MAX_ORDER,
    },

    # ==========================================================================
    # Rank kernel
    # ==========================================================================

    "linalg": {
        # "modular" is a probabilistic lower bound; opt in explicitly
        "method": "exact",
        "prime": DEFAULT_PRIME,
    },

    # ==========================================================================
    # Output
    # ==========================================================================

    "output": {
        "format": "table",
        "colors": True,
        "verbose": False,
    },
}

SECTIONS = tuple(CONFIG)


def get_config() -> Dict[str, Dict[str, Any]]:
    """Get a copy of the default configuration."""
    return {section: dict(values) for section, values in CONFIG.items()}


def get(key: str, default: Any = None) -> Any:
    """Get a default value by dotted key, e.g. ``"engine.strategy"``."""
    section, _, name = key.partition(".")
    return CONFIG.get(section, {}).get(name, default)
