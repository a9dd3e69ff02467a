"""Configuration models for liegraph using standard dataclasses."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from src.graphs.canonical import DEFAULT_MAX_ORDER
from src.linalg.rank import DEFAULT_PRIME


class Strategy(str, Enum):
    """How Betti numbers are assembled from ranks."""
    BLOCKWISE = "blockwise"
    MONOLITHIC = "monolithic"


class LinalgMethod(str, Enum):
    """Rank kernel."""
    EXACT = "exact"
    MODULAR = "modular"


class OutputFormat(str, Enum):
    """Result format on stdout."""
    TABLE = "table"
    JSON = "json"


@dataclass
class EngineConfig:
    """Configuration for the cohomology engine."""
    strategy: Strategy = Strategy.BLOCKWISE
    workers: int = 1


@dataclass
class CacheConfig:
    """Configuration for the essential-table cache."""
    enabled: bool = True
    directory: Optional[str] = None  # None: $LIEGRAPH_CACHE_DIR or ~/.cache/liegraph


@dataclass
class CanonicalConfig:
    """Configuration for canonical graph codes."""
    max_order: int = DEFAULT_MAX_ORDER


@dataclass
class LinalgConfig:
    """Configuration for exact rank."""
    method: LinalgMethod = LinalgMethod.EXACT
    prime: int = DEFAULT_PRIME


@dataclass
class OutputConfig:
    """Configuration for output formatting."""
    format: OutputFormat = OutputFormat.TABLE
    colors: bool = True
    verbose: bool = False


@dataclass
class LieGraphConfig:
    """Main configuration for liegraph."""

    engine: EngineConfig = field(default_factory=EngineConfig)
    cache: CacheConfig = field(default_factory=CacheConfig)
    canonical: CanonicalConfig = field(default_factory=CanonicalConfig)
    linalg: LinalgConfig = field(default_factory=LinalgConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def to_dict(self) -> Dict[str, Any]:
        """Plain nested dict, enums as their values."""
        def plain(value: Any) -> Any:
            if isinstance(value, Enum):
                return value.value
            if isinstance(value, dict):
                return {k: plain(v) for k, v in value.items()}
            return value

        return plain(asdict(self))
