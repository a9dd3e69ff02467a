"""Shared fixtures."""

from __future__ import annotations

import pytest

from src.cohomology.cache import TableCache
from src.cohomology.engine import CohomologyEngine
from src.graphs.graph import named


@pytest.fixture
def engine() -> CohomologyEngine:
    """Engine without a persistent cache."""
    return CohomologyEngine(cache=TableCache(enabled=False))


@pytest.fixture
def cached_engine(tmp_path) -> CohomologyEngine:
    return CohomologyEngine(cache=TableCache(tmp_path))


@pytest.fixture(autouse=True)
def isolated_cache_dir(tmp_path, monkeypatch):
    """Keep every test away from the user's cache and config files."""
    monkeypatch.setenv("LIEGRAPH_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def k2():
    return named("complete", 2)


@pytest.fixture
def k3():
    return named("complete", 3)
