"""Tests for configuration loading."""

import pytest

from src.config.defaults import SECTIONS, get, get_config
from src.config.loader import find_config_file, load_config, load_config_from_file
from src.config.models import LieGraphConfig, LinalgMethod, OutputFormat, Strategy
from src.errors import ConfigError
from src.linalg.rank import DEFAULT_PRIME


def test_defaults():
    config = load_config()
    assert config.engine.strategy == Strategy.BLOCKWISE
    assert config.engine.workers == 1
    assert config.cache.enabled
    assert config.canonical.max_order == 9
    assert config.linalg.method == LinalgMethod.EXACT
    assert config.linalg.prime == DEFAULT_PRIME
    assert config.output.format == OutputFormat.TABLE


def test_defaults_module():
    assert SECTIONS == ("engine", "cache", "canonical", "linalg", "output")
    assert get("engine.strategy") == "blockwise"
    assert get("engine.missing", 3) == 3
    copy = get_config()
    copy["engine"]["workers"] = 8
    assert get("engine.workers") == 1


def test_loaded_defaults_come_from_defaults_module():
    assert load_config().to_dict() == get_config()
    assert LieGraphConfig().to_dict() == get_config()


def test_partial_section_keeps_other_defaults(tmp_path):
    path = tmp_path / "liegraph.toml"
    path.write_text("[output]\nformat = \"json\"\n")
    config = load_config_from_file(path)
    assert config.output.format == OutputFormat.JSON
    assert config.output.colors == get("output.colors")
    assert config.linalg.prime == get("linalg.prime")


def test_dotted_overrides():
    config = load_config(overrides={"engine.workers": 4, "output.format": "json", "cache.enabled": None})
    assert config.engine.workers == 4
    assert config.output.format == OutputFormat.JSON
    assert config.cache.enabled


def test_toml_file(tmp_path):
    path = tmp_path / "liegraph.toml"
    path.write_text(
        '[engine]\nstrategy = "monolithic"\n\n[linalg]\nmethod = "modular"\n\n[cache]\nenabled = false\n'
    )
    config = load_config_from_file(path)
    assert config.engine.strategy == Strategy.MONOLITHIC
    assert config.linalg.method == LinalgMethod.MODULAR
    assert not config.cache.enabled


def test_overrides_win_over_file(tmp_path):
    path = tmp_path / "liegraph.toml"
    path.write_text("[engine]\nworkers = 2\n")
    assert load_config(path, {"engine.workers": 3}).engine.workers == 3


def test_find_config_file(tmp_path):
    assert find_config_file() is None or find_config_file().name == "config.toml"
    (tmp_path / "liegraph.toml").write_text("")
    assert find_config_file().resolve() == (tmp_path / "liegraph.toml").resolve()


@pytest.mark.parametrize(
    "overrides",
    [
        {"engine.strategy": "sparse"},
        {"engine.workers": 0},
        {"engine.workers": "two"},
        {"linalg.prime": 7},
        {"output.format": "yaml"},
        {"canonical.max_order": True},
        {"plugins.enabled": True},
        {"engine": 3},
    ],
)
def test_invalid_values(overrides):
    with pytest.raises(ConfigError):
        load_config(overrides=overrides)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config_from_file(tmp_path / "absent.toml")


def test_invalid_toml(tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text("[engine\n")
    with pytest.raises(ConfigError):
        load_config(path)


def test_to_dict_uses_plain_values():
    data = LieGraphConfig().to_dict()
    assert data["engine"] == {"strategy": "blockwise", "workers": 1}
    assert data["linalg"]["method"] == "exact"
    assert data["cache"]["directory"] is None
