"""Tests for loading .simpfib.toml."""

import pytest
import toml
import typer

from simpfib.config import Config, find_config_file, load_config
from simpfib.core.groups import GroupLimits


class TestLoadConfig:
    """Test configuration discovery, merging and validation."""

    @pytest.fixture(autouse=True)
    def isolated_cwd(self, tmp_path, monkeypatch):
        """Run every test from an empty directory."""
        monkeypatch.chdir(tmp_path)
        return tmp_path

    def write(self, path, data):
        with open(path, "w") as f:
            toml.dump(data, f)
        return path

    def test_defaults_without_a_file(self):
        """Without a file the built-in defaults are used."""
        config = load_config()
        assert isinstance(config, Config)
        assert config.verify.max_dim == 3
        assert config.verify.samples == 1000
        assert config.verify.jobs is None
        assert config.homology.max_dim == 3
        assert config.group.limits() == GroupLimits(
            exhaustive_limit=64, samples=10_000, max_order=720, max_symmetric_degree=5
        )

    def test_user_values_override_defaults(self, tmp_path):
        """Values from the file override the defaults key by key."""
        path = self.write(tmp_path / "custom.toml", {"verify": {"max_dim": 5, "seed": 9}})
        config = load_config(path)
        assert config.verify.max_dim == 5
        assert config.verify.seed == 9
        assert config.verify.samples == 1000

    def test_unknown_keys_and_sections_are_ignored(self, tmp_path):
        """Unknown keys and sections are dropped silently."""
        path = self.write(
            tmp_path / "custom.toml",
            {"verify": {"colour": "red"}, "extra": {"anything": 1}, "group": {"max_order": 24}},
        )
        config = load_config(path)
        assert config.group.max_order == 24
        assert not hasattr(config.verify, "colour")

    def test_discovers_file_in_parent_directory(self, tmp_path, monkeypatch):
        """.simpfib.toml is found in a parent directory."""
        self.write(tmp_path / ".simpfib.toml", {"homology": {"max_dim": 4}})
        nested = tmp_path / "a" / "b"
        nested.mkdir(parents=True)
        monkeypatch.chdir(nested)

        assert find_config_file() == tmp_path / ".simpfib.toml"
        assert load_config().homology.max_dim == 4

    @pytest.mark.parametrize(
        "data",
        [
            {"verify": {"max_dim": 0}},
            {"verify": {"output_format": "xml"}},
            {"verify": {"jobs": -1}},
            {"verify": {"samples": 0}},
            {"homology": {"max_dim": -2}},
            {"group": {"max_order": 0}},
            {"group": {"associativity_exhaustive_limit": -1}},
            {"group": {"associativity_exhaustive_limit": "all"}},
        ],
    )
    def test_invalid_values_exit_with_code_two(self, tmp_path, data):
        """Out-of-range values exit with code 2."""
        path = self.write(tmp_path / "bad.toml", data)
        with pytest.raises(typer.Exit) as excinfo:
            load_config(path)
        assert excinfo.value.exit_code == 2

    def test_zero_exhaustive_limit_is_accepted(self, tmp_path):
        """A limit of 0 samples associativity for every group."""
        path = self.write(tmp_path / "zero.toml", {"group": {"associativity_exhaustive_limit": 0}})
        config = load_config(path)
        assert config.group.associativity_exhaustive_limit == 0
        assert config.group.limits().exhaustive_limit == 0

    def test_unreadable_file_falls_back_to_defaults(self, tmp_path, capsys):
        """A malformed file warns on stderr and falls back to the defaults."""
        path = tmp_path / "broken.toml"
        path.write_text("[verify\nmax_dim = ", encoding="utf-8")
        config = load_config(path)
        assert config.verify.max_dim == 3
        assert "Error loading config file" in capsys.readouterr().err
