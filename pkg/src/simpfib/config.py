"""Configuration management for simpfib."""

import copy
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import toml
import typer

from simpfib.core.enum import OutputFormat
from simpfib.core.groups import GroupLimits
from simpfib.messages import config as msg


@dataclass
class GroupConfig:
    """Limits for groups read from spec files."""

    associativity_exhaustive_limit: int = 64
    associativity_samples: int = 10_000
    max_order: int = 720
    max_symmetric_degree: int = 5

    def limits(self) -> GroupLimits:
        return GroupLimits(
            exhaustive_limit=self.associativity_exhaustive_limit,
            samples=self.associativity_samples,
            max_order=self.max_order,
            max_symmetric_degree=self.max_symmetric_degree,
        )

    def _validate(self):
        """Validate the configuration."""
        for name in ("associativity_samples", "max_order", "max_symmetric_degree"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                typer.secho(msg.INVALID_POSITIVE.format(name, value), fg=typer.colors.RED)
                raise typer.Exit(code=2)
        limit = self.associativity_exhaustive_limit
        if not isinstance(limit, int) or limit < 0:
            typer.secho(
                msg.INVALID_NON_NEGATIVE.format("associativity_exhaustive_limit", limit), fg=typer.colors.RED
            )
            raise typer.Exit(code=2)


@dataclass
class VerifyConfig:
    """Verification suite defaults."""

    max_dim: int = 3
    seed: int = 0
    samples: int = 1000
    output_format: str = OutputFormat.TEXT.value
    jobs: Optional[int] = None  # None uses every core
    max_word_length: int = 8

    def _validate(self):
        """Validate the configuration."""
        if not isinstance(self.max_dim, int) or self.max_dim < 1:
            typer.secho(msg.INVALID_MAX_DIM.format("verify", self.max_dim), fg=typer.colors.RED)
            raise typer.Exit(code=2)
        if self.output_format not in {fmt.value for fmt in OutputFormat}:
            typer.secho(msg.INVALID_OUTPUT_FORMAT.format(self.output_format), fg=typer.colors.RED)
            raise typer.Exit(code=2)
        for name in ("samples", "max_word_length"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                typer.secho(msg.INVALID_POSITIVE.format(name, value), fg=typer.colors.RED)
                raise typer.Exit(code=2)
        if self.jobs is not None and (not isinstance(self.jobs, int) or self.jobs < 1):
            typer.secho(msg.INVALID_POSITIVE.format("jobs", self.jobs), fg=typer.colors.RED)
            raise typer.Exit(code=2)


@dataclass
class HomologyConfig:
    """Homology computation defaults."""

    max_dim: int = 3

    def _validate(self):
        """Validate the configuration."""
        if not isinstance(self.max_dim, int) or self.max_dim < 1:
            typer.secho(msg.INVALID_MAX_DIM.format("homology", self.max_dim), fg=typer.colors.RED)
            raise typer.Exit(code=2)


@dataclass
class Config:
    """Main configuration container."""

    group: GroupConfig = field(default_factory=GroupConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    homology: HomologyConfig = field(default_factory=HomologyConfig)


DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "group": {
        "associativity_exhaustive_limit": 64,
        "associativity_samples": 10_000,
        "max_order": 720,
        "max_symmetric_degree": 5,
    },
    "verify": {
        "max_dim": 3,
        "seed": 0,
        "samples": 1000,
        "output_format": "text",
        "max_word_length": 8,
    },
    "homology": {
        "max_dim": 3,
    },
}


def find_config_file() -> Optional[Path]:
    """Search for config file in current directory and parent directories."""
    current = Path.cwd()

    config_names = [".simpfib.toml", "simpfib.toml"]

    for parent in [current] + list(current.parents):
        for name in config_names:
            config_path = parent / name
            if config_path.exists():
                return config_path

    return None


def load_config(config_path: Optional[Path] = None) -> Config:
    """Load configuration from a TOML file or use defaults.

    User sections are merged key by key over ``DEFAULT_CONFIG``; unknown
    sections are ignored.
    """
    path: Optional[Path]
    if config_path:
        path = Path(config_path)
    else:
        path = find_config_file()

    user_config_data: Optional[Dict[str, Any]] = None
    if path is not None and path.exists():
        try:
            user_config_data = toml.load(path)
        except (toml.TomlDecodeError, OSError) as e:
            typer.secho(msg.LOAD_ERROR.format(e), fg=typer.colors.YELLOW, err=True)

    config_data = copy.deepcopy(DEFAULT_CONFIG)
    if user_config_data:
        for section, values in user_config_data.items():
            if section in config_data and isinstance(values, dict):
                config_data[section].update(values)

    known = {
        "group": GroupConfig.__dataclass_fields__,
        "verify": VerifyConfig.__dataclass_fields__,
        "homology": HomologyConfig.__dataclass_fields__,
    }
    for section, fields in known.items():
        config_data[section] = {k: v for k, v in config_data[section].items() if k in fields}

    group_config = GroupConfig(**config_data["group"])
    group_config._validate()
    verify_config = VerifyConfig(**config_data["verify"])
    verify_config._validate()
    homology_config = HomologyConfig(**config_data["homology"])
    homology_config._validate()

    return Config(group=group_config, verify=verify_config, homology=homology_config)
