"""CLI commands for configuration management."""

import os
from typing import Any, Callable, Dict

import typer

from simpfib.messages import config_cmd as msg

EXAMPLE_CONFIG = """# simpfib configuration file

[group]
# Tables up to this order are checked for associativity exhaustively
associativity_exhaustive_limit = 64
# Random triples checked above that order
associativity_samples = 10000
max_order = 720
max_symmetric_degree = 5

[verify]
max_dim = 3
seed = 0
# Random loop words per degree for the action checks
samples = 1000
max_word_length = 8
output_format = "text"  # text or json
# jobs = 4  # Worker threads; all cores when unset. SIMPFIB_JOBS overrides it.

[homology]
max_dim = 3
"""


def register(app: typer.Typer) -> Dict[str, Callable[..., Any]]:
    """Register configuration commands.

    Args:
        app: Typer application instance.

    Returns:
        Dictionary mapping command names to their functions.
    """

    @app.command()
    def init_config(
        path: str = typer.Option(".simpfib.toml", "--path", "-p", help="Config file path"),
    ):
        """Generate example configuration file."""
        if os.path.exists(path):
            overwrite = typer.confirm(msg.FILE_EXISTS.format(path))
            if not overwrite:
                typer.echo(msg.CANCELLED)
                raise typer.Exit(code=0)

        with open(path, "w", encoding="utf-8") as f:
            f.write(EXAMPLE_CONFIG)

        typer.secho(msg.FILE_CREATED.format(path), fg=typer.colors.GREEN)

    return {"init_config": init_config}
