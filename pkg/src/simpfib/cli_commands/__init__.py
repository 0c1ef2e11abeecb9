"""CLI commands package for simpfib.

This module owns the main Typer app and wires all sub-command modules in
``simpfib.cli_commands.*``. The public entrypoint ``simpfib.cli`` re-exports
this ``app``.
"""

import logging
from typing import Any, Callable, Dict

import typer
from typer_di import TyperDI

from simpfib import __version__
from simpfib.cli_commands import config_cmd, demo, homology, verify
from simpfib.utils.aliases import register_command_aliases

app = TyperDI(help="simpfib - check BG ≅ BK x_τ BL on finite group extensions")


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"simpfib {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug output"),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show the version"
    ),
):
    """simpfib - check BG ≅ BK x_τ BL on finite group extensions."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG)


# Register all commands
namespace: Dict[str, Callable[..., Any]] = {}
namespace.update(verify.register(app))
namespace.update(homology.register(app))
namespace.update(demo.register(app))
namespace.update(config_cmd.register(app))


register_command_aliases(app, namespace)
