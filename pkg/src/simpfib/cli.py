"""Command-line interface for simpfib."""

from simpfib.cli_commands import app

if __name__ == "__main__":
    app()
