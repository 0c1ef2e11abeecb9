"""Entry point for python -m simpfib."""

from simpfib.cli import app

app(prog_name="simpfib")
