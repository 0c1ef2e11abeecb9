"""Spinner helper for long-running suites."""

import contextlib
import sys
from typing import Iterator

from yaspin import yaspin


@contextlib.contextmanager
def working(text: str, enabled: bool = True) -> Iterator[None]:
    """Show a yaspin spinner while the block runs, only on an interactive terminal."""
    if not enabled or not sys.stdout.isatty():
        yield
        return
    with yaspin(text=text, color="green"):
        yield
