"""Command aliases registry."""

import typer

ALIAS_MAP = {
    "verify_ses": ["vs"],
    "verify_twist": ["vt"],
    "homology": ["hom"],
    "init_config": ["init"],
}


def register_command_aliases(app: typer.Typer, namespace: dict) -> None:
    """Register short aliases for the commands.

    The caller passes the mapping returned by the ``register`` functions, so
    aliases resolve by command function name.
    """

    for func_name, aliases in ALIAS_MAP.items():
        func = namespace.get(func_name)
        if func is None:
            continue
        for alias in aliases:
            app.command(name=alias, hidden=True)(func)
