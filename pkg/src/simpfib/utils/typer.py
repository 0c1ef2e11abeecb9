"""Typer utilities for better CLI output."""

from pathlib import Path
from typing import Dict, List, NoReturn, Optional

import typer

from simpfib.core.enum import OutputFormat
from simpfib.dtos.report import CheckRecord, Report
from simpfib.messages import verify as msg


def add_typer_block_message(
    header: str,
    subheader: str,
    messages: list[str],
    indent_block: bool = True,
    use_separator: bool = True,
):
    """Add a block message to the output."""
    indent = " " * 4
    all_messages = [header, subheader]
    all_messages.extend([indent + message for message in messages] if indent_block else messages)
    extended_messages = []
    for message in all_messages:
        extended_messages.extend(message.split("\n"))
    longest_message = max(extended_messages, key=len, default="")

    separator = "=" * len(longest_message)

    # center header
    diff = len(separator) - len(header)
    if diff % 2 != 0:
        separator += "="
        diff = len(separator) - len(header)
    space_to_add = " " * (diff // 2)
    centered_header = space_to_add + header + space_to_add

    typer.echo()
    if len(header) > 40 or not use_separator:
        typer.secho(header, fg=typer.colors.GREEN, bold=True)
    else:
        typer.secho(separator, fg=typer.colors.GREEN)
        typer.secho(centered_header, fg=typer.colors.GREEN, bold=True)
        typer.secho(separator, fg=typer.colors.GREEN)
    if subheader:
        typer.echo(f"\n{subheader}")
    for message in messages:
        output = message
        if indent_block:
            output = indent + output
        typer.echo(output)


def _group_by_name(records: List[CheckRecord]) -> Dict[str, List[CheckRecord]]:
    grouped: Dict[str, List[CheckRecord]] = {}
    for record in records:
        grouped.setdefault(record.name, []).append(record)
    return grouped


def echo_report(report: Report) -> None:
    """Print a report grouped by check name: one line per record, failures in red."""
    config = ", ".join(f"{key}={value}" for key, value in report.config.items())
    add_typer_block_message(msg.SUITE_HEADER.format(report.suite), config, [], use_separator=True)
    for name, records in _group_by_name(report.records).items():
        typer.secho(f"\n{name}", bold=True)
        for record in records:
            if record.passed:
                typer.secho(
                    "  " + msg.RECORD_PASSED.format(name, record.dimension, record.detail),
                    fg=typer.colors.GREEN,
                )
            else:
                typer.secho(
                    "  " + msg.RECORD_FAILED.format(name, record.dimension, record.detail),
                    fg=typer.colors.RED,
                )
                typer.secho("  " + msg.COUNTEREXAMPLE.format(record.counterexample), fg=typer.colors.RED)
    for note in report.notes:
        typer.secho(f"\n{note}", fg=typer.colors.YELLOW)
    failures = report.failures()
    typer.echo()
    typer.echo(msg.SUMMARY.format(len(report.records), len(failures)))
    if failures:
        typer.secho(msg.SOME_FAILED.format(len(failures)), fg=typer.colors.RED, bold=True)
    else:
        typer.secho(msg.ALL_PASSED, fg=typer.colors.GREEN, bold=True)


def exit_with_report(report: Report, output_format: str, out: Optional[Path] = None) -> NoReturn:
    """Print or save ``report``, then exit 0 if every check passed and 1 otherwise."""
    if out is not None:
        out.write_text(report.to_json() + "\n", encoding="utf-8")
        typer.secho(msg.REPORT_WRITTEN.format(out), fg=typer.colors.BLUE, err=True)
    if output_format == OutputFormat.JSON.value:
        typer.echo(report.to_json())
    else:
        echo_report(report)
    raise typer.Exit(code=0 if report.passed else 1)


def abort(message: str, code: int = 2) -> NoReturn:
    typer.secho(message, fg=typer.colors.RED)
    raise typer.Exit(code=code)
