"""CLI command for integer homology of BG and of the twisted product."""

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import typer
from typer_di import Depends

from simpfib.config import Config
from simpfib.core.bar import ClassifyingSpace
from simpfib.core.enum import OutputFormat, SpaceKind
from simpfib.core.errors import SimpfibError, SimplicialIdentityError
from simpfib.core.fibration import Fibration, choose_section
from simpfib.core.homology import HomologyGroup, homology_of
from simpfib.core.parallel import resolve_jobs
from simpfib.core.simplicial import ConstantSimplicialGroup, SimplicialSet
from simpfib.core.specs import load_ses, parse_group_shorthand
from simpfib.dtos.report import REPORT_SCHEMA_VERSION
from simpfib.messages import homology as msg
from simpfib.messages import spec as spec_msg
from simpfib.messages import verify as verify_msg
from simpfib.utils.dependencies import get_config
from simpfib.utils.spinner import working
from simpfib.utils.typer import abort, add_typer_block_message


def _space_from_args(
    group: Optional[str], ses: Optional[Path], space: SpaceKind, max_dim: int, config: Config
) -> SimplicialSet:
    if group is None and ses is None:
        abort(verify_msg.NEEDS_SOURCE)
    if group is not None and ses is not None:
        abort(verify_msg.BOTH_SOURCES)
    if group is not None and space == SpaceKind.TWISTED:
        abort(msg.TWISTED_NEEDS_SES)

    limits = config.group.limits()
    if group is not None:
        finite = parse_group_shorthand(group, limits)
        return ClassifyingSpace(ConstantSimplicialGroup(finite, max_dim), max_dim)

    assert ses is not None
    if not ses.is_file():
        abort(spec_msg.FILE_NOT_FOUND.format(ses))
    spec = load_ses(ses, max_dim, limits)
    fibration = Fibration(spec.ses, choose_section(spec.ses, spec.section))
    if space == SpaceKind.TWISTED:
        return fibration.twisted_codomain(max_dim)
    return fibration.total_space(max_dim)


def homology_payload(space: SimplicialSet, max_dim: int, groups: List[HomologyGroup]) -> Dict[str, Any]:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "space": space.name,
        "cutoff": max_dim,
        "groups": [group.to_dict() for group in groups],
        "text": [str(group) for group in groups],
    }


def register(app: typer.Typer) -> Dict[str, Callable[..., Any]]:
    """Register the homology command.

    Args:
        app: Typer application instance.

    Returns:
        Dictionary mapping command names to their functions.
    """

    @app.command()
    def homology(
        group: Optional[str] = typer.Option(
            None, "--group", help="Constant group for BG, e.g. cyclic:4 or klein"
        ),
        ses: Optional[Path] = typer.Option(None, "--ses", help="SES spec file (JSON)"),
        space: SpaceKind = typer.Option(
            SpaceKind.BAR, "--space", case_sensitive=False, help="bar (BG) or twisted (BK x_τ BL)"
        ),
        max_dim: Optional[int] = typer.Option(
            None, "--max-dim", help="Chains up to this degree; H_0..H_{max-dim - 1} are reported"
        ),
        output_format: OutputFormat = typer.Option(
            OutputFormat.TEXT, "--format", case_sensitive=False, help="Output format"
        ),
        jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker threads"),
        out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON result here"),
        config: Config = Depends(get_config),
    ):
        """Compute integer homology H_0..H_{N-1} of BG or of BK x_τ BL."""
        cutoff = config.homology.max_dim if max_dim is None else max_dim
        workers = resolve_jobs(config.verify.jobs if jobs is None else jobs)
        if cutoff < 1:
            abort(msg.INVALID_MAX_DIM.format(cutoff))
        try:
            target = _space_from_args(group, ses, space, cutoff, config)
        except SimpfibError as exc:
            abort(spec_msg.INVALID_SPEC.format(exc))

        text_mode = output_format == OutputFormat.TEXT
        try:
            with working(msg.COMPUTING.format(target.name, cutoff), enabled=text_mode):
                groups = homology_of(target, cutoff, jobs=workers)
        except SimplicialIdentityError as exc:
            abort(str(exc), code=1)

        payload = json.dumps(homology_payload(target, cutoff, groups), indent=2)
        if out is not None:
            out.write_text(payload + "\n", encoding="utf-8")
            typer.secho(verify_msg.REPORT_WRITTEN.format(out), fg=typer.colors.BLUE, err=True)
        if not text_mode:
            typer.echo(payload)
            return
        add_typer_block_message(
            msg.HEADER.format(target.name, cutoff),
            "",
            [msg.GROUP_LINE.format(g.dimension, g) for g in groups],
        )

    return {"homology": homology}
