"""CLI commands for the verification suites."""

from pathlib import Path
from typing import Any, Callable, Dict, Optional

import typer
from typer_di import Depends

from simpfib.config import Config, VerifyConfig
from simpfib.core.bar import ClassifyingSpace
from simpfib.core.enum import OutputFormat, TwistKind
from simpfib.core.errors import SimpfibError
from simpfib.core.fibration import Fibration, choose_section
from simpfib.core.loop import LoopGroup, canonical_twist_loop
from simpfib.core.parallel import resolve_jobs
from simpfib.core.simplicial import ConstantSimplicialGroup
from simpfib.core.specs import load_section, load_ses, parse_group_shorthand
from simpfib.messages import spec as spec_msg
from simpfib.messages import verify as msg
from simpfib.utils.dependencies import get_config
from simpfib.utils.spinner import working
from simpfib.utils.typer import abort, exit_with_report
from simpfib.validators.groups import validate_ses
from simpfib.validators.loop import validate_canonical_morphism, validate_loop_group
from simpfib.validators.simplicial import check_simplicial_identities
from simpfib.validators.theorem import verify_theorem
from simpfib.validators.twisting import validate_twisting


def _settings(
    defaults: VerifyConfig,
    max_dim: Optional[int],
    seed: Optional[int],
    samples: Optional[int],
    output_format: Optional[OutputFormat],
    jobs: Optional[int],
) -> VerifyConfig:
    """Command-line flags over the configured defaults."""
    settings = VerifyConfig(
        max_dim=defaults.max_dim if max_dim is None else max_dim,
        seed=defaults.seed if seed is None else seed,
        samples=defaults.samples if samples is None else samples,
        output_format=defaults.output_format if output_format is None else output_format.value,
        jobs=resolve_jobs(defaults.jobs if jobs is None else jobs),
        max_word_length=defaults.max_word_length,
    )
    settings._validate()
    return settings


def register(app: typer.Typer) -> Dict[str, Callable[..., Any]]:
    """Register verification commands.

    Args:
        app: Typer application instance.

    Returns:
        Dictionary mapping command names to their functions.
    """

    @app.command()
    def verify_ses(
        ses: Path = typer.Option(..., "--ses", help="SES spec file (JSON)"),
        section: Optional[Path] = typer.Option(
            None, "--section", help="Explicit section table, one entry per element of L"
        ),
        max_dim: Optional[int] = typer.Option(None, "--max-dim", help="Highest degree checked"),
        seed: Optional[int] = typer.Option(None, "--seed", help="Seed for sampled checks"),
        samples: Optional[int] = typer.Option(
            None, "--samples", help="Random words per degree for the loop action"
        ),
        output_format: Optional[OutputFormat] = typer.Option(
            None, "--format", case_sensitive=False, help="Report format"
        ),
        jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker threads"),
        out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON report here"),
        config: Config = Depends(get_config),
    ):
        """Verify that BG is the twisted product BK x_τ BL for an SES."""
        settings = _settings(config.verify, max_dim, seed, samples, output_format, jobs)
        if not ses.is_file():
            abort(spec_msg.FILE_NOT_FOUND.format(ses))
        try:
            spec = load_ses(ses, settings.max_dim, config.group.limits())
        except SimpfibError as exc:
            abort(spec_msg.INVALID_SPEC.format(exc))
        try:
            table = load_section(section) if section is not None else spec.section
            fibration = Fibration(spec.ses, choose_section(spec.ses, table))
        except SimpfibError as exc:
            abort(spec_msg.INVALID_SECTION.format(exc))

        text_mode = settings.output_format == OutputFormat.TEXT.value
        with working(msg.RUNNING_SUITE.format(spec.name, settings.max_dim), enabled=text_mode):
            report = validate_ses(spec.ses, settings.max_dim, jobs=settings.jobs)
            report.suite = "verify-ses"
            report.merge(
                verify_theorem(
                    fibration,
                    settings.max_dim,
                    seed=settings.seed,
                    samples=settings.samples,
                    max_word_length=settings.max_word_length,
                    jobs=settings.jobs,
                )
            )
        report.config.update(
            {"ses": spec.name, "section": list(fibration.section.tables[0]), "jobs": settings.jobs}
        )
        exit_with_report(report, settings.output_format, out)

    @app.command()
    def verify_twist(
        group: str = typer.Option(..., "--group", help="Group, e.g. cyclic:4 or symmetric:3"),
        which: TwistKind = typer.Option(
            TwistKind.CANONICAL, "--which", case_sensitive=False, help="canonical (τ_G) or loop (τ^BG)"
        ),
        max_dim: Optional[int] = typer.Option(None, "--max-dim", help="Highest degree checked"),
        seed: Optional[int] = typer.Option(None, "--seed", help="Seed for sampled checks"),
        output_format: Optional[OutputFormat] = typer.Option(
            None, "--format", case_sensitive=False, help="Report format"
        ),
        jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker threads"),
        out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON report here"),
        config: Config = Depends(get_config),
    ):
        """Validate the twisting axioms of τ_G on BG, or of τ^BG with ΩBG → G."""
        settings = _settings(config.verify, max_dim, seed, None, output_format, jobs)
        try:
            finite = parse_group_shorthand(group, config.group.limits())
            space = ClassifyingSpace(ConstantSimplicialGroup(finite, settings.max_dim), settings.max_dim)
        except SimpfibError as exc:
            abort(spec_msg.INVALID_SPEC.format(exc))

        text_mode = settings.output_format == OutputFormat.TEXT.value
        with working(msg.RUNNING_SUITE.format(space.name, settings.max_dim), enabled=text_mode):
            report = check_simplicial_identities(space, settings.max_dim, jobs=settings.jobs)
            if which == TwistKind.CANONICAL:
                report.merge(validate_twisting(space.canonical_twist(), settings.max_dim, jobs=settings.jobs))
            else:
                loop = LoopGroup(space)
                report.merge(
                    validate_twisting(canonical_twist_loop(loop), settings.max_dim, jobs=settings.jobs)
                )
                report.merge(validate_loop_group(loop, loop.cutoff, jobs=settings.jobs))
                report.merge(
                    validate_canonical_morphism(
                        loop, loop.cutoff, seed=settings.seed, jobs=settings.jobs
                    )
                )
        report.suite = "verify-twist"
        report.config.update({"group": finite.name, "which": which.value, "jobs": settings.jobs})
        exit_with_report(report, settings.output_format, out)

    return {"verify_ses": verify_ses, "verify_twist": verify_twist}
