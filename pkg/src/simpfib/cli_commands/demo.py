"""CLI command printing worked Ψ and Φ computations on the bundled examples."""

from typing import Any, Callable, Dict, List, Optional, Tuple

import typer

from simpfib.core.bar import BarSimplex
from simpfib.core.errors import SimpfibError
from simpfib.core.fibration import Fibration, choose_section
from simpfib.core.specs import SesSpec, bundled_examples, load_bundled
from simpfib.messages import demo as msg
from simpfib.messages import spec as spec_msg
from simpfib.utils.typer import abort, add_typer_block_message


def resolve_example(name: str, available: List[str]) -> str:
    """Exact name, else the single bundled example starting with ``name``."""
    if name in available:
        return name
    matches = [candidate for candidate in available if candidate.startswith(name)]
    if not matches:
        abort(spec_msg.UNKNOWN_EXAMPLE.format(name, ", ".join(available)))
    if len(matches) > 1:
        abort(spec_msg.AMBIGUOUS_EXAMPLE.format(name, ", ".join(matches)))
    return matches[0]


def demo_simplex(spec: SesSpec, fibration: Fibration, dim: int) -> BarSimplex:
    """The example's own simplex when it has the right degree, else the largest ids."""
    if spec.demo_simplex is not None and len(spec.demo_simplex) == dim:
        return spec.demo_simplex
    return tuple(fibration.G.level(dim - 1 - j).order - 1 for j in range(dim))


def demo_lines(spec: SesSpec, fibration: Fibration, simplex: BarSimplex) -> List[str]:
    """The walkthrough for one simplex of BG, one string per output line."""
    G, L = fibration.G, fibration.L
    n = len(simplex)
    total = fibration.total_space(n)
    base = fibration.base_space(n)
    fibre = fibration.fibre_space(n)

    lines = [msg.SEQUENCE.format(spec.ses.describe())]
    if spec.description:
        lines.append(spec.description)

    lines.append("")
    lines.append(msg.SECTION_HEADER)
    for l in L.level(0).elements():
        lines.append(msg.SECTION_LINE.format(L.serialize(0, l), G.serialize(0, fibration.sigma(0, l))))
    lines.append(
        msg.MULTIPLICATIVE if fibration.is_multiplicative() else msg.NOT_MULTIPLICATIVE
    )

    lines.append("")
    lines.append(msg.SIMPLEX.format(total.serialize(n, simplex)))
    pairs: List[Tuple[int, int]] = []
    for j, g in enumerate(simplex):
        level = n - 1 - j
        pair = fibration.alpha(level, g)
        pairs.append(pair)
        lines.append(
            msg.ALPHA_LINE.format(
                level,
                G.serialize(level, g),
                fibration.K.serialize(level, pair.k),
                L.serialize(level, pair.l),
            )
        )

    ls = tuple(pair[1] for pair in pairs)
    lines.append("")
    for count in range(n + 1):
        level = n - count
        product = fibration.leading_product(ls, 0, count)
        lines.append(msg.LEADING_LINE.format(count, level, L.serialize(level, product)))

    image = fibration.psi(simplex)
    codomain = fibration.twisted_codomain(n)
    lines.append("")
    lines.append(msg.PSI.format(total.serialize(n, simplex), codomain.serialize(n, image)))
    lines.append(msg.PSI_INVERSE.format(total.serialize(n, fibration.psi_inverse(image))))
    lines.append(msg.FIBRE_BASE.format(fibre.serialize(n, image.fibre), base.serialize(n, image.base)))

    loop = fibration.loop_group(n)
    lines.append(msg.LOOP_TWIST.format(base.serialize(n, ls), loop.serialize(n - 1, loop.generator(n - 1, ls))))

    if fibration.is_multiplicative():
        phi_image = fibration.phi(simplex)
        semidirect = fibration.semidirect_codomain(n)
        lines.append("")
        lines.append(msg.PHI.format(total.serialize(n, simplex), semidirect.serialize(n, phi_image)))
        lines.append(msg.PHI_AGREES if phi_image == image else msg.PHI_DIFFERS)
    return lines


def register(app: typer.Typer) -> Dict[str, Callable[..., Any]]:
    """Register the demo command.

    Args:
        app: Typer application instance.

    Returns:
        Dictionary mapping command names to their functions.
    """

    @app.command()
    def demo(
        list_examples: bool = typer.Option(False, "--list", help="List the bundled examples"),
        example: Optional[str] = typer.Option(
            None, "--example", "-e", help="Bundled example name (a unique prefix is enough)"
        ),
        dim: int = typer.Option(2, "--dim", "-d", min=1, help="Degree of the simplex of BG"),
    ):
        """Walk through α, the leading products, Ψ and Φ on one simplex of BG."""
        available = bundled_examples()
        if list_examples or example is None:
            lines = []
            for name in available:
                try:
                    description = load_bundled(name, 1).description
                except SimpfibError as exc:
                    description = spec_msg.INVALID_SPEC.format(exc)
                lines.append(msg.LIST_LINE.format(name, description))
            add_typer_block_message(msg.LIST_HEADER, "", lines)
            return

        name = resolve_example(example, available)
        try:
            spec = load_bundled(name, dim)
            fibration = Fibration(spec.ses, choose_section(spec.ses, spec.section))
            lines = demo_lines(spec, fibration, demo_simplex(spec, fibration, dim))
        except SimpfibError as exc:
            abort(spec_msg.INVALID_SPEC.format(exc))
        add_typer_block_message(msg.HEADER.format(name, dim), "", lines, indent_block=False)

    return {"demo": demo}
