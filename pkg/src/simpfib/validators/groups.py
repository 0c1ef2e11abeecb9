"""Short exact sequences and group-level sections."""

from typing import List

from simpfib.core.fibration import PseudoSection
from simpfib.core.ses import ShortExactSequence
from simpfib.dtos.report import CheckRecord, Report
from simpfib.validators.runner import Outcomes, expect, run_by_dimension, run_check


def _inclusion_injective(ses: ShortExactSequence, n: int) -> Outcomes:
    hom = ses.inclusion.component(n)
    yield expect(hom.is_injective(), lambda: f"level {n}: ι is not injective")


def _projection_surjective(ses: ShortExactSequence, n: int) -> Outcomes:
    hom = ses.projection.component(n)
    yield expect(hom.is_surjective(), lambda: f"level {n}: π is not surjective")


def _exactness(ses: ShortExactSequence, n: int) -> Outcomes:
    image = ses.inclusion.component(n).image_set()
    kernel = set(ses.projection.component(n).kernel())
    group = ses.group
    for g in sorted(image | kernel):
        yield expect(
            (g in image) == (g in kernel),
            lambda: f"level {n}: {group.serialize(n, g)} is "
            + ("in ι(K) but not in ker π" if g in image else "in ker π but not in ι(K)"),
        )


def _normality(ses: ShortExactSequence, n: int) -> Outcomes:
    group = ses.group
    image = ses.inclusion.component(n).image_set()
    for g in group.simplices(n):
        for k in sorted(image):
            conjugate = group.product_of(n, g, k, group.invert(n, g))
            yield expect(
                conjugate in image,
                lambda: f"level {n}: {group.serialize(n, g)}·{group.serialize(n, k)}·"
                f"{group.serialize(n, g)}⁻¹ leaves ι(K)",
            )


def _homomorphisms(ses: ShortExactSequence, n: int) -> Outcomes:
    for label, hom in (("ι", ses.inclusion.component(n)), ("π", ses.projection.component(n))):
        failure = hom.first_failure()
        yield expect(failure is None, lambda: f"level {n}: {label} fails on the pair {failure}")


def _simplicial_compatibility(ses: ShortExactSequence, n: int, max_dim: int) -> Outcomes:
    for label, hom, source, target in (
        ("ι", ses.inclusion, ses.kernel, ses.group),
        ("π", ses.projection, ses.group, ses.quotient),
    ):
        for a in source.simplices(n):
            if n >= 1:
                for i in range(n + 1):
                    yield expect(
                        target.face(n, i, hom(n, a)) == hom(n - 1, source.face(n, i, a)),
                        lambda: f"level {n}: ∂_{i}{label}({source.serialize(n, a)}) "
                        f"!= {label}(∂_{i}{source.serialize(n, a)})",
                    )
            if n < max_dim:
                for i in range(n + 1):
                    yield expect(
                        target.degeneracy(n, i, hom(n, a)) == hom(n + 1, source.degeneracy(n, i, a)),
                        lambda: f"level {n}: s_{i}{label}({source.serialize(n, a)}) "
                        f"!= {label}(s_{i}{source.serialize(n, a)})",
                    )


def ses_records(ses: ShortExactSequence, n: int, max_dim: int) -> List[CheckRecord]:
    return [
        run_check("inclusion-injective", n, lambda: _inclusion_injective(ses, n)),
        run_check("projection-surjective", n, lambda: _projection_surjective(ses, n)),
        run_check("exactness", n, lambda: _exactness(ses, n)),
        run_check("normality", n, lambda: _normality(ses, n)),
        run_check("homomorphism", n, lambda: _homomorphisms(ses, n)),
        run_check(
            "simplicial-compatibility", n, lambda: _simplicial_compatibility(ses, n, max_dim)
        ),
    ]


def validate_ses(ses: ShortExactSequence, max_dim: int, *, jobs: int = 1) -> Report:
    """Check that 1 → K → G → L → 1 is a short exact sequence of simplicial groups."""
    max_dim = min(max_dim, ses.cutoff)
    report = run_by_dimension(
        f"ses:{ses.name}", range(max_dim + 1), lambda n: ses_records(ses, n, max_dim), jobs
    )
    report.config["max_dim"] = max_dim
    return report


def _section_normalized(ses: ShortExactSequence, section: PseudoSection, n: int) -> Outcomes:
    value = section(n, ses.quotient.identity(n))
    yield expect(
        value == ses.group.identity(n),
        lambda: f"level {n}: σ(1) = {ses.group.serialize(n, value)}",
    )


def _section_projection(ses: ShortExactSequence, section: PseudoSection, n: int) -> Outcomes:
    L = ses.quotient
    for l in L.simplices(n):
        image = ses.projection(n, section(n, l))
        yield expect(
            image == l,
            lambda: f"level {n}: πσ({L.serialize(n, l)}) = {L.serialize(n, image)}",
        )


def _section_faces(ses: ShortExactSequence, section: PseudoSection, n: int, indices) -> Outcomes:
    G, L = ses.group, ses.quotient
    for l in L.simplices(n):
        for i in indices:
            lhs = G.face(n, i, section(n, l))
            rhs = section(n - 1, L.face(n, i, l))
            yield expect(
                lhs == rhs,
                lambda: f"level {n}, l={L.serialize(n, l)}: ∂_{i}σ(l)={G.serialize(n - 1, lhs)} "
                f"but σ(∂_{i}l)={G.serialize(n - 1, rhs)}",
            )


def _section_degeneracies(ses: ShortExactSequence, section: PseudoSection, n: int) -> Outcomes:
    G, L = ses.group, ses.quotient
    for l in L.simplices(n):
        for i in range(n + 1):
            lhs = G.degeneracy(n, i, section(n, l))
            rhs = section(n + 1, L.degeneracy(n, i, l))
            yield expect(
                lhs == rhs,
                lambda: f"level {n}, l={L.serialize(n, l)}: s_{i}σ(l)={G.serialize(n + 1, lhs)} "
                f"but σ(s_{i}l)={G.serialize(n + 1, rhs)}",
            )


def _section_multiplicative(ses: ShortExactSequence, section: PseudoSection, n: int) -> Outcomes:
    G, L = ses.group, ses.quotient
    for a in L.simplices(n):
        for b in L.simplices(n):
            yield expect(
                section(n, L.multiply(n, a, b)) == G.multiply(n, section(n, a), section(n, b)),
                lambda: f"level {n}: σ({L.serialize(n, a)}·{L.serialize(n, b)}) "
                f"!= σ({L.serialize(n, a)})·σ({L.serialize(n, b)})",
            )


def section_records(
    ses: ShortExactSequence,
    section: PseudoSection,
    n: int,
    max_dim: int,
    *,
    multiplicative: bool = False,
) -> List[CheckRecord]:
    records = [
        run_check("section-normalized", n, lambda: _section_normalized(ses, section, n)),
        run_check("section-projection", n, lambda: _section_projection(ses, section, n)),
    ]
    if n >= 1:
        records.append(
            run_check(
                "section-faces", n, lambda: _section_faces(ses, section, n, range(1, n + 1))
            )
        )
    if n < max_dim:
        records.append(
            run_check("section-degeneracies", n, lambda: _section_degeneracies(ses, section, n))
        )
    if multiplicative:
        records.append(
            run_check("section-multiplicative", n, lambda: _section_multiplicative(ses, section, n))
        )
    return records


def section_honesty(ses: ShortExactSequence, section: PseudoSection, max_dim: int) -> str:
    """A note saying whether σ also commutes with ∂_0."""
    for n in range(1, max_dim + 1):
        for outcome in _section_faces(ses, section, n, [0]):
            if outcome is not None:
                return f"σ is a pseudo-cross section only: {outcome}"
    return "σ commutes with ∂_0 as well: an honest cross section"


def validate_section(
    ses: ShortExactSequence,
    section: PseudoSection,
    max_dim: int,
    *,
    multiplicative: bool = False,
    jobs: int = 1,
) -> Report:
    """Check that σ is a normalized pseudo-cross section of π."""
    max_dim = min(max_dim, ses.cutoff, section.cutoff)
    report = run_by_dimension(
        f"section:{ses.name}",
        range(max_dim + 1),
        lambda n: section_records(ses, section, n, max_dim, multiplicative=multiplicative),
        jobs,
    )
    report.notes.append(section_honesty(ses, section, max_dim))
    report.config["max_dim"] = max_dim
    return report
