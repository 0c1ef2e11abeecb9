"""Twisting-function axioms, action axioms and pseudo-cross sections."""

import itertools
from typing import Callable, List, Optional, Sequence

import numpy as np

from simpfib.core.loop import LoopGroup
from simpfib.core.parallel import partition_generators
from simpfib.core.simplicial import SimplicialGroup, SimplicialMap
from simpfib.core.twisted import SimplicialAction, TwistingFunction
from simpfib.dtos.report import CheckRecord, Report
from simpfib.validators.runner import Outcomes, expect, run_by_dimension, run_check

DEFAULT_MAX_PAIRS = 4096


def _twist_face_zero(tau: TwistingFunction, n: int) -> Outcomes:
    base, carrier = tau.base, tau.carrier
    for b in base.simplices(n):
        lhs = carrier.face(n - 1, 0, tau(n, b))
        rhs = carrier.multiply(
            n - 2,
            carrier.invert(n - 2, tau(n - 1, base.face(n, 0, b))),
            tau(n - 1, base.face(n, 1, b)),
        )
        yield expect(
            lhs == rhs,
            lambda: f"b={base.serialize(n, b)}: ∂_0τ(b)={carrier.serialize(n - 2, lhs)} but "
            f"τ(∂_0b)⁻¹τ(∂_1b)={carrier.serialize(n - 2, rhs)}",
        )


def _twist_faces(tau: TwistingFunction, n: int) -> Outcomes:
    base, carrier = tau.base, tau.carrier
    for b in base.simplices(n):
        value = tau(n, b)
        for i in range(1, n):
            lhs = carrier.face(n - 1, i, value)
            rhs = tau(n - 1, base.face(n, i + 1, b))
            yield expect(
                lhs == rhs,
                lambda: f"b={base.serialize(n, b)}, i={i}: ∂_{i}τ(b)={carrier.serialize(n - 2, lhs)} "
                f"but τ(∂_{i + 1}b)={carrier.serialize(n - 2, rhs)}",
            )


def _twist_degeneracies(tau: TwistingFunction, n: int) -> Outcomes:
    base, carrier = tau.base, tau.carrier
    for b in base.simplices(n):
        value = tau(n, b)
        for i in range(n):
            lhs = carrier.degeneracy(n - 1, i, value)
            rhs = tau(n + 1, base.degeneracy(n, i + 1, b))
            yield expect(
                lhs == rhs,
                lambda: f"b={base.serialize(n, b)}, i={i}: s_{i}τ(b)={carrier.serialize(n, lhs)} "
                f"but τ(s_{i + 1}b)={carrier.serialize(n, rhs)}",
            )


def _twist_degenerate_base(tau: TwistingFunction, n: int) -> Outcomes:
    base, carrier = tau.base, tau.carrier
    for b in base.simplices(n):
        value = tau(n + 1, base.degeneracy(n, 0, b))
        yield expect(
            value == carrier.identity(n),
            lambda: f"b={base.serialize(n, b)}: τ(s_0b)={carrier.serialize(n, value)} is not 1",
        )


def twisting_records(tau: TwistingFunction, n: int, max_dim: int, prefix: str = "") -> List[CheckRecord]:
    records = []
    if n >= 2:
        records.append(run_check(f"{prefix}twist-face-0", n, lambda: _twist_face_zero(tau, n)))
        records.append(run_check(f"{prefix}twist-faces", n, lambda: _twist_faces(tau, n)))
    if 1 <= n < max_dim:
        records.append(
            run_check(f"{prefix}twist-degeneracies", n, lambda: _twist_degeneracies(tau, n))
        )
    if n < max_dim:
        records.append(
            run_check(f"{prefix}twist-degenerate-base", n, lambda: _twist_degenerate_base(tau, n))
        )
    return records


def validate_twisting(
    tau: TwistingFunction, max_dim: int, *, jobs: int = 1, prefix: str = ""
) -> Report:
    """Check the four twisting axioms on B_n for n ≤ max_dim.

    ∂_0τ(b) = τ(∂_0b)⁻¹τ(∂_1b), ∂_iτ(b) = τ(∂_{i+1}b) for 1 ≤ i ≤ n-1,
    s_iτ(b) = τ(s_{i+1}b) and τ(s_0b) = 1.
    """
    max_dim = min(max_dim, tau.base.cutoff)
    report = run_by_dimension(
        f"twisting:{tau.name}",
        range(max_dim + 1),
        lambda n: twisting_records(tau, n, max_dim, prefix),
        jobs,
    )
    report.config["max_dim"] = max_dim
    return report


def default_elements(carrier, n: int) -> list:
    """Every element of a finite level, or the identity and all signed generators of ΩX."""
    if isinstance(carrier, SimplicialGroup):
        return list(carrier.level(n).elements())
    if isinstance(carrier, LoopGroup):
        words = [carrier.identity(n)]
        for x in carrier.generators(n):
            word = carrier.generator(n, x)
            words.extend((word, carrier.invert(n, word)))
        return words
    raise TypeError(f"No default element enumeration for {type(carrier).__name__}")


def element_pairs(elements: Sequence, max_pairs: int, rng: np.random.Generator):
    total = len(elements) ** 2
    if total <= max_pairs:
        return itertools.product(elements, repeat=2)
    picks = rng.integers(0, len(elements), size=(max_pairs, 2))
    return ((elements[int(a)], elements[int(b)]) for a, b in picks)


def _action_identity(action: SimplicialAction, n: int) -> Outcomes:
    carrier, space = action.carrier, action.space
    unit = carrier.identity(n)
    for f in space.simplices(n):
        value = action(n, unit, f)
        yield expect(
            value == f,
            lambda: f"f={space.serialize(n, f)}: 1·f={space.serialize(n, value)}",
        )


def _action_compatibility(action: SimplicialAction, n: int, pairs) -> Outcomes:
    carrier, space = action.carrier, action.space
    fibre = list(space.simplices(n))
    for gamma, delta in pairs:
        product = carrier.multiply(n, gamma, delta)
        for f in fibre:
            lhs = action(n, product, f)
            rhs = action(n, gamma, action(n, delta, f))
            yield expect(
                lhs == rhs,
                lambda: f"γ={carrier.serialize(n, gamma)}, γ'={carrier.serialize(n, delta)}, "
                f"f={space.serialize(n, f)}: (γγ')·f={space.serialize(n, lhs)} but "
                f"γ·(γ'·f)={space.serialize(n, rhs)}",
            )


def _action_faces(action: SimplicialAction, n: int, elements: Sequence) -> Outcomes:
    carrier, space = action.carrier, action.space
    for gamma in elements:
        for f in space.simplices(n):
            value = action(n, gamma, f)
            for i in range(n + 1):
                lhs = space.face(n, i, value)
                rhs = action(n - 1, carrier.face(n, i, gamma), space.face(n, i, f))
                yield expect(
                    lhs == rhs,
                    lambda: f"γ={carrier.serialize(n, gamma)}, f={space.serialize(n, f)}, i={i}: "
                    f"∂_{i}(γ·f)={space.serialize(n - 1, lhs)} but "
                    f"∂_{i}γ·∂_{i}f={space.serialize(n - 1, rhs)}",
                )


def _action_degeneracies(action: SimplicialAction, n: int, elements: Sequence) -> Outcomes:
    carrier, space = action.carrier, action.space
    for gamma in elements:
        for f in space.simplices(n):
            value = action(n, gamma, f)
            for i in range(n + 1):
                lhs = space.degeneracy(n, i, value)
                rhs = action(n + 1, carrier.degeneracy(n, i, gamma), space.degeneracy(n, i, f))
                yield expect(
                    lhs == rhs,
                    lambda: f"γ={carrier.serialize(n, gamma)}, f={space.serialize(n, f)}, i={i}: "
                    f"s_{i}(γ·f)={space.serialize(n + 1, lhs)} but "
                    f"s_{i}γ·s_{i}f={space.serialize(n + 1, rhs)}",
                )


def action_records(
    action: SimplicialAction,
    n: int,
    max_dim: int,
    elements: Sequence,
    rng: np.random.Generator,
    *,
    prefix: str = "",
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> List[CheckRecord]:
    records = [
        run_check(f"{prefix}action-identity", n, lambda: _action_identity(action, n)),
        run_check(
            f"{prefix}action-compatibility",
            n,
            lambda: _action_compatibility(action, n, element_pairs(elements, max_pairs, rng)),
        ),
    ]
    if n >= 1:
        records.append(
            run_check(f"{prefix}action-faces", n, lambda: _action_faces(action, n, elements))
        )
    if n < max_dim:
        records.append(
            run_check(
                f"{prefix}action-degeneracies", n, lambda: _action_degeneracies(action, n, elements)
            )
        )
    return records


def validate_action(
    action: SimplicialAction,
    max_dim: int,
    *,
    elements: Optional[Callable[[int], Sequence]] = None,
    seed: int = 0,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    jobs: int = 1,
    prefix: str = "",
) -> Report:
    """Check 1·f = f, (γγ')·f = γ·(γ'·f) and compatibility with ∂_i and s_i.

    ``elements(n)`` chooses the group elements to test in degree n; by default all
    of a finite level, or the identity and signed generators of a loop group.
    Element pairs are exhaustive up to ``max_pairs`` and sampled above that.
    """
    max_dim = min(max_dim, action.carrier.cutoff, action.space.cutoff)
    choose = elements or (lambda n: default_elements(action.carrier, n))
    generators = dict(enumerate(partition_generators(seed, max_dim + 1)))
    report = run_by_dimension(
        f"action:{action.name}",
        range(max_dim + 1),
        lambda n: action_records(
            action, n, max_dim, choose(n), generators[n], prefix=prefix, max_pairs=max_pairs
        ),
        jobs,
    )
    report.config.update({"max_dim": max_dim, "seed": seed, "max_pairs": max_pairs})
    return report


def _section_projection(section: SimplicialMap, n: int) -> Outcomes:
    base = section.source
    for b in base.simplices(n):
        image = section(n, b)
        yield expect(
            image.base == b,
            lambda: f"b={base.serialize(n, b)}: σ(b) lies over {base.serialize(n, image.base)}",
        )


def _section_commutes(section: SimplicialMap, n: int, indices, degeneracies: bool) -> Outcomes:
    base, product = section.source, section.target
    for b in base.simplices(n):
        image = section(n, b)
        if degeneracies:
            for i in indices:
                lhs = product.degeneracy(n, i, image)
                rhs = section(n + 1, base.degeneracy(n, i, b))
                yield expect(
                    lhs == rhs,
                    lambda: f"b={base.serialize(n, b)}, i={i}: s_iσ(b)={product.serialize(n + 1, lhs)} "
                    f"but σ(s_ib)={product.serialize(n + 1, rhs)}",
                )
        else:
            for i in indices:
                lhs = product.face(n, i, image)
                rhs = section(n - 1, base.face(n, i, b))
                yield expect(
                    lhs == rhs,
                    lambda: f"b={base.serialize(n, b)}, i={i}: ∂_iσ(b)={product.serialize(n - 1, lhs)} "
                    f"but σ(∂_ib)={product.serialize(n - 1, rhs)}",
                )


def is_honest_section(section: SimplicialMap, max_dim: int) -> Optional[str]:
    """None when σ also commutes with ∂_0, else the first counterexample."""
    for n in range(1, min(max_dim, section.cutoff) + 1):
        for outcome in _section_commutes(section, n, [0], degeneracies=False):
            if outcome is not None:
                return outcome
    return None


def validate_pseudo_cross_section(section: SimplicialMap, max_dim: int, *, jobs: int = 1) -> Report:
    """πσ = id, ∂_iσ = σ∂_i for i ≥ 1 and s_iσ = σs_i; ∂_0 is reported in the notes."""
    max_dim = min(max_dim, section.cutoff)

    def records_for(n: int) -> List[CheckRecord]:
        records = [run_check("section-projection", n, lambda: _section_projection(section, n))]
        if n >= 1:
            records.append(
                run_check(
                    "section-faces",
                    n,
                    lambda: _section_commutes(section, n, range(1, n + 1), degeneracies=False),
                )
            )
        if n < max_dim:
            records.append(
                run_check(
                    "section-degeneracies",
                    n,
                    lambda: _section_commutes(section, n, range(n + 1), degeneracies=True),
                )
            )
        return records

    report = run_by_dimension(f"pseudo-section:{section.name}", range(max_dim + 1), records_for, jobs)
    failure = is_honest_section(section, max_dim)
    report.notes.append(
        "honest cross section: σ commutes with ∂_0"
        if failure is None
        else f"pseudo-cross section only, ∂_0 fails: {failure}"
    )
    report.config["max_dim"] = max_dim
    return report
