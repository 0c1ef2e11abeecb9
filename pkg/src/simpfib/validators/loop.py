"""Loop group checks: the s_0 relations, identities on generators, ΩBG → G."""

from typing import List

from simpfib.core.loop import LoopGeneratorView, LoopGroup, LoopWord, loop_to_group
from simpfib.core.parallel import partition_generators
from simpfib.dtos.report import CheckRecord, Report
from simpfib.validators.runner import Outcomes, expect, run_by_dimension, run_check
from simpfib.validators.simplicial import identity_records
from simpfib.validators.twisting import DEFAULT_MAX_PAIRS, element_pairs


def _degenerate_generators(loop: LoopGroup, n: int):
    space = loop.space
    return [x for x in space.simplices(n + 1) if loop.is_trivial_generator(n, x)]


def _relations(loop: LoopGroup, n: int) -> Outcomes:
    space = loop.space
    for x in _degenerate_generators(loop, n):
        images = []
        if n >= 1:
            images.extend((f"∂_{i}", loop.canonical(n - 1, loop.generator_face(n, i, x))) for i in range(n + 1))
        if n < loop.cutoff:
            images.extend(
                (f"s_{i}", loop.canonical(n + 1, loop.generator_degeneracy(n, i, x))) for i in range(n + 1)
            )
        for label, word in images:
            yield expect(
                word.is_identity,
                lambda: f"x={space.serialize(n + 1, x)}: {label}[x] = {loop.serialize(word.degree, word)}",
            )


def loop_relation_records(loop: LoopGroup, n: int) -> List[CheckRecord]:
    return [run_check("loop-relations", n, lambda: _relations(loop, n))]


def validate_loop_group(loop: LoopGroup, max_dim: int, *, jobs: int = 1) -> Report:
    """The s_0 relations are respected and the simplicial identities hold on generators."""
    max_dim = min(max_dim, loop.cutoff)
    view = LoopGeneratorView(loop)
    report = run_by_dimension(
        f"loop:{loop.name}",
        range(max_dim + 1),
        lambda n: loop_relation_records(loop, n) + identity_records(view, n, max_dim, "loop "),
        jobs,
    )
    report.config["max_dim"] = max_dim
    return report


def _canonical_morphism_homomorphism(loop: LoopGroup, n: int, pairs) -> Outcomes:
    group = loop.space.group
    for a, b in pairs:
        lhs = loop_to_group(loop, loop.multiply(n, a, b))
        rhs = group.multiply(n, loop_to_group(loop, a), loop_to_group(loop, b))
        yield expect(
            lhs == rhs,
            lambda: f"w={loop.serialize(n, a)}, w'={loop.serialize(n, b)}: "
            f"image of ww' is {group.serialize(n, lhs)}, product of images is {group.serialize(n, rhs)}",
        )


def _canonical_morphism_structure(loop: LoopGroup, n: int, max_dim: int) -> Outcomes:
    group = loop.space.group
    for x in loop.generators(n):
        word = loop.generator(n, x)
        value = loop_to_group(loop, word)
        maps = []
        if n >= 1:
            maps.extend(
                (f"∂_{i}", n - 1, group.face(n, i, value), loop_to_group(loop, loop.face(n, i, word)))
                for i in range(n + 1)
            )
        if n < max_dim:
            maps.extend(
                (
                    f"s_{i}",
                    n + 1,
                    group.degeneracy(n, i, value),
                    loop_to_group(loop, loop.degeneracy(n, i, word)),
                )
                for i in range(n + 1)
            )
        for label, level, lhs, rhs in maps:
            yield expect(
                lhs == rhs,
                lambda: f"w={loop.serialize(n, word)}: {label} of the image is "
                f"{group.serialize(level, lhs)}, image of {label}w is {group.serialize(level, rhs)}",
            )


def validate_canonical_morphism(
    loop: LoopGroup,
    max_dim: int,
    *,
    seed: int = 0,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    jobs: int = 1,
) -> Report:
    """ΩBG → G is a homomorphism on generator pairs and commutes with ∂_i and s_i.

    Raises:
        NotClassifyingSpaceError: If the loop group is not taken of a classifying space.
    """
    max_dim = min(max_dim, loop.cutoff)
    loop_to_group(loop, loop.identity(0))  # fail fast outside BG
    generators = dict(enumerate(partition_generators(seed, max_dim + 1)))

    def records_for(n: int) -> List[CheckRecord]:
        words: List[LoopWord] = [loop.generator(n, x) for x in loop.generators(n)]
        return [
            run_check(
                "canonical-morphism-homomorphism",
                n,
                lambda: _canonical_morphism_homomorphism(
                    loop, n, element_pairs(words, max_pairs, generators[n])
                ),
            ),
            run_check(
                "canonical-morphism-structure", n, lambda: _canonical_morphism_structure(loop, n, max_dim)
            ),
        ]

    report = run_by_dimension(f"canonical-morphism:{loop.name}", range(max_dim + 1), records_for, jobs)
    report.config.update({"max_dim": max_dim, "seed": seed, "max_pairs": max_pairs})
    return report
