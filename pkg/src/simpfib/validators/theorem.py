"""End-to-end verification that BG ≅ BK ×_{τ^{BL}} BL, and that Φ agrees in the split case.

The suite bundles the section checks, the α-bijection identities, the ΩBL-action
axioms (exhaustive on generators, sampled on longer words), the twisting axioms
for τ^{BL}, and bijectivity and simpliciality of Ψ. When the section is
multiplicative it also checks the L-action on BK, Φ and the factorisation of the
loop action through ΩBL → L.
"""

import logging
from typing import List

import numpy as np

from simpfib.core.bar import ClassifyingSpace, bar_map
from simpfib.core.fibration import AlphaPair, Fibration
from simpfib.core.loop import LoopGroup, canonical_twist_loop, loop_to_group
from simpfib.core.parallel import partition_generators
from simpfib.core.twisted import SimplicialAction, TwistedSimplex
from simpfib.dtos.report import CheckRecord, Report
from simpfib.validators.groups import validate_section
from simpfib.validators.runner import Outcomes, expect, run_by_dimension, run_check
from simpfib.validators.simplicial import check_simplicial_identities, check_simplicial_map
from simpfib.validators.twisting import validate_action, validate_twisting

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 1000
DEFAULT_MAX_WORD_LENGTH = 8


# -- α -------------------------------------------------------------------------


def _alpha_roundtrip(fibration: Fibration, n: int) -> Outcomes:
    G, K, L = fibration.G, fibration.K, fibration.L
    for g in G.simplices(n):
        pair = fibration.alpha(n, g)
        back = fibration.alpha_inverse(n, pair)
        yield expect(
            back == g,
            lambda: f"level {n}: α⁻¹α({G.serialize(n, g)}) = {G.serialize(n, back)}",
        )
    for k in K.simplices(n):
        for l in L.simplices(n):
            pair = AlphaPair(k, l)
            image = fibration.alpha(n, fibration.alpha_inverse(n, pair))
            yield expect(
                image == pair,
                lambda: f"level {n}: αα⁻¹({K.serialize(n, k)}, {L.serialize(n, l)}) = "
                f"({K.serialize(n, image.k)}, {L.serialize(n, image.l)})",
            )


def _alpha_commutes(fibration: Fibration, n: int, top: int) -> Outcomes:
    G, K, L = fibration.G, fibration.K, fibration.L
    for g in G.simplices(n):
        k, l = fibration.alpha(n, g)
        maps = []
        if n >= 1:
            maps.extend(
                (f"∂_{i}", n - 1, G.face(n, i, g), AlphaPair(K.face(n, i, k), L.face(n, i, l)))
                for i in range(1, n + 1)
            )
        if n < top:
            maps.extend(
                (
                    f"s_{i}",
                    n + 1,
                    G.degeneracy(n, i, g),
                    AlphaPair(K.degeneracy(n, i, k), L.degeneracy(n, i, l)),
                )
                for i in range(n + 1)
            )
        for label, level, moved, expected in maps:
            image = fibration.alpha(level, moved)
            yield expect(
                image == expected,
                lambda: f"level {n}, g={G.serialize(n, g)}: α({label}g) = "
                f"({K.serialize(level, image.k)}, {L.serialize(level, image.l)}) but "
                f"{label}α(g) = ({K.serialize(level, expected.k)}, {L.serialize(level, expected.l)})",
            )


def _alpha_twist_identity(fibration: Fibration, n: int) -> Outcomes:
    G = fibration.G
    for g in G.simplices(n):
        for g_next in G.simplices(n - 1):
            yield expect(
                fibration.alpha_twist_identity(n, g, g_next),
                lambda: f"level {n}: g={G.serialize(n, g)}, g'={G.serialize(n - 1, g_next)}",
            )


# -- the ΩBL-action ------------------------------------------------------------


def _degenerate_generators_act_trivially(
    fibration: Fibration, loop: LoopGroup, fibre: ClassifyingSpace, n: int
) -> Outcomes:
    base = loop.space
    for x in base.simplices(n + 1):
        if not loop.is_trivial_generator(n, x):
            continue
        for k in fibre.simplices(n):
            image = fibration.act_generator(x, 1, k)
            yield expect(
                image == k,
                lambda: f"⟨{base.serialize(n + 1, x)}⟩·{fibre.serialize(n, k)} = {fibre.serialize(n, image)}",
            )


def _random_words(
    action: SimplicialAction,
    n: int,
    rng: np.random.Generator,
    samples: int,
    max_length: int,
) -> Outcomes:
    loop, fibre = action.carrier, action.space
    simplices = list(fibre.simplices(n))
    for _ in range(samples):
        w = loop.random_word(n, rng, int(rng.integers(1, max_length + 1)))
        w2 = loop.random_word(n, rng, int(rng.integers(1, max_length + 1)))
        product = loop.multiply(n, w, w2)
        inverse = loop.invert(n, w)
        for k in simplices:
            back = action(n, w, action(n, inverse, k))
            yield expect(
                back == k,
                lambda: f"w={loop.serialize(n, w)}, k={fibre.serialize(n, k)}: "
                f"w·(w⁻¹·k) = {fibre.serialize(n, back)}",
            )
            lhs = action(n, product, k)
            rhs = action(n, w, action(n, w2, k))
            yield expect(
                lhs == rhs,
                lambda: f"w={loop.serialize(n, w)}, w'={loop.serialize(n, w2)}, "
                f"k={fibre.serialize(n, k)}: (ww')·k={fibre.serialize(n, lhs)} but "
                f"w·(w'·k)={fibre.serialize(n, rhs)}",
            )


# -- Ψ ---------------------------------------------------------------------------


def _psi_bijective(fibration: Fibration, total: ClassifyingSpace, fibre, base, n: int) -> Outcomes:
    expected = fibre.count(n) * base.count(n)
    yield expect(
        total.count(n) == expected,
        lambda: f"|{total.name}_{n}| = {total.count(n)} but |{fibre.name}_{n}|·|{base.name}_{n}| = {expected}",
    )
    seen = {}
    for g in total.simplices(n):
        image = fibration.psi(g)
        previous = seen.setdefault(image, g)
        yield expect(
            previous == g,
            lambda: f"Ψ{total.serialize(n, g)} = Ψ{total.serialize(n, previous)}",
        )


def _psi_inverse(fibration: Fibration, total: ClassifyingSpace, codomain, n: int) -> Outcomes:
    for g in total.simplices(n):
        back = fibration.psi_inverse(fibration.psi(g))
        yield expect(
            back == g,
            lambda: f"Ψ⁻¹Ψ{total.serialize(n, g)} = {total.serialize(n, back)}",
        )
    for t in codomain.simplices(n):
        image = fibration.psi(fibration.psi_inverse(t))
        yield expect(
            image == t,
            lambda: f"ΨΨ⁻¹{codomain.serialize(n, t)} = {codomain.serialize(n, image)}",
        )


def _psi_factorization(fibration: Fibration, total: ClassifyingSpace, alpha_map, transfer, n: int) -> Outcomes:
    for g in total.simplices(n):
        yield expect(
            fibration.psi(g) == transfer(n, alpha_map(n, g)),
            lambda: f"Ψ{total.serialize(n, g)} differs from T(Bα{total.serialize(n, g)})",
        )


def _fibre_inclusion(fibration: Fibration, inclusion, fibre: ClassifyingSpace, n: int) -> Outcomes:
    L = fibration.L
    identities = tuple(L.identity(n - 1 - j) for j in range(n))
    for k in fibre.simplices(n):
        image = fibration.psi(inclusion(n, k))
        yield expect(
            image == TwistedSimplex(k, identities),
            lambda: f"Ψ(Bι{fibre.serialize(n, k)}) = {image}",
        )


def _projection(fibration: Fibration, projection, total: ClassifyingSpace, n: int) -> Outcomes:
    for g in total.simplices(n):
        base = fibration.psi(g).base
        expected = projection(n, g)
        yield expect(
            base == expected,
            lambda: f"g={total.serialize(n, g)}: base of Ψ is {base}, Bπ gives {expected}",
        )


# -- the split case --------------------------------------------------------------


def _phi_agrees_psi(fibration: Fibration, total: ClassifyingSpace, n: int) -> Outcomes:
    for g in total.simplices(n):
        phi, psi = fibration.phi(g), fibration.psi(g)
        yield expect(
            phi == psi,
            lambda: f"g={total.serialize(n, g)}: Φ = {phi}, Ψ = {psi}",
        )


def _action_factorization(
    fibration: Fibration, loop: LoopGroup, fibre: ClassifyingSpace, n: int
) -> Outcomes:
    for x in loop.generators(n):
        word = loop.generator(n, x)
        l = loop_to_group(loop, word)
        for k in fibre.simplices(n):
            lhs = fibration.loop_action(word, k)
            rhs = fibration.semidirect_action(l, k)
            yield expect(
                lhs == rhs,
                lambda: f"w={loop.serialize(n, word)}, k={fibre.serialize(n, k)}: "
                f"w·k={fibre.serialize(n, lhs)} but {fibration.L.serialize(n, l)}·k={fibre.serialize(n, rhs)}",
            )


def _splitting(fibration: Fibration) -> Outcomes:
    failure = fibration.splitting_failure()
    yield expect(failure is None, lambda: failure)


# -- the suite -------------------------------------------------------------------


def verify_theorem(
    fibration: Fibration,
    max_dim: int,
    *,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    max_word_length: int = DEFAULT_MAX_WORD_LENGTH,
    jobs: int = 1,
) -> Report:
    """Run every check of the isomorphism BG ≅ BK ×_{τ^{BL}} BL in degrees ≤ max_dim.

    Failures are records in the returned report; nothing is raised for a failed law.
    """
    ses = fibration.ses
    top = min(max_dim, fibration.cutoff)
    multiplicative = fibration.is_multiplicative()
    logger.debug("Verifying %s up to degree %d (multiplicative section: %s)", ses.name, top, multiplicative)

    total = fibration.total_space(top)
    fibre = fibration.fibre_space(top)
    base = fibration.base_space(top)
    action = fibration.loop_action_structure(top)
    loop = action.carrier
    codomain = fibration.twisted_codomain(top)
    alpha_map = fibration.alpha_map(top)
    transfer = fibration.transfer_map(top)
    inclusion = bar_map(ses.inclusion, top)
    projection = bar_map(ses.projection, top)
    generators = dict(enumerate(partition_generators(seed, top + 1)))

    def records_for(n: int) -> List[CheckRecord]:
        records = [run_check("alpha-roundtrip", n, lambda: _alpha_roundtrip(fibration, n))]
        records.append(run_check("alpha-commutes", n, lambda: _alpha_commutes(fibration, n, top)))
        if n >= 1:
            records.append(
                run_check("alpha-twist-identity", n, lambda: _alpha_twist_identity(fibration, n))
            )
        if n < top:
            records.append(
                run_check(
                    "action-degenerate-generators",
                    n,
                    lambda: _degenerate_generators_act_trivially(fibration, loop, fibre, n),
                )
            )
            records.append(
                run_check(
                    "action-random-words",
                    n,
                    lambda: _random_words(action, n, generators[n], samples, max_word_length),
                )
            )
        records.extend(
            [
                run_check("psi-bijective", n, lambda: _psi_bijective(fibration, total, fibre, base, n)),
                run_check("psi-inverse", n, lambda: _psi_inverse(fibration, total, codomain, n)),
                run_check(
                    "psi-factorization",
                    n,
                    lambda: _psi_factorization(fibration, total, alpha_map, transfer, n),
                ),
                run_check("fibre-inclusion", n, lambda: _fibre_inclusion(fibration, inclusion, fibre, n)),
                run_check("projection", n, lambda: _projection(fibration, projection, total, n)),
            ]
        )
        if multiplicative:
            if n == 0:
                records.append(run_check("splitting", n, lambda: _splitting(fibration)))
            records.append(run_check("phi-agrees-psi", n, lambda: _phi_agrees_psi(fibration, total, n)))
            if n < top:
                records.append(
                    run_check(
                        "action-factorization",
                        n,
                        lambda: _action_factorization(fibration, loop, fibre, n),
                    )
                )
        return records

    report = validate_section(ses, fibration.section, top, multiplicative=multiplicative, jobs=jobs)
    report.suite = f"theorem:{ses.name}"
    report.merge(run_by_dimension(report.suite, range(top + 1), records_for, jobs))
    report.merge(validate_twisting(canonical_twist_loop(loop), top, jobs=jobs, prefix="loop-"))
    if top >= 1:
        report.merge(
            validate_action(action, top - 1, seed=seed, jobs=jobs, prefix="loop-")
        )
    report.merge(check_simplicial_identities(codomain, top, jobs=jobs, prefix="twisted "))
    report.merge(check_simplicial_map(fibration.psi_map(top), top, jobs=jobs, prefix="psi "))
    report.merge(check_simplicial_map(alpha_map, top, jobs=jobs, prefix="alpha-map "))
    report.merge(check_simplicial_map(transfer, top, jobs=jobs, prefix="transfer "))
    report.notes.append(f"Ψ codomain: {codomain.name}")

    if multiplicative:
        report.merge(
            validate_action(
                fibration.semidirect_action_structure(top), top, seed=seed, jobs=jobs, prefix="L-"
            )
        )
        semidirect = fibration.semidirect_codomain(top)
        report.merge(check_simplicial_identities(semidirect, top, jobs=jobs, prefix="semidirect "))
        report.merge(check_simplicial_map(fibration.phi_map(top), top, jobs=jobs, prefix="phi "))
        report.notes.append(f"σ is multiplicative: Φ checked into {semidirect.name}")
    else:
        report.notes.append("σ is not multiplicative: the Φ branch was skipped")

    report.config.update(
        {"max_dim": top, "seed": seed, "samples": samples, "max_word_length": max_word_length}
    )
    return report
