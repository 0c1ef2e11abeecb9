"""Tests for the loop group ΩX and the canonical morphism ΩBG → G."""

import numpy as np
import pytest

from simpfib.core.errors import (
    CutoffError,
    DegreeMismatchError,
    NotClassifyingSpaceError,
    NotReducedError,
)
from simpfib.core.groups import make_cyclic
from simpfib.core.loop import LoopGeneratorView, LoopGroup, LoopWord, canonical_twist_loop, loop_to_group
from simpfib.core.simplicial import DiscreteSimplicialSet

from tests.conftest import bar_of


@pytest.fixture
def loop_bz2():
    return LoopGroup(bar_of(make_cyclic(2), 3))


def test_cutoff_is_one_below_the_space(loop_bz2):
    """ΩX is defined one degree below X."""
    assert loop_bz2.cutoff == 2
    assert loop_bz2.name.startswith("ΩB")


def test_generators_skip_s0_degenerate_simplices(loop_bz2):
    """(ΩBZ/2)_0 is free on [1]; in degree 1 the simplices [0|b] are dropped."""
    assert list(loop_bz2.generators(0)) == [(1,)]
    assert list(loop_bz2.generators(1)) == [(1, 0), (1, 1)]


def test_degenerate_generator_is_the_identity(loop_bz2):
    """[s_0y] is the identity of the loop group."""
    assert loop_bz2.generator(1, (0, 1)).is_identity
    assert not loop_bz2.generator(1, (1, 0)).is_identity


def test_words_reduce_freely(loop_bz2):
    """x·x⁻¹ cancels and x·x keeps both letters."""
    word = loop_bz2.generator(1, (1, 1))
    product = loop_bz2.multiply(1, word, loop_bz2.invert(1, word))
    assert product == loop_bz2.identity(1)
    square = loop_bz2.multiply(1, word, word)
    assert len(square) == 2


def test_face_of_a_generator(loop_bz2):
    """∂_0[x] = [∂_0x]⁻¹[∂_1x] with [∂_1x] trivial here; ∂_1[x] = [∂_2x]."""
    word = loop_bz2.generator(1, (1, 1))
    assert loop_bz2.face(1, 0, word) == LoopWord(0, (((1,), -1),))
    assert loop_bz2.face(1, 1, word) == LoopWord(0, (((1,), 1),))


def test_degeneracy_of_a_generator(loop_bz2):
    """s_0[x] = [s_1x]."""
    word = loop_bz2.generator(0, (1,))
    assert loop_bz2.degeneracy(0, 0, word) == LoopWord(1, (((1, 0), 1),))


def test_degree_mismatch(loop_bz2):
    """Words of different degrees do not multiply; generators stop at the cutoff."""
    with pytest.raises(DegreeMismatchError):
        loop_bz2.multiply(0, loop_bz2.identity(0), loop_bz2.identity(1))
    with pytest.raises(CutoffError):
        loop_bz2.generator(3, (1, 1, 1, 1))


def test_loop_group_needs_a_reduced_space():
    """X must have a single vertex."""
    with pytest.raises(NotReducedError):
        LoopGroup(DiscreteSimplicialSet([0, 1], 2))


def test_loop_group_needs_degree_one():
    """X must reach degree 1."""
    with pytest.raises(CutoffError):
        LoopGroup(bar_of(make_cyclic(2), 0))


def test_serialization(loop_bz2):
    """Letters print as ±[simplex] and the empty word as ε."""
    assert loop_bz2.serialize(0, loop_bz2.identity(0)) == "ε"
    word = loop_bz2.generator(0, (1,))
    assert loop_bz2.serialize(0, word) == "+[1]"
    assert loop_bz2.serialize(0, loop_bz2.invert(0, word)) == "-[1]"


def test_random_words_are_seeded(loop_bz2):
    """The same seed gives the same reduced word."""
    first = loop_bz2.random_word(1, np.random.default_rng(7), 6)
    second = loop_bz2.random_word(1, np.random.default_rng(7), 6)
    assert first == second
    assert first.degree == 1
    assert len(first) <= 6
    assert all(not loop_bz2.is_trivial_generator(1, x) for x, _ in first.letters)


def test_generator_view(loop_bz2):
    """The generator view lists one-letter words."""
    view = LoopGeneratorView(loop_bz2)
    assert [word.letters for word in view.simplices(0)] == [(((1,), 1),)]


def test_canonical_twist_sends_a_simplex_to_its_generator(loop_bz2):
    """τ(x) = [x], and degenerate simplices go to the identity."""
    tau = canonical_twist_loop(loop_bz2)
    assert tau(2, (1, 1)) == loop_bz2.generator(1, (1, 1))
    assert tau(1, (0,)).is_identity


def test_loop_to_group(z4):
    """Each letter ⟨g_n|…|g_0⟩ contributes g_n⁻¹, inverted for a negative letter."""
    loop = LoopGroup(bar_of(z4, 3))
    assert loop_to_group(loop, loop.generator(0, (1,))) == 3
    word = LoopWord(0, (((1,), 1), ((2,), 1)))
    assert loop_to_group(loop, word) == 1
    assert loop_to_group(loop, loop.invert(0, loop.generator(0, (1,)))) == 1
    assert loop_to_group(loop, loop.identity(1)) == 0


def test_loop_to_group_needs_a_classifying_space():
    """Only loops on BG map to G."""
    loop = LoopGroup(DiscreteSimplicialSet([0], 2))
    with pytest.raises(NotClassifyingSpaceError):
        loop_to_group(loop, loop.identity(0))
