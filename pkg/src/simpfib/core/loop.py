"""The Kan loop group ΩX of a reduced simplicial set.

(ΩX)_n is the free group on X_{n+1} modulo the relations s_0 y = 1. Since the
relations only kill free generators, a word is kept canonical by deleting
s_0-degenerate letters and then reducing freely.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from simpfib.core.bar import ClassifyingSpace
from simpfib.core.errors import (
    CutoffError,
    DegreeMismatchError,
    IndexRangeError,
    NotClassifyingSpaceError,
    NotReducedError,
)
from simpfib.core.simplicial import GroupCarrier, SimplicialSet, Simplex, is_reduced
from simpfib.core.twisted import TwistingFunction

logger = logging.getLogger(__name__)

Letter = Tuple[Simplex, int]


@dataclass(frozen=True)
class LoopWord:
    """A canonical word in (ΩX)_degree; each letter is ``(generator, ±1)``."""

    degree: int
    letters: Tuple[Letter, ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)


def _free_reduce(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for generator, sign in letters:
        if stack and stack[-1][0] == generator and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((generator, sign))
    return tuple(stack)


def _inverse_letters(letters: Sequence[Letter]) -> List[Letter]:
    return [(generator, -sign) for generator, sign in reversed(letters)]


class LoopGroup(GroupCarrier):
    """ΩX with cutoff one below the cutoff of X."""

    def __init__(self, space: SimplicialSet):
        if not is_reduced(space):
            raise NotReducedError(f"{space.name} is not reduced; its loop group is not modelled")
        if space.cutoff < 1:
            raise CutoffError(f"Ω{space.name} needs {space.name} up to degree 1 at least")
        self.space = space
        self.cutoff = space.cutoff - 1
        self.name = f"Ω{space.name}"
        logger.debug("Loop group %s up to degree %d", self.name, self.cutoff)

    def _check_degree(self, n: int, *, for_degeneracy: bool = False) -> None:
        top = self.cutoff - 1 if for_degeneracy else self.cutoff
        if not 0 <= n <= top:
            raise CutoffError(f"{self.name}: degree {n} is outside the cutoff {self.cutoff}")

    def is_trivial_generator(self, n: int, x: Simplex) -> bool:
        """True iff the (n+1)-simplex x is s_0 of an n-simplex (namely ∂_1 x)."""
        return self.space.degeneracy(n, 0, self.space.face(n + 1, 1, x)) == x

    def canonical(self, n: int, letters: Sequence[Letter]) -> LoopWord:
        kept = [letter for letter in letters if not self.is_trivial_generator(n, letter[0])]
        return LoopWord(n, _free_reduce(kept))

    def generator(self, n: int, x: Simplex) -> LoopWord:
        """[x] in (ΩX)_n for an (n+1)-simplex x."""
        self._check_degree(n)
        return self.canonical(n, [(x, 1)])

    def generators(self, n: int) -> Iterator[Simplex]:
        """The free generators of (ΩX)_n: the non-s_0-degenerate (n+1)-simplices."""
        self._check_degree(n)
        return (
            x for x in self.space.simplices(n + 1) if not self.is_trivial_generator(n, x)
        )

    def identity(self, n: int) -> LoopWord:
        return LoopWord(n)

    def _check_same_degree(self, n: int, *words: LoopWord) -> None:
        for word in words:
            if word.degree != n:
                raise DegreeMismatchError(f"Word of degree {word.degree} used in degree {n}")

    def multiply(self, n: int, a: LoopWord, b: LoopWord) -> LoopWord:
        self._check_same_degree(n, a, b)
        return LoopWord(n, _free_reduce(a.letters + b.letters))

    def invert(self, n: int, a: LoopWord) -> LoopWord:
        self._check_same_degree(n, a)
        return LoopWord(n, tuple(_inverse_letters(a.letters)))

    def generator_face(self, n: int, i: int, x: Simplex) -> List[Letter]:
        """Raw image of [x] under ∂_i, before the s_0 relation is applied.

        ∂_0[x] = [∂_0 x]⁻¹[∂_1 x] and ∂_i[x] = [∂_{i+1} x] for i ≥ 1.
        """
        if i == 0:
            return [(self.space.face(n + 1, 0, x), -1), (self.space.face(n + 1, 1, x), 1)]
        return [(self.space.face(n + 1, i + 1, x), 1)]

    def generator_degeneracy(self, n: int, i: int, x: Simplex) -> List[Letter]:
        """Raw image of [x] under s_i, namely [s_{i+1} x]."""
        return [(self.space.degeneracy(n + 1, i + 1, x), 1)]

    def face(self, n: int, i: int, a: LoopWord) -> LoopWord:
        self._check_degree(n)
        self._check_same_degree(n, a)
        if n < 1 or not 0 <= i <= n:
            raise IndexRangeError(f"{self.name}: face index {i} out of range for degree {n}")
        letters: List[Letter] = []
        for x, sign in a.letters:
            image = self.generator_face(n, i, x)
            letters.extend(image if sign > 0 else _inverse_letters(image))
        return self.canonical(n - 1, letters)

    def degeneracy(self, n: int, i: int, a: LoopWord) -> LoopWord:
        self._check_degree(n, for_degeneracy=True)
        self._check_same_degree(n, a)
        if not 0 <= i <= n:
            raise IndexRangeError(f"{self.name}: degeneracy index {i} out of range for degree {n}")
        letters: List[Letter] = []
        for x, sign in a.letters:
            image = self.generator_degeneracy(n, i, x)
            letters.extend(image if sign > 0 else _inverse_letters(image))
        return self.canonical(n + 1, letters)

    def serialize(self, n: int, a: LoopWord) -> str:
        if a.is_identity:
            return "ε"
        return "·".join(
            ("+" if sign > 0 else "-") + self.space.serialize(n + 1, x) for x, sign in a.letters
        )

    def random_word(self, n: int, rng: np.random.Generator, length: int) -> LoopWord:
        """A seeded random word of at most ``length`` letters (free reduction may shorten it)."""
        pool = list(self.generators(n))
        if not pool:
            return self.identity(n)
        picks = rng.integers(0, len(pool), size=length)
        signs = rng.choice((-1, 1), size=length)
        return self.canonical(n, [(pool[int(p)], int(s)) for p, s in zip(picks, signs)])


class LoopGeneratorView(SimplicialSet):
    """The single-letter words of ΩX as a simplicial set.

    Structure maps return arbitrary words, so this view is only fit for checking
    identities on generators, which suffices since every map is a homomorphism.
    """

    def __init__(self, loop: LoopGroup):
        super().__init__(loop.cutoff)
        self.loop = loop
        self.name = f"{loop.name}-generators"

    def simplices(self, n: int) -> Iterator[LoopWord]:
        return (LoopWord(n, ((x, 1),)) for x in self.loop.generators(n))

    def face(self, n: int, i: int, x: LoopWord) -> LoopWord:
        return self.loop.face(n, i, x)

    def degeneracy(self, n: int, i: int, x: LoopWord) -> LoopWord:
        return self.loop.degeneracy(n, i, x)

    def serialize(self, n: int, x: LoopWord) -> str:
        return self.loop.serialize(n, x)


def canonical_twist_loop(loop: LoopGroup) -> TwistingFunction:
    """τ^X(x) = [x] for an n-simplex x, a word in (ΩX)_{n-1}."""
    return TwistingFunction(
        loop.space, loop, lambda n, x: loop.generator(n - 1, x), name=f"τ^{loop.space.name}"
    )


def loop_to_group(loop: LoopGroup, word: LoopWord) -> int:
    """The canonical morphism ΩBG → G: ⟨g_n|…|g_0⟩ ↦ g_n⁻¹, extended multiplicatively."""
    if not isinstance(loop.space, ClassifyingSpace):
        raise NotClassifyingSpaceError(f"{loop.space.name} is not a classifying space")
    group = loop.space.group
    n = word.degree
    result = group.identity(n)
    for x, sign in word.letters:
        top = x[0]
        factor = group.invert(n, top) if sign > 0 else top
        result = group.multiply(n, result, factor)
    return result
