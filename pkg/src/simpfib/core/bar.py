"""The classifying space BG of a simplicial group and its canonical twisting function.

A bar simplex of degree n is a tuple ``(g_{n-1}, ..., g_0)`` stored top entry
first, so ``entries[j]`` lies in level ``n-1-j`` of the group.
"""

import itertools
import logging
import math
from typing import Iterator, Tuple

from simpfib.core.errors import CutoffError, DegreeMismatchError, IndexRangeError
from simpfib.core.simplicial import SimplicialGroup, SimplicialHom, SimplicialMap, SimplicialSet
from simpfib.core.twisted import TwistingFunction

logger = logging.getLogger(__name__)

BarSimplex = Tuple[int, ...]


def bar_face(group: SimplicialGroup, i: int, simplex: BarSimplex) -> BarSimplex:
    """∂_i of a bar simplex.

    ∂_0 drops the top entry, ∂_n applies faces and drops the bottom entry, and a
    middle face merges ∂_0 g_{n-i} · g_{n-i-1} after applying ∂_{i-1}, …, ∂_1 above it.
    """
    n = len(simplex)
    if n < 1 or not 0 <= i <= n:
        raise IndexRangeError(f"Face index {i} out of range for a bar simplex of degree {n}")
    if i == 0:
        return simplex[1:]
    upper = tuple(group.face(n - 1 - j, i - 1 - j, simplex[j]) for j in range(i - 1))
    if i == n:
        return upper
    merged = group.multiply(
        n - i - 1, group.face(n - i, 0, simplex[i - 1]), simplex[i]
    )
    return upper + (merged,) + simplex[i + 1 :]


def bar_degeneracy(group: SimplicialGroup, i: int, simplex: BarSimplex) -> BarSimplex:
    """s_i of a bar simplex: insert 1_{n-i} with degeneracies applied above it."""
    n = len(simplex)
    if not 0 <= i <= n:
        raise IndexRangeError(f"Degeneracy index {i} out of range for a bar simplex of degree {n}")
    upper = tuple(group.degeneracy(n - 1 - j, i - 1 - j, simplex[j]) for j in range(i))
    return upper + (group.identity(n - i),) + simplex[i:]


def canonical_twist(group: SimplicialGroup, simplex: BarSimplex) -> int:
    """τ_G(g) = g_{n-1}⁻¹, an element of G_{n-1}."""
    n = len(simplex)
    if n < 1:
        raise DegreeMismatchError("The canonical twisting function needs a positive degree")
    return group.invert(n - 1, simplex[0])


class ClassifyingSpace(SimplicialSet):
    """BG with (BG)_n = G_{n-1} × … × G_0, enumerated lexicographically."""

    def __init__(self, group: SimplicialGroup, cutoff: int):
        super().__init__(cutoff)
        if group.cutoff < cutoff - 1:
            raise CutoffError(
                f"B{group.name} up to degree {cutoff} needs {group.name} up to level {cutoff - 1}"
            )
        self.group = group
        self.name = f"B{group.name}"

    def simplices(self, n: int) -> Iterator[BarSimplex]:
        self.check_degree(n)
        logger.debug("Enumerating %d simplices of %s in degree %d", self.count(n), self.name, n)
        ranges = [self.group.level(n - 1 - j).elements() for j in range(n)]
        return itertools.product(*ranges)

    def count(self, n: int) -> int:
        return math.prod(self.group.level(level).order for level in range(n))

    def face(self, n: int, i: int, x: BarSimplex) -> BarSimplex:
        self.check_face_index(n, i)
        return bar_face(self.group, i, x)

    def degeneracy(self, n: int, i: int, x: BarSimplex) -> BarSimplex:
        self.check_degeneracy_index(n, i)
        return bar_degeneracy(self.group, i, x)

    def is_degenerate(self, n: int, x: BarSimplex) -> bool:
        if n == 0:
            return False
        return any(bar_degeneracy(self.group, i, bar_face(self.group, i, x)) == x for i in range(n))

    def serialize(self, n: int, x: BarSimplex) -> str:
        if not x:
            return "[ ]"
        labels = (self.group.serialize(n - 1 - j, entry) for j, entry in enumerate(x))
        return "[" + "|".join(labels) + "]"

    def canonical_twist(self) -> TwistingFunction:
        return TwistingFunction(
            self, self.group, lambda n, x: canonical_twist(self.group, x), name=f"τ_{self.group.name}"
        )


def bar_view(group: SimplicialGroup, cutoff: int) -> ClassifyingSpace:
    return ClassifyingSpace(group, cutoff)


def bar_map(hom: SimplicialHom, cutoff: int) -> SimplicialMap:
    """Bf[g_{n-1}|…|g_0] = [f g_{n-1}|…|f g_0]."""
    source = ClassifyingSpace(hom.source, cutoff)
    target = ClassifyingSpace(hom.target, cutoff)

    def component(n: int, x: BarSimplex) -> BarSimplex:
        return tuple(hom(n - 1 - j, entry) for j, entry in enumerate(x))

    return SimplicialMap(source, target, component, name=f"B({source.name}->{target.name})")
