"""Truncated simplicial sets, simplicial groups and maps between them.

Every object carries an explicit ``cutoff`` N. Simplices exist in degrees
``0..N``; degeneracies are only defined out of degrees ``n < N``. Structure
maps take the degree of their argument explicitly: ``face(n, i, x)`` sends an
n-simplex to an (n-1)-simplex.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterator, Optional, Sequence, Tuple

from simpfib.core.errors import CutoffError, IndexRangeError
from simpfib.core.groups import FiniteGroup, GroupHom, make_direct_product

logger = logging.getLogger(__name__)

Simplex = Hashable


class SimplicialSet(ABC):
    """A simplicial set truncated at ``cutoff``."""

    name: str = "X"

    def __init__(self, cutoff: int):
        if cutoff < 0:
            raise CutoffError(f"Cutoff must be non-negative, got {cutoff}")
        self.cutoff = cutoff

    @abstractmethod
    def simplices(self, n: int) -> Iterator[Simplex]:
        """Enumerate the n-simplices in a deterministic order."""

    @abstractmethod
    def face(self, n: int, i: int, x: Simplex) -> Simplex:
        """The i-th face of the n-simplex ``x``."""

    @abstractmethod
    def degeneracy(self, n: int, i: int, x: Simplex) -> Simplex:
        """The i-th degeneracy of the n-simplex ``x``."""

    def count(self, n: int) -> int:
        return sum(1 for _ in self.simplices(n))

    def serialize(self, n: int, x: Simplex) -> str:
        return str(x)

    def check_degree(self, n: int, *, for_degeneracy: bool = False) -> None:
        top = self.cutoff - 1 if for_degeneracy else self.cutoff
        if not 0 <= n <= top:
            raise CutoffError(f"{self.name}: degree {n} is outside the cutoff {self.cutoff}")

    def check_face_index(self, n: int, i: int) -> None:
        self.check_degree(n)
        if n < 1 or not 0 <= i <= n:
            raise IndexRangeError(f"{self.name}: face index {i} out of range for degree {n}")

    def check_degeneracy_index(self, n: int, i: int) -> None:
        self.check_degree(n, for_degeneracy=True)
        if not 0 <= i <= n:
            raise IndexRangeError(f"{self.name}: degeneracy index {i} out of range for degree {n}")

    def is_degenerate(self, n: int, x: Simplex) -> bool:
        """True iff x = s_i(y) for some i; tested as x = s_i ∂_i x."""
        if n == 0:
            return False
        return any(self.degeneracy(n - 1, i, self.face(n, i, x)) == x for i in range(n))

    def nondegenerate(self, n: int) -> Iterator[Simplex]:
        return (x for x in self.simplices(n) if not self.is_degenerate(n, x))


def is_reduced(space: SimplicialSet) -> bool:
    """A simplicial set is reduced when it has exactly one vertex."""
    return space.count(0) == 1


def is_degenerate(space: SimplicialSet, n: int, x: Simplex) -> bool:
    return space.is_degenerate(n, x)


class DiscreteSimplicialSet(SimplicialSet):
    """The same point set in every degree with identity structure maps."""

    def __init__(self, points: Sequence[Simplex], cutoff: int, name: str = "D"):
        super().__init__(cutoff)
        self.points = tuple(points)
        self.name = name

    def simplices(self, n: int) -> Iterator[Simplex]:
        self.check_degree(n)
        return iter(self.points)

    def count(self, n: int) -> int:
        return len(self.points)

    def face(self, n: int, i: int, x: Simplex) -> Simplex:
        self.check_face_index(n, i)
        return x

    def degeneracy(self, n: int, i: int, x: Simplex) -> Simplex:
        self.check_degeneracy_index(n, i)
        return x


class GroupCarrier(ABC):
    """Degreewise group arithmetic together with face and degeneracy maps.

    Twisting functions take values in a carrier; both finite simplicial groups
    and loop groups provide one.
    """

    cutoff: int

    @abstractmethod
    def identity(self, n: int): ...

    @abstractmethod
    def multiply(self, n: int, a, b): ...

    @abstractmethod
    def invert(self, n: int, a): ...

    @abstractmethod
    def face(self, n: int, i: int, a): ...

    @abstractmethod
    def degeneracy(self, n: int, i: int, a): ...

    @abstractmethod
    def serialize(self, n: int, a) -> str: ...


class SimplicialGroup(GroupCarrier, SimplicialSet):
    """A simplicial group with finite levels, so it is also a simplicial set."""

    @abstractmethod
    def level(self, n: int) -> FiniteGroup: ...

    @abstractmethod
    def face_hom(self, n: int, i: int) -> GroupHom: ...

    @abstractmethod
    def degeneracy_hom(self, n: int, i: int) -> GroupHom: ...

    def simplices(self, n: int) -> Iterator[int]:
        return iter(self.level(n).elements())

    def count(self, n: int) -> int:
        return self.level(n).order

    def identity(self, n: int) -> int:
        return self.level(n).identity

    def multiply(self, n: int, a: int, b: int) -> int:
        return self.level(n).mul(a, b)

    def invert(self, n: int, a: int) -> int:
        return self.level(n).inv(a)

    def face(self, n: int, i: int, a: int) -> int:
        return self.face_hom(n, i)(a)

    def degeneracy(self, n: int, i: int, a: int) -> int:
        return self.degeneracy_hom(n, i)(a)

    def serialize(self, n: int, a: int) -> str:
        return self.level(n).label(a)

    def product_of(self, n: int, *factors: int) -> int:
        return self.level(n).product(factors)

    def face_power(self, n: int, power: int, a: int) -> int:
        """Apply ∂_0 ``power`` times to an element of level n."""
        for step in range(power):
            a = self.face(n - step, 0, a)
        return a

    def is_constant(self) -> bool:
        return False


class ConstantSimplicialGroup(SimplicialGroup):
    """An ordinary group viewed as a simplicial group with identity structure maps."""

    def __init__(self, group: FiniteGroup, cutoff: int):
        super().__init__(cutoff)
        self.group = group
        self.name = group.name
        self._identity_hom = GroupHom.identity(group)

    def level(self, n: int) -> FiniteGroup:
        self.check_degree(n)
        return self.group

    def face_hom(self, n: int, i: int) -> GroupHom:
        self.check_face_index(n, i)
        return self._identity_hom

    def degeneracy_hom(self, n: int, i: int) -> GroupHom:
        self.check_degeneracy_index(n, i)
        return self._identity_hom

    # Identity structure maps: skip the hom lookup on the hot path.
    def face(self, n: int, i: int, a: int) -> int:
        self.check_face_index(n, i)
        return a

    def degeneracy(self, n: int, i: int, a: int) -> int:
        self.check_degeneracy_index(n, i)
        return a

    def face_power(self, n: int, power: int, a: int) -> int:
        return a

    def is_constant(self) -> bool:
        return True


def constant_simplicial_group(group: FiniteGroup, cutoff: int) -> ConstantSimplicialGroup:
    return ConstantSimplicialGroup(group, cutoff)


class TableSimplicialGroup(SimplicialGroup):
    """A simplicial group given by explicit levels and structure homomorphisms.

    ``faces[(n, i)]`` is ∂_i out of level n and ``degeneracies[(n, i)]`` is s_i out
    of level n. Homomorphism laws are not enforced here; validators check them.
    """

    def __init__(
        self,
        levels: Sequence[FiniteGroup],
        faces: Dict[Tuple[int, int], GroupHom],
        degeneracies: Dict[Tuple[int, int], GroupHom],
        name: str = "G",
    ):
        super().__init__(len(levels) - 1)
        self.levels = tuple(levels)
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies)
        self.name = name
        logger.debug("%s: level orders %s", name, [group.order for group in self.levels])
        for n in range(1, len(levels)):
            for i in range(n + 1):
                if (n, i) not in self.faces:
                    raise CutoffError(f"{name}: missing face map ∂_{i} out of level {n}")
        for n in range(len(levels) - 1):
            for i in range(n + 1):
                if (n, i) not in self.degeneracies:
                    raise CutoffError(f"{name}: missing degeneracy map s_{i} out of level {n}")

    @classmethod
    def from_constant(cls, group: SimplicialGroup) -> "TableSimplicialGroup":
        """Materialise any simplicial group into editable tables."""
        levels = [group.level(n) for n in range(group.cutoff + 1)]
        faces = {
            (n, i): group.face_hom(n, i) for n in range(1, group.cutoff + 1) for i in range(n + 1)
        }
        degeneracies = {
            (n, i): group.degeneracy_hom(n, i) for n in range(group.cutoff) for i in range(n + 1)
        }
        return cls(levels, faces, degeneracies, name=group.name)

    def with_face(self, n: int, i: int, hom: GroupHom) -> "TableSimplicialGroup":
        faces = dict(self.faces)
        faces[(n, i)] = hom
        return TableSimplicialGroup(self.levels, faces, self.degeneracies, name=self.name)

    def level(self, n: int) -> FiniteGroup:
        self.check_degree(n)
        return self.levels[n]

    def face_hom(self, n: int, i: int) -> GroupHom:
        self.check_face_index(n, i)
        return self.faces[(n, i)]

    def degeneracy_hom(self, n: int, i: int) -> GroupHom:
        self.check_degeneracy_index(n, i)
        return self.degeneracies[(n, i)]


def _product_hom(first: GroupHom, second: GroupHom, source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    m_src, m_tgt = second.source.order, second.target.order
    image = tuple(
        first(x // m_src) * m_tgt + second(x % m_src) for x in range(source.order)
    )
    return GroupHom(source, target, image)


def direct_product(first: SimplicialGroup, second: SimplicialGroup) -> SimplicialGroup:
    """Levelwise direct product of two simplicial groups."""
    cutoff = min(first.cutoff, second.cutoff)
    if isinstance(first, ConstantSimplicialGroup) and isinstance(second, ConstantSimplicialGroup):
        return ConstantSimplicialGroup(make_direct_product(first.group, second.group), cutoff)
    levels = [make_direct_product(first.level(n), second.level(n)) for n in range(cutoff + 1)]
    faces = {
        (n, i): _product_hom(first.face_hom(n, i), second.face_hom(n, i), levels[n], levels[n - 1])
        for n in range(1, cutoff + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, i): _product_hom(
            first.degeneracy_hom(n, i), second.degeneracy_hom(n, i), levels[n], levels[n + 1]
        )
        for n in range(cutoff)
        for i in range(n + 1)
    }
    return TableSimplicialGroup(levels, faces, degeneracies, name=f"{first.name}x{second.name}")


@dataclass(frozen=True)
class SimplicialHom:
    """A levelwise family of group homomorphisms between simplicial groups."""

    source: SimplicialGroup
    target: SimplicialGroup
    components: Tuple[GroupHom, ...]

    @classmethod
    def constant(cls, source: SimplicialGroup, target: SimplicialGroup, hom: GroupHom) -> "SimplicialHom":
        cutoff = min(source.cutoff, target.cutoff)
        return cls(source, target, (hom,) * (cutoff + 1))

    @property
    def cutoff(self) -> int:
        return len(self.components) - 1

    def component(self, n: int) -> GroupHom:
        if not 0 <= n < len(self.components):
            raise CutoffError(f"No component at level {n} (cutoff {self.cutoff})")
        return self.components[n]

    def __call__(self, n: int, a: int) -> int:
        return self.components[n](a)

    def first_failure(self) -> Optional[str]:
        """Describe the first violated law, or return None."""
        for n, hom in enumerate(self.components):
            if hom.source != self.source.level(n) or hom.target != self.target.level(n):
                return f"level {n}: component has the wrong source or target"
            pair = hom.first_failure()
            if pair is not None:
                x, y = pair
                return f"level {n}: f({x}·{y}) != f({x})·f({y})"
        for n in range(1, self.cutoff + 1):
            for i in range(n + 1):
                for a in self.source.level(n).elements():
                    if self.target.face(n, i, self(n, a)) != self(n - 1, self.source.face(n, i, a)):
                        return f"level {n}: ∂_{i} f({a}) != f(∂_{i} {a})"
        for n in range(self.cutoff):
            for i in range(n + 1):
                for a in self.source.level(n).elements():
                    if self.target.degeneracy(n, i, self(n, a)) != self(
                        n + 1, self.source.degeneracy(n, i, a)
                    ):
                        return f"level {n}: s_{i} f({a}) != f(s_{i} {a})"
        return None


class SimplicialMap:
    """A degreewise map of simplicial sets; commutation is checked by validators."""

    def __init__(
        self,
        source: SimplicialSet,
        target: SimplicialSet,
        component: Callable[[int, Simplex], Simplex],
        name: str = "f",
    ):
        self.source = source
        self.target = target
        self._component = component
        self.name = name

    @property
    def cutoff(self) -> int:
        return min(self.source.cutoff, self.target.cutoff)

    def __call__(self, n: int, x: Simplex) -> Simplex:
        return self._component(n, x)

    @classmethod
    def identity(cls, space: SimplicialSet) -> "SimplicialMap":
        return cls(space, space, lambda n, x: x, name=f"id_{space.name}")

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """Return ``self ∘ first``."""
        return SimplicialMap(
            first.source,
            self.target,
            lambda n, x: self(n, first(n, x)),
            name=f"{self.name}∘{first.name}",
        )
