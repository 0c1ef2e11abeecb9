"""Twisting functions, simplicial actions and twisted Cartesian products."""

import itertools
import logging
from typing import Callable, Dict, Iterator, NamedTuple, Optional, Tuple

from simpfib.core.errors import ActionError, CutoffError, TwistingAxiomError
from simpfib.core.simplicial import (
    GroupCarrier,
    SimplicialGroup,
    SimplicialMap,
    SimplicialSet,
    Simplex,
)

logger = logging.getLogger(__name__)


class TwistedSimplex(NamedTuple):
    fibre: Simplex
    base: Simplex


class TwistingFunction:
    """A degree-lowering map τ: B_n → Γ_{n-1} for n ≥ 1.

    Args:
        base: The base simplicial set B.
        carrier: Where the values live (a simplicial group or a loop group).
        value: ``value(n, b)`` for an n-simplex ``b``.
    """

    def __init__(
        self,
        base: SimplicialSet,
        carrier: GroupCarrier,
        value: Callable[[int, Simplex], object],
        name: str = "τ",
    ):
        self.base = base
        self.carrier = carrier
        self._value = value
        self.name = name
        self._overrides: Dict[Tuple[int, Simplex], object] = {}

    def __call__(self, n: int, b: Simplex):
        if n < 1:
            raise CutoffError(f"{self.name} is only defined in positive degrees")
        override = self._overrides.get((n, b))
        if override is not None:
            return override
        return self._value(n, b)

    def override(self, n: int, b: Simplex, value) -> "TwistingFunction":
        """Copy of this function with a single value replaced."""
        twisted = TwistingFunction(self.base, self.carrier, self._value, name=f"{self.name}'")
        twisted._overrides = dict(self._overrides)
        twisted._overrides[(n, b)] = value
        return twisted


def trivial_twist(base: SimplicialSet, carrier: GroupCarrier) -> TwistingFunction:
    """The constant identity twist; the twisted product is then the Cartesian product."""
    return TwistingFunction(base, carrier, lambda n, b: carrier.identity(n - 1), name="1")


class SimplicialAction:
    """A left action Γ_n × F_n → F_n of a group carrier on a simplicial set."""

    def __init__(
        self,
        carrier: GroupCarrier,
        space: SimplicialSet,
        apply: Callable[[int, object, Simplex], Simplex],
        name: str = "·",
    ):
        self.carrier = carrier
        self.space = space
        self._apply = apply
        self.name = name

    def __call__(self, n: int, gamma, f: Simplex) -> Simplex:
        return self._apply(n, gamma, f)


def left_multiplication(group: SimplicialGroup) -> SimplicialAction:
    """A simplicial group acting on itself by left multiplication."""
    return SimplicialAction(group, group, group.multiply, name=f"{group.name}·")


class TwistedProduct(SimplicialSet):
    """F ×_τ B: ∂_0(f, b) = (τ(b)·∂_0 f, ∂_0 b); every other structure map is componentwise."""

    def __init__(
        self,
        fibre: SimplicialSet,
        action: SimplicialAction,
        twist: TwistingFunction,
        base: SimplicialSet,
        cutoff: Optional[int] = None,
    ):
        top = min(fibre.cutoff, base.cutoff)
        super().__init__(top if cutoff is None else min(cutoff, top))
        self.fibre = fibre
        self.action = action
        self.twist = twist
        self.base = base
        self.name = f"{fibre.name}x_{twist.name}{base.name}"

    def simplices(self, n: int) -> Iterator[TwistedSimplex]:
        self.check_degree(n)
        logger.debug("Enumerating %d simplices of %s in degree %d", self.count(n), self.name, n)
        return (
            TwistedSimplex(f, b)
            for f, b in itertools.product(self.fibre.simplices(n), self.base.simplices(n))
        )

    def count(self, n: int) -> int:
        return self.fibre.count(n) * self.base.count(n)

    def face(self, n: int, i: int, x: TwistedSimplex) -> TwistedSimplex:
        self.check_face_index(n, i)
        f, b = x
        if i == 0:
            twisted = self.action(n - 1, self.twist(n, b), self.fibre.face(n, 0, f))
            return TwistedSimplex(twisted, self.base.face(n, 0, b))
        return TwistedSimplex(self.fibre.face(n, i, f), self.base.face(n, i, b))

    def degeneracy(self, n: int, i: int, x: TwistedSimplex) -> TwistedSimplex:
        self.check_degeneracy_index(n, i)
        f, b = x
        return TwistedSimplex(self.fibre.degeneracy(n, i, f), self.base.degeneracy(n, i, b))

    def serialize(self, n: int, x: TwistedSimplex) -> str:
        return f"({self.fibre.serialize(n, x.fibre)}, {self.base.serialize(n, x.base)})"

    def projection(self) -> SimplicialMap:
        return SimplicialMap(self, self.base, lambda n, x: x.base, name="pr")


def twisted_product(
    fibre: SimplicialSet,
    action: SimplicialAction,
    twist: TwistingFunction,
    base: SimplicialSet,
    cutoff: int,
    *,
    validate: bool = True,
    action_elements: Optional[Callable[[int], list]] = None,
) -> TwistedProduct:
    """Build F ×_τ B, refusing inputs whose twist or action fails its axioms.

    Raises:
        TwistingAxiomError: If ``twist`` violates a twisting axiom.
        ActionError: If ``action`` violates an action axiom.
    """
    if validate:
        # Imported here: validators depend on this module.
        from simpfib.validators.twisting import validate_action, validate_twisting

        twisting_report = validate_twisting(twist, cutoff)
        if not twisting_report.passed:
            first = twisting_report.failures()[0]
            raise TwistingAxiomError(f"{first.name} (dim {first.dimension}): {first.counterexample}")
        action_report = validate_action(action, cutoff - 1, elements=action_elements)
        if not action_report.passed:
            first = action_report.failures()[0]
            raise ActionError(f"{first.name} (dim {first.dimension}): {first.counterexample}")
    return TwistedProduct(fibre, action, twist, base, cutoff)


def basepoint_section(product: TwistedProduct, basepoint: Simplex) -> SimplicialMap:
    """σ(b) = (s_0^n basepoint, b), the canonical candidate pseudo-cross section."""

    def component(n: int, b: Simplex) -> TwistedSimplex:
        f = basepoint
        for k in range(n):
            f = product.fibre.degeneracy(k, 0, f)
        return TwistedSimplex(f, b)

    return SimplicialMap(product.base, product, component, name="σ")
