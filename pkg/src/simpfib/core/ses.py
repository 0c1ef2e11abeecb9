"""Short exact sequences 1 → K → G → L → 1 of simplicial groups."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from simpfib.core.groups import (
    FiniteGroup,
    GroupHom,
    SemidirectProduct,
    quotient_group,
    subgroup,
)
from simpfib.core.simplicial import ConstantSimplicialGroup, SimplicialGroup, SimplicialHom

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShortExactSequence:
    """K --ι--> G --π--> L with levelwise inclusion and projection.

    ``section_hint`` carries a section table that came with the sequence, such as
    the multiplicative section of a semidirect product.
    """

    kernel: SimplicialGroup
    group: SimplicialGroup
    quotient: SimplicialGroup
    inclusion: SimplicialHom
    projection: SimplicialHom
    name: str = "SES"
    section_hint: Optional[Tuple[int, ...]] = None

    @property
    def cutoff(self) -> int:
        return min(self.inclusion.cutoff, self.projection.cutoff)

    def is_constant(self) -> bool:
        return all(part.is_constant() for part in (self.kernel, self.group, self.quotient))

    def describe(self) -> str:
        return f"{self.kernel.name} → {self.group.name} → {self.quotient.name}"


def constant_ses(
    kernel: FiniteGroup,
    group: FiniteGroup,
    quotient: FiniteGroup,
    inclusion: GroupHom,
    projection: GroupHom,
    cutoff: int,
    name: str = "SES",
    section_hint: Optional[Sequence[int]] = None,
) -> ShortExactSequence:
    """Sequence of constant simplicial groups from one sequence of finite groups."""
    K = ConstantSimplicialGroup(kernel, cutoff)
    G = ConstantSimplicialGroup(group, cutoff)
    L = ConstantSimplicialGroup(quotient, cutoff)
    return ShortExactSequence(
        K,
        G,
        L,
        SimplicialHom.constant(K, G, inclusion),
        SimplicialHom.constant(G, L, projection),
        name=name,
        section_hint=tuple(section_hint) if section_hint is not None else None,
    )


def ses_from_normal_subgroup(
    group: FiniteGroup, members: Iterable[int], cutoff: int, name: str = "SES"
) -> ShortExactSequence:
    """K ⊴ G → G → G/K, with the quotient computed by coset enumeration."""
    members = list(members)
    kernel, inclusion = subgroup(group, members, name="K")
    quotient, projection = quotient_group(group, members, name="L")
    logger.debug("Quotient of %s by a subgroup of order %d", group.name, kernel.order)
    return constant_ses(kernel, group, quotient, inclusion, projection, cutoff, name=name)


def ses_from_semidirect(product: SemidirectProduct, cutoff: int, name: str = "SES") -> ShortExactSequence:
    """K → K⋉L → L, remembering the multiplicative section l ↦ (1, l)."""
    return constant_ses(
        product.kernel,
        product.group,
        product.quotient,
        product.inclusion,
        product.projection,
        cutoff,
        name=name,
        section_hint=product.section,
    )
