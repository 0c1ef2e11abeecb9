"""Exception types raised by the simpfib engine.

Law violations found by validators are reported as data; these exceptions are
for malformed input and for computations that cannot proceed.
"""

from typing import Optional


class SimpfibError(ValueError):
    """Base class for all simpfib errors."""


class GroupTableError(SimpfibError):
    """A multiplication table does not define a group."""


class HomomorphismError(SimpfibError):
    """A map between groups is not a homomorphism (or not of the required kind)."""


class SpecError(SimpfibError):
    """A group, SES or section spec could not be parsed or is inconsistent."""


class CutoffError(SimpfibError):
    """A computation needs data above the truncation cutoff of a view."""


class DegreeMismatchError(SimpfibError):
    """Two operands live in different degrees."""


class IndexRangeError(SimpfibError):
    """A face or degeneracy index is out of range for the given degree."""


class NotReducedError(SimpfibError):
    """The loop group was requested for a simplicial set that is not reduced."""


class NotClassifyingSpaceError(SimpfibError):
    """An operation defined only over a classifying space got another space."""


class SectionError(SimpfibError):
    """A section of a projection is missing, not a section, or not normalized."""


class SectionNotMultiplicativeError(SectionError):
    """The semidirect formulas were requested for a non-multiplicative section."""


class ActionError(SimpfibError):
    """A group action on a simplicial set fails its axioms."""


class TwistingAxiomError(SimpfibError):
    """A twisting function fails one of the four twisting axioms."""


class SimplicialIdentityError(SimpfibError):
    """A view fails the simplicial identities where they were required to hold."""


class NotInKernelError(SimpfibError):
    """A fibre entry computed in G does not lie in the image of the inclusion.

    Attributes:
        level: Simplicial level of the offending element.
        position: Entry position inside the bar simplex (0 is the top entry).
    """

    def __init__(self, message: str, level: int, position: Optional[int] = None):
        super().__init__(message)
        self.level = level
        self.position = position
