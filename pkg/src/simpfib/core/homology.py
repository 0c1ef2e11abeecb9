"""Normalized chain complexes and integer homology.

The chains in degree n are the free abelian group on the nondegenerate
n-simplices; the boundary is Σ(-1)^i ∂_i with degenerate faces dropped. Homology
is read off the Smith normal forms of the boundary matrices.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from simpfib.core.errors import CutoffError, SimplicialIdentityError
from simpfib.core.parallel import run_partitions
from simpfib.core.simplicial import Simplex, SimplicialSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    dimension: int
    betti: int
    torsion: Tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> Dict:
        return {"dimension": self.dimension, "betti": self.betti, "torsion": list(self.torsion)}


@dataclass
class ChainComplex:
    """Bases per degree ``0..cutoff`` and boundary matrices d_n: C_n → C_{n-1}."""

    space_name: str
    cutoff: int
    bases: List[List[Simplex]]
    boundaries: Dict[int, DomainMatrix] = field(default_factory=dict)

    def rank(self, n: int) -> int:
        return len(self.bases[n])


def _is_zero(matrix: DomainMatrix) -> bool:
    return all(value == 0 for row in matrix.to_list() for value in row)


def normalized_chains(space: SimplicialSet, max_dim: int) -> ChainComplex:
    """Build the normalized chain complex of ``space`` up to degree ``max_dim``.

    Raises:
        CutoffError: If ``max_dim`` exceeds the cutoff of ``space``.
        SimplicialIdentityError: If two consecutive boundaries do not compose to zero.
    """
    if max_dim > space.cutoff:
        raise CutoffError(f"{space.name} is only known up to degree {space.cutoff}")

    bases = [list(space.nondegenerate(n)) for n in range(max_dim + 1)]
    complex_ = ChainComplex(space.name, max_dim, bases)
    logger.debug(
        "Normalized chains of %s: ranks %s", space.name, [len(basis) for basis in bases]
    )

    for n in range(1, max_dim + 1):
        index = {x: row for row, x in enumerate(bases[n - 1])}
        entries = [[0] * len(bases[n]) for _ in bases[n - 1]]
        for column, x in enumerate(bases[n]):
            for i in range(n + 1):
                row = index.get(space.face(n, i, x))
                if row is not None:
                    entries[row][column] += -1 if i % 2 else 1
        complex_.boundaries[n] = DomainMatrix(
            [[ZZ(v) for v in row] for row in entries], (len(bases[n - 1]), len(bases[n])), ZZ
        )

    for n in range(2, max_dim + 1):
        lower, upper = complex_.boundaries[n - 1], complex_.boundaries[n]
        if 0 in lower.shape or 0 in upper.shape:
            continue
        if not _is_zero(lower.matmul(upper)):
            raise SimplicialIdentityError(f"d_{n - 1}∘d_{n} is not zero on {space.name}")
    return complex_


def _smith_data(matrix: DomainMatrix) -> Tuple[int, List[int]]:
    """Rank and the invariant factors greater than one."""
    if 0 in matrix.shape:
        return 0, []
    factors = [abs(int(d)) for d in invariant_factors(matrix)]
    nonzero = [d for d in factors if d != 0]
    return len(nonzero), sorted(d for d in nonzero if d > 1)


def homology_group(complex_: ChainComplex, i: int) -> HomologyGroup:
    """H_i as a Betti number and invariant factors; needs d_{i+1}, so i < cutoff."""
    if not 0 <= i < complex_.cutoff:
        raise CutoffError(
            f"H_{i} needs chains up to degree {i + 1}, the complex stops at {complex_.cutoff}"
        )
    rank_out = _smith_data(complex_.boundaries[i])[0] if i >= 1 else 0
    rank_in, torsion = _smith_data(complex_.boundaries[i + 1])
    betti = complex_.rank(i) - rank_out - rank_in
    return HomologyGroup(i, betti, tuple(torsion))


def homology_up_to(complex_: ChainComplex, max_dim: int, jobs: int = 1) -> List[HomologyGroup]:
    """H_0 … H_{max_dim-1}, one Smith form per degree on up to ``jobs`` workers."""
    return run_partitions([lambda i=i: homology_group(complex_, i) for i in range(max_dim)], jobs)


def homology_of(space: SimplicialSet, max_dim: int, jobs: int = 1) -> List[HomologyGroup]:
    return homology_up_to(normalized_chains(space, max_dim), max_dim, jobs)
