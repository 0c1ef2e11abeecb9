"""Finite groups given by multiplication tables.

Elements are dense integer ids ``0..order-1``. Every group carries its full
multiplication table, an inverse table and display labels, so equality of
elements is integer equality and enumeration is ``range(order)``.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from sympy import factorint
from sympy.combinatorics import Permutation

from simpfib.core.errors import GroupTableError, HomomorphismError, SectionError, SpecError

logger = logging.getLogger(__name__)

ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 10_000
MAX_ORDER = 720
MAX_SYMMETRIC_DEGREE = 5


@dataclass(frozen=True)
class GroupLimits:
    """Size limits and associativity sampling applied to groups built from specs."""

    exhaustive_limit: int = ASSOCIATIVITY_EXHAUSTIVE_LIMIT
    samples: int = ASSOCIATIVITY_SAMPLES
    max_order: int = MAX_ORDER
    max_symmetric_degree: int = MAX_SYMMETRIC_DEGREE


DEFAULT_LIMITS = GroupLimits()


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group stored as a multiplication table over element ids."""

    mul_table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverse: Tuple[int, ...]
    labels: Tuple[str, ...]
    name: str = field(default="G", compare=False)

    @classmethod
    def from_table(
        cls,
        table: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        name: str = "G",
        *,
        exhaustive_limit: int = ASSOCIATIVITY_EXHAUSTIVE_LIMIT,
        samples: int = ASSOCIATIVITY_SAMPLES,
        seed: int = 0,
        max_order: int = MAX_ORDER,
    ) -> "FiniteGroup":
        """Build and validate a group from a row-major multiplication table.

        Associativity is checked on every triple when the order is at most
        ``exhaustive_limit`` and on ``samples`` seeded random triples above that.

        Raises:
            GroupTableError: If the table is malformed or not a group table.
        """
        order = len(table)
        if order == 0:
            raise GroupTableError("A group needs at least one element")
        if order > max_order:
            raise GroupTableError(f"Group order {order} exceeds the limit {max_order}")

        rows: List[Tuple[int, ...]] = []
        for a, row in enumerate(table):
            if len(row) != order:
                raise GroupTableError(f"Row {a} has {len(row)} entries, expected {order}")
            for value in row:
                if not isinstance(value, (int, np.integer)) or not 0 <= value < order:
                    raise GroupTableError(f"Row {a} contains invalid element id {value!r}")
            rows.append(tuple(int(v) for v in row))

        everything = tuple(range(order))
        identity = next(
            (
                e
                for e in everything
                if rows[e] == everything and all(rows[a][e] == a for a in everything)
            ),
            None,
        )
        if identity is None:
            raise GroupTableError("Table has no two-sided identity")

        inverse: List[int] = []
        for a in everything:
            b = next((b for b in everything if rows[a][b] == identity), None)
            if b is None or rows[b][a] != identity:
                raise GroupTableError(f"Element {a} has no two-sided inverse")
            inverse.append(b)

        _check_associativity(rows, exhaustive_limit, samples, seed)

        if labels is None:
            labels = [str(a) for a in everything]
        if len(labels) != order:
            raise GroupTableError(f"Expected {order} labels, got {len(labels)}")

        return cls(
            mul_table=tuple(rows),
            identity=identity,
            inverse=tuple(inverse),
            labels=tuple(str(label) for label in labels),
            name=name,
        )

    @property
    def order(self) -> int:
        return len(self.mul_table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def product(self, factors: Iterable[int]) -> int:
        result = self.identity
        for factor in factors:
            result = self.mul_table[result][factor]
        return result

    def power(self, a: int, exponent: int) -> int:
        base = a if exponent >= 0 else self.inverse[a]
        return self.product(itertools.repeat(base, abs(exponent)))

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        """Return the element id carrying ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise SpecError(f"Group {self.name} has no element labelled {label!r}") from None

    def element_order(self, a: int) -> int:
        current, steps = a, 1
        while current != self.identity:
            current = self.mul_table[current][a]
            steps += 1
        return steps

    def order_profile(self) -> Tuple[int, ...]:
        """Sorted element orders; an isomorphism invariant used as a cheap oracle."""
        return tuple(sorted(self.element_order(a) for a in self.elements()))

    def is_abelian(self) -> bool:
        return all(
            self.mul_table[a][b] == self.mul_table[b][a]
            for a in self.elements()
            for b in range(a + 1, self.order)
        )

    def generated_subgroup(self, generators: Iterable[int]) -> Set[int]:
        """Closure of ``generators`` under multiplication (a subgroup, since finite)."""
        subgroup = {self.identity}
        frontier = list(subgroup)
        gens = list(set(generators))
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = self.mul_table[a][g]
                if b not in subgroup:
                    subgroup.add(b)
                    frontier.append(b)
        return subgroup


def _check_associativity(
    rows: Sequence[Tuple[int, ...]], exhaustive_limit: int, samples: int, seed: int
) -> None:
    order = len(rows)
    if order <= exhaustive_limit:
        triples: Iterable[Tuple[int, int, int]] = itertools.product(range(order), repeat=3)
    else:
        rng = np.random.default_rng(seed)
        drawn = rng.integers(0, order, size=(samples, 3))
        triples = (tuple(int(v) for v in row) for row in drawn)  # type: ignore[misc]
        logger.debug("Sampling %d triples for associativity (order %d)", samples, order)

    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise GroupTableError(f"Table is not associative at ({a}, {b}, {c})")


@dataclass(frozen=True)
class GroupHom:
    """A map of element ids ``source -> target``; the homomorphism law is checked on demand."""

    source: FiniteGroup
    target: FiniteGroup
    image: Tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source.order:
            raise HomomorphismError(
                f"Map has {len(self.image)} values but the source has order {self.source.order}"
            )
        if any(not 0 <= value < self.target.order for value in self.image):
            raise HomomorphismError("Map sends an element outside the target group")

    def __call__(self, a: int) -> int:
        return self.image[a]

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupHom":
        return cls(group, group, tuple(group.elements()))

    @classmethod
    def trivial(cls, source: FiniteGroup, target: FiniteGroup) -> "GroupHom":
        return cls(source, target, (target.identity,) * source.order)

    def compose(self, other: "GroupHom") -> "GroupHom":
        """Return ``self ∘ other``."""
        return GroupHom(other.source, self.target, tuple(self.image[v] for v in other.image))

    def first_failure(self) -> Optional[Tuple[int, int]]:
        """Return a pair ``(x, y)`` with f(xy) != f(x)f(y), or None for a homomorphism."""
        src, tgt = self.source, self.target
        for x in src.elements():
            for y in src.elements():
                if self.image[src.mul(x, y)] != tgt.mul(self.image[x], self.image[y]):
                    return x, y
        return None

    def is_homomorphism(self) -> bool:
        return self.first_failure() is None

    def kernel(self) -> Tuple[int, ...]:
        return tuple(a for a in self.source.elements() if self.image[a] == self.target.identity)

    def image_set(self) -> Set[int]:
        return set(self.image)

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.order

    def preimage_table(self) -> Dict[int, int]:
        """Inverse lookup for an injective map."""
        if not self.is_injective():
            raise HomomorphismError("Only injective maps can be inverted on their image")
        return {value: a for a, value in enumerate(self.image)}


@dataclass(frozen=True)
class SemidirectProduct:
    """K ⋉ L together with its inclusion, projection and multiplicative section."""

    group: FiniteGroup
    kernel: FiniteGroup
    quotient: FiniteGroup
    inclusion: GroupHom
    projection: GroupHom
    section: Tuple[int, ...]


def make_cyclic(
    n: int, labels: Optional[Sequence[str]] = None, *, max_order: int = MAX_ORDER
) -> FiniteGroup:
    """Cyclic group ℤ/n with additive labels ``0..n-1``."""
    if n < 1:
        raise SpecError(f"Cyclic group order must be positive, got {n}")
    if n > max_order:
        raise SpecError(f"Cyclic group order {n} exceeds the limit {max_order}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup.from_table(table, labels=labels, name=f"Z/{n}", max_order=max_order)


def make_trivial() -> FiniteGroup:
    return FiniteGroup.from_table([[0]], labels=["e"], name="1")


def make_symmetric(
    n: int, labels: Optional[Sequence[str]] = None, *, max_degree: int = MAX_SYMMETRIC_DEGREE
) -> FiniteGroup:
    """Symmetric group on ``n`` letters, labelled in cycle notation.

    Products compose right to left: ``x·y`` applies ``y`` first, so
    ``(12)·(123) = (23)``.
    """
    if not 1 <= n <= max_degree:
        raise SpecError(f"Symmetric group degree must be in 1..{max_degree}, got {n}")
    perms = [Permutation(list(p)) for p in itertools.permutations(range(n))]
    index = {tuple(p.array_form): i for i, p in enumerate(perms)}
    # sympy's p*q applies p first, so x∘y is y*x.
    table = [[index[tuple((perms[b] * perms[a]).array_form)] for b in range(len(perms))]
             for a in range(len(perms))]
    if labels is None:
        labels = [_cycle_label(p) for p in perms]
    return FiniteGroup.from_table(table, labels=labels, name=f"S{n}")


def _cycle_label(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "e"
    return "".join("(" + "".join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


def make_dihedral(
    order: int, labels: Optional[Sequence[str]] = None, *, max_order: int = MAX_ORDER
) -> FiniteGroup:
    """Dihedral group of the given (even) order; element ``a + n*b`` is r^a s^b."""
    if order < 2 or order % 2:
        raise SpecError(f"Dihedral group order must be even and positive, got {order}")
    if order > max_order:
        raise SpecError(f"Dihedral group order {order} exceeds the limit {max_order}")
    n = order // 2

    def mul(x: int, y: int) -> int:
        a, b = x % n, x // n
        c, d = y % n, y // n
        rotation = (a + (c if b == 0 else -c)) % n
        return rotation + n * ((b + d) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    if labels is None:
        labels = [_dihedral_label(x % n, x // n) for x in range(order)]
    return FiniteGroup.from_table(table, labels=labels, name=f"D{order}", max_order=max_order)


def _dihedral_label(a: int, b: int) -> str:
    rotation = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
    reflection = "s" if b else ""
    return (rotation + reflection) or "e"


def make_direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """Direct product; the pair ``(a, b)`` has id ``a*|second| + b``."""
    m = second.order
    size = first.order * m
    if size > MAX_ORDER:
        raise SpecError(f"Direct product order {size} exceeds the limit {MAX_ORDER}")
    table = [
        [
            first.mul(x // m, y // m) * m + second.mul(x % m, y % m)
            for y in range(size)
        ]
        for x in range(size)
    ]
    labels = [f"({first.label(x // m)},{second.label(x % m)})" for x in range(size)]
    return FiniteGroup.from_table(table, labels=labels, name=f"{first.name}x{second.name}")


def make_klein() -> FiniteGroup:
    return make_direct_product(make_cyclic(2), make_cyclic(2))


def make_semidirect(
    kernel: FiniteGroup, quotient: FiniteGroup, action: Sequence[Sequence[int]]
) -> SemidirectProduct:
    """Semidirect product K ⋉ L with (k,l)·(k',l') = (k (l∗k'), l l').

    ``action[l][k]`` is ``l∗k``. The pair ``(k, l)`` has id ``k*|L| + l``.

    Raises:
        HomomorphismError: If ``action`` is not a homomorphism L → Aut(K).
    """
    _validate_action(kernel, quotient, action)
    m = quotient.order
    size = kernel.order * m
    if size > MAX_ORDER:
        raise SpecError(f"Semidirect product order {size} exceeds the limit {MAX_ORDER}")

    def mul(x: int, y: int) -> int:
        k, l = divmod(x, m)
        k2, l2 = divmod(y, m)
        return kernel.mul(k, action[l][k2]) * m + quotient.mul(l, l2)

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    labels = [f"({kernel.label(x // m)},{quotient.label(x % m)})" for x in range(size)]
    group = FiniteGroup.from_table(
        table, labels=labels, name=f"{kernel.name}⋊{quotient.name}"
    )
    inclusion = GroupHom(kernel, group, tuple(k * m + quotient.identity for k in kernel.elements()))
    projection = GroupHom(group, quotient, tuple(x % m for x in group.elements()))
    section = tuple(kernel.identity * m + l for l in quotient.elements())
    return SemidirectProduct(group, kernel, quotient, inclusion, projection, section)


def _validate_action(
    kernel: FiniteGroup, quotient: FiniteGroup, action: Sequence[Sequence[int]]
) -> None:
    if len(action) != quotient.order:
        raise HomomorphismError(
            f"Action needs one automorphism per element of {quotient.name}, got {len(action)}"
        )
    for l, automorphism in enumerate(action):
        hom = GroupHom(kernel, kernel, tuple(automorphism))
        if not hom.is_injective() or not hom.is_homomorphism():
            raise HomomorphismError(f"Action of {quotient.label(l)} is not an automorphism")
    if tuple(action[quotient.identity]) != tuple(kernel.elements()):
        raise HomomorphismError("The identity of L must act trivially")
    for l in quotient.elements():
        for l2 in quotient.elements():
            composite = action[quotient.mul(l, l2)]
            for k in kernel.elements():
                if composite[k] != action[l][action[l2][k]]:
                    raise HomomorphismError(
                        f"Action is not a homomorphism at ({quotient.label(l)}, "
                        f"{quotient.label(l2)})"
                    )


def normalize_section(group: FiniteGroup, rho: Sequence[int], quotient_identity: int) -> Tuple[int, ...]:
    """σ(l) = ρ(l)·ρ(1)⁻¹, which forces σ(1) = 1."""
    correction = group.inv(rho[quotient_identity])
    return tuple(group.mul(value, correction) for value in rho)


def coset_section(projection: GroupHom) -> Tuple[int, ...]:
    """Deterministic set-theoretic section of a surjection.

    The minimal element id of each fibre is chosen, then the choice is
    normalized so that the identity maps to the identity.

    Raises:
        SectionError: If ``projection`` is not surjective.
    """
    if not projection.is_surjective():
        raise SectionError("Cannot build a section of a non-surjective map")
    rho: Dict[int, int] = {}
    for g in projection.source.elements():
        rho.setdefault(projection(g), g)
    ordered = [rho[l] for l in projection.target.elements()]
    return normalize_section(projection.source, ordered, projection.target.identity)


def subgroup(group: FiniteGroup, members: Iterable[int], name: str = "K") -> Tuple[FiniteGroup, GroupHom]:
    """Subgroup on ``members`` (sorted by id) together with its inclusion.

    Raises:
        SpecError: If ``members`` is not a subgroup.
    """
    elements = sorted(set(members))
    position = {g: i for i, g in enumerate(elements)}
    if group.identity not in position:
        raise SpecError("Subgroup must contain the identity")
    table = []
    for a in elements:
        row = []
        for b in elements:
            c = group.mul(a, b)
            if c not in position:
                raise SpecError(
                    f"Subset is not closed: {group.label(a)}·{group.label(b)} = {group.label(c)}"
                )
            row.append(position[c])
        table.append(row)
    sub = FiniteGroup.from_table(table, labels=[group.label(g) for g in elements], name=name)
    return sub, GroupHom(sub, group, tuple(elements))


def quotient_group(group: FiniteGroup, normal: Iterable[int], name: str = "L") -> Tuple[FiniteGroup, GroupHom]:
    """Quotient by a normal subgroup via coset enumeration.

    Cosets are numbered in order of their minimal element id and labelled by that
    representative.

    Raises:
        SpecError: If ``normal`` is not a normal subgroup.
    """
    members = set(normal)
    subgroup(group, members)
    for g in group.elements():
        for k in members:
            if group.mul(group.mul(g, k), group.inv(g)) not in members:
                raise SpecError(f"Subgroup is not normal: conjugating by {group.label(g)} leaves it")

    coset_of: Dict[int, int] = {}
    representatives: List[int] = []
    for g in group.elements():
        if g in coset_of:
            continue
        index = len(representatives)
        representatives.append(g)
        for k in members:
            coset_of[group.mul(g, k)] = index

    table = [
        [coset_of[group.mul(a, b)] for b in representatives] for a in representatives
    ]
    labels = [group.label(r) for r in representatives]
    quotient = FiniteGroup.from_table(table, labels=labels, name=name)
    projection = GroupHom(group, quotient, tuple(coset_of[g] for g in group.elements()))
    return quotient, projection


def commutator_subgroup(group: FiniteGroup) -> Set[int]:
    commutators = {
        group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b)))
        for a in group.elements()
        for b in group.elements()
    }
    return group.generated_subgroup(commutators)


def abelian_invariants(group: FiniteGroup) -> List[int]:
    """Invariant factors d_1 | d_2 | … of the abelianization G/[G,G].

    The p-primary parts are read off from the number of elements killed by p^k,
    so the result does not depend on any presentation of the group.
    """
    abelian, _ = quotient_group(group, commutator_subgroup(group), name=f"{group.name}ab")
    size = abelian.order
    if size == 1:
        return []

    orders = [abelian.element_order(a) for a in abelian.elements()]
    exponents_by_prime: Dict[int, List[int]] = {}
    for prime, multiplicity in factorint(size).items():
        log_counts = [0]
        k = 0
        while log_counts[-1] < multiplicity:
            k += 1
            killed = sum(1 for o in orders if (prime**k) % o == 0)
            log_counts.append(_exact_log(killed, prime))
        at_least = [log_counts[i] - log_counts[i - 1] for i in range(1, len(log_counts))]
        at_least.append(0)
        exponents: List[int] = []
        for e in range(1, len(at_least)):
            exponents.extend([e] * (at_least[e - 1] - at_least[e]))
        exponents_by_prime[prime] = sorted(exponents, reverse=True)

    length = max(len(e) for e in exponents_by_prime.values())
    factors = []
    for i in range(length):
        d = 1
        for prime, exponents in exponents_by_prime.items():
            if i < len(exponents):
                d *= prime ** exponents[i]
        factors.append(d)
    return sorted(factors)


def _exact_log(value: int, base: int) -> int:
    result = 0
    while value > 1:
        value, remainder = divmod(value, base)
        if remainder:
            raise GroupTableError("p-torsion count is not a prime power")
        result += 1
    return result
