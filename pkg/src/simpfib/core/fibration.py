"""BG as a twisted Cartesian product BK ×_τ BL.

Given a short exact sequence 1 → K → G → L → 1 and a normalized pseudo-cross
section σ: L → G, this module computes the bijection α: G → K × L, the action of
the loop group ΩBL on BK, the isomorphism Ψ: BG → BK ×_{τ^{BL}} BL and its
inverse, and, for a multiplicative section, the L-action on BK and Φ.

Fibre entries are always computed in G and then pulled back through ι. An entry
outside ι(K) raises :class:`NotInKernelError` naming the level and position.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from simpfib.core.bar import BarSimplex, ClassifyingSpace, bar_degeneracy, bar_face
from simpfib.core.errors import (
    CutoffError,
    DegreeMismatchError,
    NotInKernelError,
    SectionError,
    SectionNotMultiplicativeError,
)
from simpfib.core.groups import coset_section, normalize_section
from simpfib.core.loop import LoopGroup, LoopWord, canonical_twist_loop
from simpfib.core.ses import ShortExactSequence
from simpfib.core.simplicial import SimplicialMap, SimplicialSet
from simpfib.core.twisted import SimplicialAction, TwistedProduct, TwistedSimplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PseudoSection:
    """Levelwise set maps σ_n: L_n → G_n, one table per level ``0..cutoff``."""

    tables: Tuple[Tuple[int, ...], ...]

    @property
    def cutoff(self) -> int:
        return len(self.tables) - 1

    def __call__(self, n: int, l: int) -> int:
        if not 0 <= n < len(self.tables):
            raise CutoffError(f"Section has no table at level {n} (cutoff {self.cutoff})")
        return self.tables[n][l]

    @classmethod
    def constant(cls, table: Sequence[int], cutoff: int) -> "PseudoSection":
        """The same table at every level, as for a sequence of constant groups."""
        return cls((tuple(table),) * (cutoff + 1))

    @classmethod
    def normalized(cls, ses: ShortExactSequence, rho: "PseudoSection") -> "PseudoSection":
        """σ(l) = ρ(l)·ρ(1_n)⁻¹ at every level."""
        return cls(
            tuple(
                normalize_section(ses.group.level(n), rho.tables[n], ses.quotient.identity(n))
                for n in range(rho.cutoff + 1)
            )
        )

    @classmethod
    def from_cosets(cls, ses: ShortExactSequence) -> "PseudoSection":
        """Minimal-id fibre representatives, normalized, at every level."""
        tables = []
        cached: Dict[int, Tuple[int, ...]] = {}
        for n in range(ses.cutoff + 1):
            hom = ses.projection.component(n)
            key = id(hom)
            if key not in cached:
                cached[key] = coset_section(hom)
            tables.append(cached[key])
        return cls(tuple(tables))

    def with_value(self, n: int, l: int, value: int) -> "PseudoSection":
        tables = [list(table) for table in self.tables]
        tables[n][l] = value
        return PseudoSection(tuple(tuple(table) for table in tables))


def choose_section(
    ses: ShortExactSequence, table: Optional[Sequence[int]] = None
) -> PseudoSection:
    """An explicit table if given, else the sequence's own section, else cosets."""
    if table is not None:
        if len(table) != ses.quotient.count(0):
            raise SectionError(
                f"Section table has {len(table)} entries, expected {ses.quotient.count(0)}"
            )
        return PseudoSection.constant(table, ses.cutoff)
    if ses.section_hint is not None:
        return PseudoSection.constant(ses.section_hint, ses.cutoff)
    return PseudoSection.from_cosets(ses)


class AlphaPair(NamedTuple):
    k: int
    l: int


class Fibration:
    """The fibre bundle BK → BG → BL attached to ``ses`` and ``section``."""

    def __init__(self, ses: ShortExactSequence, section: PseudoSection):
        if section.cutoff < ses.cutoff:
            raise CutoffError(
                f"Section is tabulated up to level {section.cutoff}, the sequence up to {ses.cutoff}"
            )
        self.ses = ses
        self.section = section
        self.K = ses.kernel
        self.G = ses.group
        self.L = ses.quotient
        self._preimages: Dict[int, Dict[int, int]] = {}
        self._multiplicative: Optional[bool] = None
        logger.debug("Fibration of %s with section tables up to level %d", ses.describe(), section.cutoff)

    @property
    def cutoff(self) -> int:
        return self.ses.cutoff

    # -- group-level helpers -------------------------------------------------

    def sigma(self, n: int, l: int) -> int:
        return self.section(n, l)

    def iota(self, n: int, k: int) -> int:
        return self.ses.inclusion(n, k)

    def pi(self, n: int, g: int) -> int:
        return self.ses.projection(n, g)

    def _d0_sigma(self, n: int, l: int) -> int:
        """∂_0 σ(l) for l in L_n, landing in G_{n-1}."""
        return self.G.face(n, 0, self.sigma(n, l))

    def to_kernel(self, n: int, g: int, position: Optional[int] = None) -> int:
        """ι⁻¹(g), certifying that g lies in ι(K_n)."""
        preimage = self._preimages.get(n)
        if preimage is None:
            preimage = self.ses.inclusion.component(n).preimage_table()
            self._preimages[n] = preimage
        try:
            return preimage[g]
        except KeyError:
            where = "" if position is None else f" at position {position}"
            raise NotInKernelError(
                f"{self.G.serialize(n, g)} is not in the image of {self.K.name} "
                f"at level {n}{where}",
                level=n,
                position=position,
            ) from None

    # -- the bijection α -----------------------------------------------------

    def alpha(self, n: int, g: int) -> AlphaPair:
        """α(g) = (g·σ(π g)⁻¹, π g)."""
        l = self.pi(n, g)
        k = self.to_kernel(n, self.G.multiply(n, g, self.G.invert(n, self.sigma(n, l))))
        return AlphaPair(k, l)

    def alpha_inverse(self, n: int, pair: AlphaPair) -> int:
        return self.G.multiply(n, self.iota(n, pair.k), self.sigma(n, pair.l))

    def alpha_twist_identity(self, n: int, g: int, g_next: int) -> bool:
        """Check α(∂_0 g·g') = (∂_0k·∂_0σ(l)·k'·σ(l')·σ(∂_0 l·l')⁻¹, ∂_0 l·l').

        ``g`` lies in G_n and ``g_next`` in G_{n-1}.
        """
        G, L = self.G, self.L
        lower = n - 1
        k, l = self.alpha(n, g)
        k2, l2 = self.alpha(lower, g_next)
        lhs = self.alpha(lower, G.multiply(lower, G.face(n, 0, g), g_next))
        base = L.multiply(lower, L.face(n, 0, l), l2)
        fibre = G.product_of(
            lower,
            G.face(n, 0, self.iota(n, k)),
            self._d0_sigma(n, l),
            self.iota(lower, k2),
            self.sigma(lower, l2),
            G.invert(lower, self.sigma(lower, base)),
        )
        return lhs == AlphaPair(self.to_kernel(lower, fibre), base)

    # -- leading products ----------------------------------------------------

    def leading_product(self, entries: Sequence[int], start: int, count: int) -> int:
        """∂_0^{m}l_a · ∂_0^{m-1}l_{a-1} ⋯ l_{a-m} over ``entries[start:start+count]``.

        ``entries`` is a bar simplex over L (top entry first), so ``entries[j]``
        lies in level ``len(entries) - 1 - j``. The product lands in level
        ``len(entries) - start - count``; the empty product is the identity there.
        """
        top = len(entries) - 1
        if count == 0:
            return self.L.identity(top + 1 - start)
        acc = entries[start]
        for position in range(start + 1, start + count):
            level = top - position
            acc = self.L.multiply(level, self.L.face(level + 1, 0, acc), entries[position])
        return acc

    # -- the ΩBL-action on BK -------------------------------------------------

    def generator_factors(self, generator: BarSimplex) -> List[Tuple[int, int]]:
        """Flanking factors (A_j, B_j) in G_{n-j}, j = 1..n, for ⟨l_n|…|l_0⟩.

        The generator acts on the entry k_{n-j} as k ↦ A_j·k·B_j where
        A_j = ∂_0σ(R_{j-1})·(∂_0σ(Q_{j-1}))⁻¹ and B_j = σ(Q_j)·σ(R_j)⁻¹, with
        Q_j the leading product of l_n..l_{n-j} and R_j that of l_{n-1}..l_{n-j}.
        """
        G, L = self.G, self.L
        n = len(generator) - 1
        factors = []
        q = generator[0]
        r: Optional[int] = None
        for j in range(1, n + 1):
            level = n - j
            left = G.identity(level) if r is None else self._d0_sigma(level + 1, r)
            a = G.multiply(level, left, G.invert(level, self._d0_sigma(level + 1, q)))
            q = L.multiply(level, L.face(level + 1, 0, q), generator[j])
            r = generator[j] if r is None else L.multiply(level, L.face(level + 1, 0, r), generator[j])
            b = G.multiply(level, self.sigma(level, q), G.invert(level, self.sigma(level, r)))
            factors.append((a, b))
        return factors

    def act_generator(self, generator: BarSimplex, sign: int, simplex: BarSimplex) -> BarSimplex:
        n = len(simplex)
        if len(generator) != n + 1:
            raise DegreeMismatchError(
                f"A generator of degree {len(generator) - 1} cannot act on BK in degree {n}"
            )
        result = []
        for j, (a, b) in enumerate(self.generator_factors(generator)):
            level = n - 1 - j
            if sign < 0:
                a, b = self.G.invert(level, a), self.G.invert(level, b)
            value = self.G.product_of(level, a, self.iota(level, simplex[j]), b)
            result.append(self.to_kernel(level, value, position=j))
        return tuple(result)

    def loop_action_on_bk(self, generator: BarSimplex, simplex: BarSimplex) -> BarSimplex:
        """⟨l_n|…|l_0⟩ · [k_{n-1}|…|k_0]."""
        return self.act_generator(generator, 1, simplex)

    def loop_action(self, word: LoopWord, simplex: BarSimplex) -> BarSimplex:
        """A word acts letter by letter, rightmost letter first."""
        if word.degree != len(simplex):
            raise DegreeMismatchError(
                f"A word of degree {word.degree} cannot act on BK in degree {len(simplex)}"
            )
        for generator, sign in reversed(word.letters):
            simplex = self.act_generator(generator, sign, simplex)
        return simplex

    # -- spaces --------------------------------------------------------------

    def fibre_space(self, cutoff: int) -> ClassifyingSpace:
        return ClassifyingSpace(self.K, cutoff)

    def total_space(self, cutoff: int) -> ClassifyingSpace:
        return ClassifyingSpace(self.G, cutoff)

    def base_space(self, cutoff: int) -> ClassifyingSpace:
        return ClassifyingSpace(self.L, cutoff)

    def loop_group(self, cutoff: int) -> LoopGroup:
        return LoopGroup(self.base_space(cutoff))

    def loop_action_structure(self, cutoff: int) -> SimplicialAction:
        return SimplicialAction(
            self.loop_group(cutoff),
            self.fibre_space(cutoff),
            lambda n, word, simplex: self.loop_action(word, simplex),
            name=f"Ω{self.L.name}·",
        )

    def twisted_codomain(self, cutoff: int) -> TwistedProduct:
        """BK ×_{τ^{BL}} BL with ΩBL acting on BK."""
        action = self.loop_action_structure(cutoff)
        twist = canonical_twist_loop(action.carrier)
        return TwistedProduct(self.fibre_space(cutoff), action, twist, self.base_space(cutoff), cutoff)

    # -- Ψ -------------------------------------------------------------------

    def psi_from_pairs(self, ks: Sequence[int], ls: Sequence[int]) -> TwistedSimplex:
        """Ψ written on α-coordinates: the map from the transferred product."""
        G, L = self.G, self.L
        n = len(ls)
        fibre = []
        p: Optional[int] = None
        for j in range(n):
            level = n - 1 - j
            left = G.identity(level) if p is None else self._d0_sigma(level + 1, p)
            p = ls[j] if p is None else L.multiply(level, L.face(level + 1, 0, p), ls[j])
            value = G.product_of(
                level,
                left,
                self.iota(level, ks[j]),
                self.sigma(level, ls[j]),
                G.invert(level, self.sigma(level, p)),
            )
            fibre.append(self.to_kernel(level, value, position=j))
        return TwistedSimplex(tuple(fibre), tuple(ls))

    def alpha_coordinates(self, simplex: BarSimplex) -> Tuple[BarSimplex, BarSimplex]:
        n = len(simplex)
        pairs = [self.alpha(n - 1 - j, g) for j, g in enumerate(simplex)]
        return tuple(p.k for p in pairs), tuple(p.l for p in pairs)

    def psi(self, simplex: BarSimplex) -> TwistedSimplex:
        """Ψ: BG → BK ×_{τ^{BL}} BL."""
        ks, ls = self.alpha_coordinates(simplex)
        return self.psi_from_pairs(ks, ls)

    def psi_inverse(self, twisted: TwistedSimplex) -> BarSimplex:
        """Solve the Ψ formula entrywise from the top: g = ι(k)·σ(l)."""
        G, L = self.G, self.L
        ks, ls = twisted
        n = len(ls)
        result = []
        p: Optional[int] = None
        for j in range(n):
            level = n - 1 - j
            left = G.identity(level) if p is None else self._d0_sigma(level + 1, p)
            p = ls[j] if p is None else L.multiply(level, L.face(level + 1, 0, p), ls[j])
            k_in_g = G.product_of(
                level,
                G.invert(level, left),
                self.iota(level, ks[j]),
                self.sigma(level, p),
                G.invert(level, self.sigma(level, ls[j])),
            )
            k = self.to_kernel(level, k_in_g, position=j)
            result.append(self.alpha_inverse(level, AlphaPair(k, ls[j])))
        return tuple(result)

    def psi_map(self, cutoff: int) -> SimplicialMap:
        return SimplicialMap(
            self.total_space(cutoff),
            self.twisted_codomain(cutoff),
            lambda n, simplex: self.psi(simplex),
            name="Ψ",
        )

    # -- transported structure on BK × BL --------------------------------------

    def transferred_product(self, cutoff: int) -> "TransferredProduct":
        return TransferredProduct(self, cutoff)

    def alpha_map(self, cutoff: int) -> SimplicialMap:
        """Bα: BG → BK × BL with the transferred structure maps."""
        return SimplicialMap(
            self.total_space(cutoff),
            self.transferred_product(cutoff),
            lambda n, simplex: TwistedSimplex(*self.alpha_coordinates(simplex)),
            name="Bα",
        )

    def transfer_map(self, cutoff: int) -> SimplicialMap:
        """BK × BL (transferred) → BK ×_{τ^{BL}} BL; composed with Bα it is Ψ."""
        return SimplicialMap(
            self.transferred_product(cutoff),
            self.twisted_codomain(cutoff),
            lambda n, pair: self.psi_from_pairs(pair.fibre, pair.base),
            name="T",
        )

    # -- the semidirect case -------------------------------------------------

    def is_multiplicative(self) -> bool:
        """σ is a simplicial homomorphism (levelwise and against ∂_0)."""
        if self._multiplicative is None:
            self._multiplicative = self._check_multiplicative()
        return self._multiplicative

    def _check_multiplicative(self) -> bool:
        G, L = self.G, self.L
        for n in range(self.cutoff + 1):
            for a in L.level(n).elements():
                for b in L.level(n).elements():
                    if self.sigma(n, L.multiply(n, a, b)) != G.multiply(
                        n, self.sigma(n, a), self.sigma(n, b)
                    ):
                        return False
                if n >= 1 and self._d0_sigma(n, a) != self.sigma(n - 1, L.face(n, 0, a)):
                    return False
        return True

    def require_multiplicative(self) -> None:
        if not self.is_multiplicative():
            raise SectionNotMultiplicativeError(
                "The L-action on BK and Φ need a multiplicative section"
            )

    def conjugate(self, n: int, l: int, k: int, position: Optional[int] = None) -> int:
        """l∗k = σ(l)·k·σ(l)⁻¹ in K_n."""
        s = self.sigma(n, l)
        value = self.G.product_of(n, s, self.iota(n, k), self.G.invert(n, s))
        return self.to_kernel(n, value, position=position)

    def semidirect_action(self, l: int, simplex: BarSimplex) -> BarSimplex:
        """l·[k_{n-1}|…|k_0] = [∂_0 l∗k_{n-1}|∂_0² l∗k_{n-2}|…|∂_0ⁿ l∗k_0] for l in L_n."""
        self.require_multiplicative()
        n = len(simplex)
        return tuple(
            self.conjugate(n - 1 - j, self.L.face_power(n, j + 1, l), k, position=j)
            for j, k in enumerate(simplex)
        )

    def semidirect_action_structure(self, cutoff: int) -> SimplicialAction:
        return SimplicialAction(
            self.L,
            self.fibre_space(cutoff),
            lambda n, l, simplex: self.semidirect_action(l, simplex),
            name=f"{self.L.name}·",
        )

    def semidirect_codomain(self, cutoff: int) -> TwistedProduct:
        """BK ×_{τ_L} BL with L acting on BK by conjugation."""
        base = self.base_space(cutoff)
        return TwistedProduct(
            self.fibre_space(cutoff),
            self.semidirect_action_structure(cutoff),
            base.canonical_twist(),
            base,
            cutoff,
        )

    def phi(self, simplex: BarSimplex) -> TwistedSimplex:
        """Φ: entry n-1-j is (∂_0^j l_{n-1} ⋯ ∂_0 l_{n-j}) ∗ k_{n-1-j}."""
        self.require_multiplicative()
        L = self.L
        ks, ls = self.alpha_coordinates(simplex)
        n = len(ls)
        fibre = []
        p: Optional[int] = None
        for j in range(n):
            level = n - 1 - j
            if p is None:
                fibre.append(ks[j])
                p = ls[j]
            else:
                fibre.append(self.conjugate(level, L.face(level + 1, 0, p), ks[j], position=j))
                p = L.multiply(level, L.face(level + 1, 0, p), ls[j])
        return TwistedSimplex(tuple(fibre), tuple(ls))

    def phi_map(self, cutoff: int) -> SimplicialMap:
        return SimplicialMap(
            self.total_space(cutoff),
            self.semidirect_codomain(cutoff),
            lambda n, simplex: self.phi(simplex),
            name="Φ",
        )

    def splitting_failure(self) -> Optional[str]:
        """Check that (k, l) ↦ ι(k)σ(l) is an isomorphism K⋉L → G at every level."""
        G, K, L = self.G, self.K, self.L
        for n in range(self.cutoff + 1):
            seen = set()
            for k in K.level(n).elements():
                for l in L.level(n).elements():
                    seen.add(self.alpha_inverse(n, AlphaPair(k, l)))
            if len(seen) != G.count(n):
                return f"level {n}: (k, l) ↦ ι(k)σ(l) is not a bijection"
            for k, l in ((k, l) for k in K.level(n).elements() for l in L.level(n).elements()):
                for k2, l2 in ((a, b) for a in K.level(n).elements() for b in L.level(n).elements()):
                    product = AlphaPair(
                        K.multiply(n, k, self.conjugate(n, l, k2)), L.multiply(n, l, l2)
                    )
                    lhs = self.alpha_inverse(n, product)
                    rhs = G.multiply(
                        n, self.alpha_inverse(n, AlphaPair(k, l)), self.alpha_inverse(n, AlphaPair(k2, l2))
                    )
                    if lhs != rhs:
                        return (
                            f"level {n}: ({K.serialize(n, k)},{L.serialize(n, l)})·"
                            f"({K.serialize(n, k2)},{L.serialize(n, l2)}) is not preserved"
                        )
        return None


class TransferredProduct(SimplicialSet):
    """BK × BL carrying the structure maps of BG transported along Bα."""

    def __init__(self, fibration: Fibration, cutoff: int):
        super().__init__(cutoff)
        self.fibration = fibration
        self.fibre = fibration.fibre_space(cutoff)
        self.base = fibration.base_space(cutoff)
        self.name = f"{self.fibre.name}x{self.base.name}"

    def simplices(self, n: int):
        self.check_degree(n)
        logger.debug("Enumerating %d simplices of %s in degree %d", self.count(n), self.name, n)
        return (
            TwistedSimplex(k, l) for k in self.fibre.simplices(n) for l in self.base.simplices(n)
        )

    def count(self, n: int) -> int:
        return self.fibre.count(n) * self.base.count(n)

    def face(self, n: int, i: int, x: TwistedSimplex) -> TwistedSimplex:
        self.check_face_index(n, i)
        f = self.fibration
        K, L = f.K, f.L
        ks, ls = x
        base = bar_face(L, i, ls)
        if i == 0 or i == n:
            return TwistedSimplex(bar_face(K, i, ks), base)
        G = f.G
        level = n - i - 1
        upper = bar_face(K, i, ks)[: i - 1]
        top_k, top_l = ks[i - 1], ls[i - 1]
        merged = G.product_of(
            level,
            f.iota(level, K.face(level + 1, 0, top_k)),
            f._d0_sigma(level + 1, top_l),
            f.iota(level, ks[i]),
            f.sigma(level, ls[i]),
            G.invert(level, f.sigma(level, L.multiply(level, L.face(level + 1, 0, top_l), ls[i]))),
        )
        fibre = upper + (f.to_kernel(level, merged, position=i - 1),) + ks[i + 1 :]
        return TwistedSimplex(fibre, base)

    def degeneracy(self, n: int, i: int, x: TwistedSimplex) -> TwistedSimplex:
        self.check_degeneracy_index(n, i)
        f = self.fibration
        return TwistedSimplex(bar_degeneracy(f.K, i, x.fibre), bar_degeneracy(f.L, i, x.base))

    def serialize(self, n: int, x: TwistedSimplex) -> str:
        return f"({self.fibre.serialize(n, x.fibre)}, {self.base.serialize(n, x.base)})"
