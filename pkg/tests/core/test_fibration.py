"""Tests for α, the ΩBL-action on BK, Ψ and, for split extensions, Φ."""

import itertools

import pytest

from simpfib.core.errors import (
    CutoffError,
    DegreeMismatchError,
    NotInKernelError,
    SectionError,
    SectionNotMultiplicativeError,
)
from simpfib.core.fibration import AlphaPair, Fibration, PseudoSection, choose_section
from simpfib.core.groups import FiniteGroup, GroupHom, make_cyclic
from simpfib.core.ses import ShortExactSequence
from simpfib.core.simplicial import ConstantSimplicialGroup, SimplicialHom, TableSimplicialGroup
from simpfib.core.specs import load_bundled
from simpfib.core.twisted import TwistedSimplex
from simpfib.validators.groups import validate_ses
from simpfib.validators.simplicial import check_simplicial_group
from simpfib.validators.theorem import verify_theorem

from tests.conftest import fibration_of


def test_alpha_on_z4(z4_fibration):
    """α(g) = (g·σ(πg)⁻¹, πg) with σ = (0, 1)."""
    assert z4_fibration.alpha(0, 3) == AlphaPair(1, 1)
    assert z4_fibration.alpha(0, 2) == AlphaPair(1, 0)
    assert z4_fibration.alpha_inverse(0, AlphaPair(1, 1)) == 3


def test_alpha_is_a_bijection(s3_fibration):
    """α_1 is a bijection with α_inverse as its inverse."""
    G = s3_fibration.G
    images = {s3_fibration.alpha(1, g) for g in G.simplices(1)}
    assert len(images) == G.count(1)
    for g in G.simplices(1):
        assert s3_fibration.alpha_inverse(1, s3_fibration.alpha(1, g)) == g


def test_psi_of_the_demo_simplex(z4_fibration):
    """Ψ[3|1] = ([1|1], [1|1]) and the 0-simplex goes to the 0-simplex."""
    assert z4_fibration.psi((3, 1)) == TwistedSimplex((1, 1), (1, 1))
    assert z4_fibration.psi(()) == TwistedSimplex((), ())


def test_psi_inverse_undoes_psi(z4_fibration):
    """Ψ⁻¹Ψ is the identity on every 3-simplex of BZ/4."""
    total = z4_fibration.total_space(3)
    for simplex in total.simplices(3):
        assert z4_fibration.psi_inverse(z4_fibration.psi(simplex)) == simplex


def test_psi_hits_every_pair(z4_fibration):
    """Ψ in degree 2 is onto BK_2 × BL_2."""
    images = {z4_fibration.psi(x) for x in z4_fibration.total_space(2).simplices(2)}
    expected = {
        TwistedSimplex(k, l)
        for k in itertools.product(range(2), repeat=2)
        for l in itertools.product(range(2), repeat=2)
    }
    assert images == expected


def test_coset_section_is_not_multiplicative(z4_fibration):
    """Z/4 does not split, so the L-action and Φ are unavailable."""
    assert z4_fibration.section(0, 1) == 1
    assert not z4_fibration.is_multiplicative()
    with pytest.raises(SectionNotMultiplicativeError):
        z4_fibration.phi((3, 1))
    with pytest.raises(SectionNotMultiplicativeError):
        z4_fibration.semidirect_action(1, (1,))


def test_to_kernel_names_the_level(z4_fibration):
    """Elements outside K are reported with their level and position."""
    with pytest.raises(NotInKernelError) as excinfo:
        z4_fibration.to_kernel(1, 1, position=0)
    assert excinfo.value.level == 1
    assert excinfo.value.position == 0
    assert z4_fibration.to_kernel(1, 2) == 1


def test_identity_word_acts_trivially(z4_fibration):
    """The empty loop word fixes BK and must match the simplex degree."""
    loop = z4_fibration.loop_group(3)
    assert z4_fibration.loop_action(loop.identity(2), (1, 0)) == (1, 0)
    with pytest.raises(DegreeMismatchError):
        z4_fibration.loop_action(loop.identity(1), (1, 0))


def test_generator_action_is_invertible(z4_fibration):
    """A generator and its inverse cancel on every 2-simplex of BK."""
    generator = (1, 1, 1)
    for simplex in itertools.product(range(2), repeat=2):
        moved = z4_fibration.act_generator(generator, 1, simplex)
        assert z4_fibration.act_generator(generator, -1, moved) == simplex


def test_leading_product(z4_fibration):
    """The product over no entries is the identity of the level below them."""
    assert z4_fibration.leading_product((1, 1), 0, 0) == 0
    assert z4_fibration.leading_product((1, 1), 0, 1) == 1
    assert z4_fibration.leading_product((1, 1), 0, 2) == 0


def test_split_extension_phi(s3_fibration):
    """For S3 with the multiplicative section, Φ and Ψ agree on [(c,t)|(c²,e)]."""
    assert s3_fibration.is_multiplicative()
    assert s3_fibration.splitting_failure() is None
    assert s3_fibration.phi((3, 4)) == TwistedSimplex((1, 1), (1, 0))
    assert s3_fibration.psi((3, 4)) == s3_fibration.phi((3, 4))


def test_conjugation_by_t_inverts(s3_fibration):
    """The transposition acts on Z/3 by inversion."""
    assert s3_fibration.conjugate(0, 1, 1) == 2
    assert s3_fibration.conjugate(0, 0, 1) == 1
    assert s3_fibration.semidirect_action(1, (1,)) == (2,)


def test_choose_section_rejects_wrong_length(z4_fibration):
    """A section table must have one entry per element of L."""
    with pytest.raises(SectionError):
        choose_section(z4_fibration.ses, (0, 1, 2))


def test_choose_section_prefers_the_sequence_hint():
    """The spec's section is used unless one is passed explicitly."""
    spec = load_bundled("s3_split", 2)
    section = choose_section(spec.ses)
    assert section.tables[0] == spec.ses.section_hint
    assert choose_section(spec.ses, (0, 1)).tables == ((0, 1),) * 3


def test_normalized_section(z4_fibration):
    """ρ(l)·ρ(1)⁻¹ sends the identity to the identity."""
    rho = PseudoSection.constant((2, 1), 3)
    sigma = PseudoSection.normalized(z4_fibration.ses, rho)
    assert sigma.tables[0] == (0, 3)
    assert sigma.cutoff == 3
    assert rho.with_value(1, 0, 0).tables[1] == (0, 1)


def test_section_must_reach_the_cutoff(z4_fibration):
    """The section tables must cover every level up to the cutoff."""
    with pytest.raises(CutoffError):
        Fibration(z4_fibration.ses, PseudoSection.constant((0, 1), 1))


def test_bundled_d8_extension_is_central():
    """The D8 centre example is Z/2 → D8 → Klein with no splitting section."""
    fibration = fibration_of("d8_center", 2)
    assert fibration.K.count(0) == 2
    assert fibration.L.count(0) == 4
    assert not fibration.is_multiplicative()


def test_single_generator_acts_like_its_word(z4_fibration):
    """Acting by a bare generator matches acting by its one-letter word."""
    loop = z4_fibration.loop_group(3)
    generator = (1, 0, 1)
    word = loop.generator(2, generator)
    for simplex in itertools.product(range(2), repeat=2):
        assert z4_fibration.loop_action_on_bk(generator, simplex) == z4_fibration.loop_action(
            word, simplex
        )


def _xor_group(bits, name):
    size = 1 << bits
    return FiniteGroup.from_table([[a ^ b for b in range(size)] for a in range(size)], name=name)


def _extend(mask, basis_map):
    """Extend a map of basis indices linearly over ℤ/2."""
    image = 0
    for b in range(mask.bit_length()):
        if mask >> b & 1:
            image ^= 1 << basis_map(b)
    return image


def _parity(mask):
    return bin(mask).count("1") % 2


def augmentation_fibration(cutoff):
    """ℤ/2[Δ¹] → ℤ/2 with kernel the even-weight vectors.

    Level n of ℤ/2[Δ¹] is (ℤ/2)^{n+2} as bitmasks: bit b is the n-simplex of Δ¹
    with b ones. ∂_i deletes and s_i repeats vertex i. The section sends 1 to the
    all-zero simplex, so ∂_0σ(1) is not the identity.
    """
    G_levels = [_xor_group(n + 2, f"Z2[Δ1]_{n}") for n in range(cutoff + 1)]
    K_levels = [_xor_group(n + 1, f"I_{n}") for n in range(cutoff + 1)]

    def face_index(n, i):
        return lambda b: b if i < n + 1 - b else b - 1

    def degeneracy_index(n, i):
        return lambda b: b if i < n + 1 - b else b + 1

    def embed(j):
        return (j << 1) | _parity(j)

    G_faces, K_faces, G_degeneracies, K_degeneracies = {}, {}, {}, {}
    for n in range(1, cutoff + 1):
        for i in range(n + 1):
            index = face_index(n, i)
            G_faces[(n, i)] = GroupHom(
                G_levels[n], G_levels[n - 1], tuple(_extend(m, index) for m in G_levels[n].elements())
            )
            K_faces[(n, i)] = GroupHom(
                K_levels[n],
                K_levels[n - 1],
                tuple(_extend(embed(j), index) >> 1 for j in K_levels[n].elements()),
            )
    for n in range(cutoff):
        for i in range(n + 1):
            index = degeneracy_index(n, i)
            G_degeneracies[(n, i)] = GroupHom(
                G_levels[n], G_levels[n + 1], tuple(_extend(m, index) for m in G_levels[n].elements())
            )
            K_degeneracies[(n, i)] = GroupHom(
                K_levels[n],
                K_levels[n + 1],
                tuple(_extend(embed(j), index) >> 1 for j in K_levels[n].elements()),
            )

    G = TableSimplicialGroup(G_levels, G_faces, G_degeneracies, name="Z2[Δ1]")
    K = TableSimplicialGroup(K_levels, K_faces, K_degeneracies, name="I")
    z2 = make_cyclic(2)
    L = ConstantSimplicialGroup(z2, cutoff)
    inclusion = SimplicialHom(
        K,
        G,
        tuple(
            GroupHom(K_levels[n], G_levels[n], tuple(embed(j) for j in K_levels[n].elements()))
            for n in range(cutoff + 1)
        ),
    )
    projection = SimplicialHom(
        G,
        L,
        tuple(
            GroupHom(G_levels[n], z2, tuple(_parity(m) for m in G_levels[n].elements()))
            for n in range(cutoff + 1)
        ),
    )
    ses = ShortExactSequence(K, G, L, inclusion, projection, name="augmentation")
    return Fibration(ses, PseudoSection(((0, 1),) * (cutoff + 1)))


class TestNonConstantGroup:
    """Ψ on a simplicial group whose levels and face maps really vary."""

    @pytest.fixture(scope="class")
    def fibration(self):
        return augmentation_fibration(3)

    def test_sequence_is_exact_and_simplicial(self, fibration):
        """Both groups satisfy the identities and the sequence is exact."""
        assert fibration.G.level(0).order == 4
        assert fibration.G.level(3).order == 32
        assert check_simplicial_group(fibration.G, 3).passed
        assert check_simplicial_group(fibration.K, 3).passed
        assert validate_ses(fibration.ses, 3).passed

    def test_section_is_not_fixed_by_the_zeroth_face(self, fibration):
        """∂_0σ(1) is a non-identity element, so the flanking factors are non-trivial."""
        assert fibration.is_multiplicative()
        sigma = fibration.sigma(2, 1)
        assert sigma == 1
        assert fibration.G.face(2, 0, sigma) == 1
        assert fibration.G.face(2, 0, sigma) != fibration.G.level(1).identity

    def test_psi_inverse_undoes_psi(self, fibration):
        """Ψ⁻¹Ψ is the identity on every 3-simplex of BG."""
        for simplex in fibration.total_space(3).simplices(3):
            assert fibration.psi_inverse(fibration.psi(simplex)) == simplex

    def test_theorem_holds(self, fibration):
        """The whole suite passes up to degree 3."""
        report = verify_theorem(fibration, 3, seed=0, samples=50, jobs=1)
        assert report.passed, [(r.name, r.dimension, r.counterexample) for r in report.failures()]
