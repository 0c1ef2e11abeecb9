"""Tests for the classifying space BG and the canonical twisting function τ_G."""

import pytest

from simpfib.core.bar import (
    ClassifyingSpace,
    bar_degeneracy,
    bar_face,
    bar_map,
    bar_view,
    canonical_twist,
)
from simpfib.core.errors import CutoffError, DegreeMismatchError, IndexRangeError
from simpfib.core.groups import GroupHom, make_cyclic
from simpfib.core.simplicial import ConstantSimplicialGroup, SimplicialHom
from simpfib.validators.simplicial import check_simplicial_identities, check_simplicial_map
from simpfib.validators.twisting import validate_twisting

from tests.conftest import bar_of


def test_faces_of_a_two_simplex(z4):
    """∂_0 drops the top entry, ∂_1 multiplies, ∂_2 drops the bottom entry."""
    group = ConstantSimplicialGroup(z4, 2)
    assert bar_face(group, 0, (1, 2)) == (2,)
    assert bar_face(group, 1, (1, 2)) == (3,)
    assert bar_face(group, 2, (1, 2)) == (1,)


def test_degeneracies_insert_the_identity(z4):
    """s_i inserts the identity entry at position i."""
    group = ConstantSimplicialGroup(z4, 2)
    assert bar_degeneracy(group, 0, (3,)) == (0, 3)
    assert bar_degeneracy(group, 1, (3,)) == (3, 0)
    assert bar_degeneracy(group, 0, ()) == (0,)


def test_face_index_out_of_range(z4):
    """Face indices past the degree are rejected, as are faces of the 0-simplex."""
    group = ConstantSimplicialGroup(z4, 2)
    with pytest.raises(IndexRangeError):
        bar_face(group, 3, (1, 2))
    with pytest.raises(IndexRangeError):
        bar_face(group, 0, ())


def test_simplex_counts(z4, s3):
    """BG has |G|^n simplices in degree n."""
    space = bar_of(z4, 3)
    assert space.count(0) == 1
    assert list(space.simplices(0)) == [()]
    assert space.count(3) == 64
    assert sum(1 for _ in space.simplices(2)) == 16
    assert bar_of(s3, 2).count(2) == 36


def test_group_must_reach_below_the_cutoff(z4):
    """BG up to degree n needs the group defined through level n-1."""
    with pytest.raises(CutoffError):
        ClassifyingSpace(ConstantSimplicialGroup(z4, 1), 3)


def test_degenerate_simplices(z4):
    """A bar simplex is degenerate exactly when one of its entries is the identity."""
    space = bar_of(z4, 3)
    assert space.is_degenerate(2, (0, 1))
    assert space.is_degenerate(2, (1, 0))
    assert not space.is_degenerate(2, (1, 2))
    assert not space.is_degenerate(0, ())
    assert len(list(space.nondegenerate(2))) == 9


def test_serialization(s3):
    """Simplices print with bar notation and element labels."""
    space = bar_of(s3, 2)
    assert space.serialize(0, ()) == "[ ]"
    assert space.serialize(2, (s3.index_of("(12)"), s3.identity)) == "[(12)|e]"


@pytest.mark.parametrize("name", ["z4", "s3", "klein"])
def test_classifying_space_satisfies_identities(name, request):
    """BG satisfies the simplicial identities."""
    group = request.getfixturevalue(name)
    assert check_simplicial_identities(bar_of(group, 4), 4).passed


def test_canonical_twist_value(z4, s3):
    """τ_G inverts the top entry."""
    assert canonical_twist(ConstantSimplicialGroup(z4, 2), (1, 2)) == 3
    cycle = s3.index_of("(123)")
    assert canonical_twist(ConstantSimplicialGroup(s3, 2), (cycle,)) == s3.index_of("(132)")
    with pytest.raises(DegreeMismatchError):
        canonical_twist(ConstantSimplicialGroup(z4, 2), ())


@pytest.mark.parametrize("name", ["z4", "s3", "klein"])
def test_canonical_twist_axioms(name, request):
    """τ_G satisfies every twisting function axiom."""
    group = request.getfixturevalue(name)
    tau = bar_of(group, 5).canonical_twist()
    report = validate_twisting(tau, 5)
    assert report.passed
    assert {"twist-face-0", "twist-faces", "twist-degeneracies", "twist-degenerate-base"} <= set(
        report.names()
    )


def test_twist_is_undefined_in_degree_zero(z4):
    """τ_G starts in degree 1."""
    tau = bar_of(z4, 2).canonical_twist()
    with pytest.raises(CutoffError):
        tau(0, ())


def test_bar_map_of_a_projection(z4):
    """B of Z/4 -> Z/2 applies the projection entrywise and is simplicial."""
    z2 = make_cyclic(2)
    source = ConstantSimplicialGroup(z4, 3)
    target = ConstantSimplicialGroup(z2, 3)
    hom = SimplicialHom.constant(source, target, GroupHom(z4, z2, (0, 1, 0, 1)))
    projection = bar_map(hom, 3)
    assert projection(2, (3, 1)) == (1, 1)
    assert check_simplicial_map(projection, 3).passed


def test_bar_view_of_a_constant_group(z4):
    """bar_view of a constant group is the ordinary BG."""
    space = bar_view(ConstantSimplicialGroup(z4, 2), 3)
    assert isinstance(space, ClassifyingSpace)
    assert space.name == f"B{z4.name}"
    assert space.count(2) == 16
    assert check_simplicial_identities(space, 3).passed
