"""Tests for truncated simplicial sets and simplicial groups."""

import pytest

from simpfib.core.errors import CutoffError, IndexRangeError
from simpfib.core.groups import GroupHom, make_cyclic
from simpfib.core.simplicial import (
    ConstantSimplicialGroup,
    DiscreteSimplicialSet,
    SimplicialHom,
    SimplicialMap,
    constant_simplicial_group,
    TableSimplicialGroup,
    direct_product,
    is_reduced,
)
from simpfib.validators.simplicial import (
    check_simplicial_group,
    check_simplicial_identities,
    check_simplicial_map,
)

from tests.conftest import bar_of


def test_constant_group_satisfies_identities(z4):
    """A constant group passes both the identity and the group checks."""
    group = ConstantSimplicialGroup(z4, 3)
    report = check_simplicial_identities(group, 3)
    assert report.passed
    assert report.config["max_dim"] == 3
    assert check_simplicial_group(group, 3).passed


def test_corrupted_face_map_is_reported(z4):
    """Replacing ∂_1 out of level 2 by the trivial map breaks face-face in degree 2."""
    table = TableSimplicialGroup.from_constant(ConstantSimplicialGroup(z4, 3))
    broken = table.with_face(2, 1, GroupHom.trivial(z4, z4))

    report = check_simplicial_identities(broken, 3)

    assert not report.passed
    failing = [(record.name, record.dimension) for record in report.failures()]
    assert ("face-face", 2) in failing
    assert all(record.counterexample for record in report.failures())


def test_table_group_requires_every_structure_map(z4):
    """A missing face map is refused at construction."""
    table = TableSimplicialGroup.from_constant(ConstantSimplicialGroup(z4, 2))
    faces = dict(table.faces)
    del faces[(2, 0)]
    with pytest.raises(CutoffError):
        TableSimplicialGroup(table.levels, faces, table.degeneracies)


def test_direct_product_of_constant_groups_stays_constant():
    """Two constant groups multiply to a constant group at the lower cutoff."""
    product = direct_product(
        ConstantSimplicialGroup(make_cyclic(2), 3), ConstantSimplicialGroup(make_cyclic(3), 2)
    )
    assert product.is_constant()
    assert product.cutoff == 2
    assert product.level(1).order == 6


def test_direct_product_of_table_groups():
    """The levelwise product of tabulated groups is again a simplicial group."""
    first = TableSimplicialGroup.from_constant(ConstantSimplicialGroup(make_cyclic(2), 2))
    second = ConstantSimplicialGroup(make_cyclic(3), 2)
    product = direct_product(first, second)
    assert isinstance(product, TableSimplicialGroup)
    assert product.count(2) == 6
    assert check_simplicial_group(product, 2).passed


def test_structure_map_bounds(z4):
    """Face and degeneracy indices and degrees are range-checked."""
    group = ConstantSimplicialGroup(z4, 3)
    with pytest.raises(IndexRangeError):
        group.face(2, 3, 1)
    with pytest.raises(IndexRangeError):
        group.face(0, 0, 1)
    with pytest.raises(CutoffError):
        group.face(4, 0, 1)
    with pytest.raises(CutoffError):
        group.degeneracy(3, 0, 1)


def test_negative_cutoff_is_refused():
    """Cutoffs start at 0."""
    with pytest.raises(CutoffError):
        DiscreteSimplicialSet([0], -1)


def test_reduced_spaces(z4):
    """A space is reduced when it has one vertex."""
    assert not is_reduced(DiscreteSimplicialSet([0, 1], 2))
    assert is_reduced(DiscreteSimplicialSet([0], 2))
    assert is_reduced(bar_of(z4, 2))


def test_discrete_set_simplices_are_degenerate_above_zero():
    """A discrete set has no non-degenerate simplices above degree 0."""
    space = DiscreteSimplicialSet(["a", "b"], 2)
    assert list(space.nondegenerate(0)) == ["a", "b"]
    assert list(space.nondegenerate(1)) == []


def test_simplicial_hom_laws(z4):
    """The inclusion Z/2 -> Z/4 as constant groups commutes with all structure maps."""
    z2 = make_cyclic(2)
    source = ConstantSimplicialGroup(z2, 2)
    target = ConstantSimplicialGroup(z4, 2)
    hom = SimplicialHom.constant(source, target, GroupHom(z2, z4, (0, 2)))
    assert hom.cutoff == 2
    assert hom(1, 1) == 2
    assert hom.first_failure() is None

    bad = SimplicialHom.constant(source, target, GroupHom(z2, z4, (0, 1)))
    assert "level 0" in bad.first_failure()


def test_identity_map_commutes(z4):
    """The identity map of BZ/4 is simplicial."""
    space = bar_of(z4, 3)
    assert check_simplicial_map(SimplicialMap.identity(space), 3).passed


def test_map_that_ignores_faces_fails(z4):
    """Shifting every entry by one does not commute with s_0 in degree 0."""
    space = bar_of(z4, 2)
    shift = SimplicialMap(space, space, lambda n, x: tuple((g + 1) % 4 for g in x), name="shift")
    report = check_simplicial_map(shift, 2)
    assert not report.passed
    assert report.failures()[0].name.startswith("shift ")


def test_constant_simplicial_group_helper(z4):
    """The helper builds a constant group with identity structure maps."""
    group = constant_simplicial_group(z4, 2)
    assert isinstance(group, ConstantSimplicialGroup)
    assert group.cutoff == 2
    assert group.level(2) is z4
    assert group.face(2, 1, 3) == 3
