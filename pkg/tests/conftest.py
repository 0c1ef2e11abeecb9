"""Shared fixtures: the bundled extensions and small classifying spaces."""

from pathlib import Path

import pytest

import simpfib.data
from simpfib.core.bar import ClassifyingSpace
from simpfib.core.fibration import Fibration, choose_section
from simpfib.core.groups import make_cyclic, make_klein, make_symmetric
from simpfib.core.simplicial import ConstantSimplicialGroup
from simpfib.core.specs import load_bundled

DATA_DIR = Path(simpfib.data.__file__).parent


def bar_of(group, cutoff):
    return ClassifyingSpace(ConstantSimplicialGroup(group, cutoff), cutoff)


def fibration_of(name, cutoff, section=None):
    spec = load_bundled(name, cutoff)
    table = section if section is not None else spec.section
    return Fibration(spec.ses, choose_section(spec.ses, table))


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def z4():
    return make_cyclic(4)


@pytest.fixture
def s3():
    return make_symmetric(3)


@pytest.fixture
def klein():
    return make_klein()


@pytest.fixture
def z4_fibration():
    """Z/2 -> Z/4 -> Z/2 with the coset section, up to degree 3."""
    return fibration_of("z4", 3)


@pytest.fixture
def s3_fibration():
    """Z/3 -> S3 -> Z/2 with the multiplicative section, up to degree 3."""
    return fibration_of("s3_split", 3)
