"""Validators for simpfib."""

from simpfib.validators.groups import validate_section, validate_ses
from simpfib.validators.loop import validate_canonical_morphism, validate_loop_group
from simpfib.validators.simplicial import (
    check_simplicial_group,
    check_simplicial_identities,
    check_simplicial_map,
)
from simpfib.validators.theorem import verify_theorem
from simpfib.validators.twisting import (
    validate_action,
    validate_pseudo_cross_section,
    validate_twisting,
)

__all__ = [
    "check_simplicial_group",
    "check_simplicial_identities",
    "check_simplicial_map",
    "validate_action",
    "validate_canonical_morphism",
    "validate_loop_group",
    "validate_pseudo_cross_section",
    "validate_section",
    "validate_ses",
    "validate_twisting",
    "verify_theorem",
]
