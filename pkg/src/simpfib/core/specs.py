"""Loading group and short-exact-sequence specs.

Group spec (JSON object)::

    {"kind": "cyclic", "n": 4}
    {"kind": "symmetric", "n": 3}
    {"kind": "dihedral", "order": 8}
    {"kind": "trivial"} / {"kind": "klein"}
    {"kind": "product", "factors": [<group>, <group>]}
    {"kind": "table", "table": [[...], ...]}
    {"kind": "semidirect", "K": <group>, "L": <group>, "action": [[...], ...]}

Any group spec may carry ``"labels"``. An SES spec is one of::

    {"G": <group>, "K_elements": [ids]}
    {"K": <group>, "G": <group>, "L": <group>, "iota": [ids], "pi": [ids]}
    {"G": {"kind": "semidirect", ...}}

with optional ``"name"``, ``"description"``, ``"section"`` (one table used at
every level) and ``"demo": {"simplex": [ids]}``.
"""

import json
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from simpfib.core.errors import SimpfibError, SpecError
from simpfib.core.groups import (
    DEFAULT_LIMITS,
    FiniteGroup,
    GroupLimits,
    GroupHom,
    SemidirectProduct,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_klein,
    make_semidirect,
    make_symmetric,
    make_trivial,
    quotient_group,
    subgroup,
)
from simpfib.core.ses import ShortExactSequence, constant_ses, ses_from_semidirect

logger = logging.getLogger(__name__)

GROUP_FAMILIES = ("trivial", "klein", "cyclic", "symmetric", "dihedral")
BUNDLED_PACKAGE = "simpfib.data"


@dataclass(frozen=True)
class SesSpec:
    """A parsed SES spec file."""

    name: str
    ses: ShortExactSequence
    description: str = ""
    section: Optional[Tuple[int, ...]] = None
    demo_simplex: Optional[Tuple[int, ...]] = None


def _require(data: Dict[str, Any], key: str, where: str) -> Any:
    if key not in data:
        raise SpecError(f"{where}: missing required key {key!r}")
    return data[key]


def _int_list(value: Any, where: str) -> List[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise SpecError(f"{where}: expected a list of integers")
    return value


def _relabel(group: FiniteGroup, labels: Optional[List[str]], where: str) -> FiniteGroup:
    if labels is None:
        return group
    if len(labels) != group.order:
        raise SpecError(f"{where}: expected {group.order} labels, got {len(labels)}")
    return FiniteGroup(group.mul_table, group.identity, group.inverse, tuple(labels), group.name)


def _semidirect_from_spec(
    data: Dict[str, Any], where: str, limits: GroupLimits = DEFAULT_LIMITS
) -> SemidirectProduct:
    kernel = group_from_spec(_require(data, "K", where), f"{where}.K", limits)
    quotient = group_from_spec(_require(data, "L", where), f"{where}.L", limits)
    action = _require(data, "action", where)
    if not isinstance(action, list):
        raise SpecError(f"{where}: 'action' must be a list of automorphism tables")
    return make_semidirect(kernel, quotient, [_int_list(row, f"{where}.action") for row in action])


def group_from_spec(
    data: Any, where: str = "group", limits: GroupLimits = DEFAULT_LIMITS
) -> FiniteGroup:
    """Build a group from a parsed group spec.

    Raises:
        SpecError: If the spec is malformed or describes no group.
    """
    if not isinstance(data, dict):
        raise SpecError(f"{where}: a group spec must be an object")
    kind = _require(data, "kind", where)
    try:
        if kind == "cyclic":
            group = make_cyclic(int(_require(data, "n", where)), max_order=limits.max_order)
        elif kind == "symmetric":
            group = make_symmetric(
                int(_require(data, "n", where)), max_degree=limits.max_symmetric_degree
            )
        elif kind == "dihedral":
            group = make_dihedral(int(_require(data, "order", where)), max_order=limits.max_order)
        elif kind == "trivial":
            group = make_trivial()
        elif kind == "klein":
            group = make_klein()
        elif kind == "product":
            factors = _require(data, "factors", where)
            if not isinstance(factors, list) or not factors:
                raise SpecError(f"{where}: 'factors' must be a non-empty list")
            group = group_from_spec(factors[0], f"{where}.factors[0]", limits)
            for position, factor in enumerate(factors[1:], start=1):
                group = make_direct_product(
                    group, group_from_spec(factor, f"{where}.factors[{position}]", limits)
                )
        elif kind == "table":
            table = _require(data, "table", where)
            if not isinstance(table, list):
                raise SpecError(f"{where}: 'table' must be a list of rows")
            group = FiniteGroup.from_table(
                [_int_list(row, f"{where}.table") for row in table],
                name=data.get("name", "G"),
                exhaustive_limit=limits.exhaustive_limit,
                samples=limits.samples,
                max_order=limits.max_order,
            )
        elif kind == "semidirect":
            group = _semidirect_from_spec(data, where, limits).group
        else:
            raise SpecError(f"{where}: unknown group kind {kind!r}")
    except SpecError:
        raise
    except SimpfibError as exc:
        raise SpecError(f"{where}: {exc}") from exc
    return _relabel(group, data.get("labels"), where)


def parse_group_shorthand(text: str, limits: GroupLimits = DEFAULT_LIMITS) -> FiniteGroup:
    """Parse ``trivial``, ``klein``, ``cyclic:N``, ``symmetric:N``, ``dihedral:ORDER``.

    Factors joined with ``x`` form a direct product, e.g. ``cyclic:2xcyclic:2``.
    """
    factors = [part.strip() for part in text.split("x") if part.strip()]
    if not factors:
        raise SpecError("Empty group description")
    groups = []
    for factor in factors:
        family, _, parameter = factor.partition(":")
        if family not in GROUP_FAMILIES:
            raise SpecError(
                f"Unknown group family {family!r}; expected one of {', '.join(GROUP_FAMILIES)}"
            )
        if family in ("trivial", "klein"):
            if parameter:
                raise SpecError(f"{family} takes no parameter")
            groups.append(group_from_spec({"kind": family}, limits=limits))
            continue
        if not parameter.isdigit():
            raise SpecError(f"{family} needs a positive integer parameter, got {parameter!r}")
        key = "order" if family == "dihedral" else "n"
        groups.append(group_from_spec({"kind": family, key: int(parameter)}, limits=limits))
    group = groups[0]
    for other in groups[1:]:
        try:
            group = make_direct_product(group, other)
        except SimpfibError as exc:
            raise SpecError(str(exc)) from exc
    return group


def ses_from_spec(
    data: Any, cutoff: int, name: str = "SES", limits: GroupLimits = DEFAULT_LIMITS
) -> SesSpec:
    """Build a short exact sequence (and optional section and demo data) from a spec."""
    if not isinstance(data, dict):
        raise SpecError("An SES spec must be an object")
    name = data.get("name", name)
    description = data.get("description", "")
    group_data = _require(data, "G", "SES")

    try:
        if "K_elements" in data:
            group = group_from_spec(group_data, "G", limits)
            members = _int_list(data["K_elements"], "K_elements")
            kernel, inclusion = subgroup(group, members, name="K")
            quotient, projection = quotient_group(group, members, name="L")
            kernel = _relabel(kernel, data.get("K_labels"), "K_labels")
            quotient = _relabel(quotient, data.get("L_labels"), "L_labels")
            inclusion = GroupHom(kernel, group, inclusion.image)
            projection = GroupHom(group, quotient, projection.image)
            ses = constant_ses(kernel, group, quotient, inclusion, projection, cutoff, name=name)
        elif "iota" in data or "pi" in data:
            kernel = group_from_spec(_require(data, "K", "SES"), "K", limits)
            group = group_from_spec(group_data, "G", limits)
            quotient = group_from_spec(_require(data, "L", "SES"), "L", limits)
            inclusion = GroupHom(kernel, group, tuple(_int_list(_require(data, "iota", "SES"), "iota")))
            projection = GroupHom(group, quotient, tuple(_int_list(_require(data, "pi", "SES"), "pi")))
            ses = constant_ses(kernel, group, quotient, inclusion, projection, cutoff, name=name)
        elif isinstance(group_data, dict) and group_data.get("kind") == "semidirect":
            product = _semidirect_from_spec(group_data, "G", limits)
            ses = ses_from_semidirect(product, cutoff, name=name)
        else:
            raise SpecError(
                "SES spec needs 'K_elements', explicit 'K'/'L'/'iota'/'pi', or a semidirect 'G'"
            )
    except SpecError:
        raise
    except SimpfibError as exc:
        raise SpecError(f"SES {name}: {exc}") from exc

    section = data.get("section")
    if section is not None:
        section = tuple(_int_list(section, "section"))
    demo = data.get("demo", {})
    simplex = demo.get("simplex") if isinstance(demo, dict) else None
    if simplex is not None:
        simplex = tuple(_int_list(simplex, "demo.simplex"))
    return SesSpec(name, ses, description, section, simplex)


def read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    if not path.is_file():
        raise SpecError(f"Spec file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def load_ses(
    path: Union[str, Path], cutoff: int, limits: GroupLimits = DEFAULT_LIMITS
) -> SesSpec:
    logger.debug("Loading SES spec from %s", path)
    return ses_from_spec(read_json(path), cutoff, name=Path(path).stem, limits=limits)


def load_section(path: Union[str, Path]) -> Tuple[int, ...]:
    """Read an explicit section table: a list of ids, or {"section": [ids]}."""
    data = read_json(path)
    if isinstance(data, dict):
        data = _require(data, "section", str(path))
    return tuple(_int_list(data, str(path)))


def bundled_examples() -> List[str]:
    """Names of the SES specs shipped with the package."""
    root = resources.files(BUNDLED_PACKAGE)
    return sorted(
        entry.name[: -len(".json")] for entry in root.iterdir() if entry.name.endswith(".json")
    )


def load_bundled(name: str, cutoff: int, limits: GroupLimits = DEFAULT_LIMITS) -> SesSpec:
    resource = resources.files(BUNDLED_PACKAGE).joinpath(f"{name}.json")
    if not resource.is_file():
        raise SpecError(
            f"Unknown example {name!r}; available: {', '.join(bundled_examples())}"
        )
    return ses_from_spec(
        json.loads(resource.read_text(encoding="utf-8")), cutoff, name=name, limits=limits
    )
