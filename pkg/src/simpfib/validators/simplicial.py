"""Simplicial identities, simplicial maps and simplicial groups."""

from typing import List

from simpfib.core.simplicial import SimplicialGroup, SimplicialMap, SimplicialSet
from simpfib.dtos.report import CheckRecord, Report
from simpfib.validators.runner import Outcomes, expect, run_by_dimension, run_check


def _face_face(space: SimplicialSet, n: int) -> Outcomes:
    for x in space.simplices(n):
        for j in range(1, n + 1):
            for i in range(j):
                lhs = space.face(n - 1, i, space.face(n, j, x))
                rhs = space.face(n - 1, j - 1, space.face(n, i, x))
                yield expect(
                    lhs == rhs,
                    lambda: f"x={space.serialize(n, x)}, i={i}, j={j}: "
                    f"∂_{i}∂_{j}x={space.serialize(n - 2, lhs)} but "
                    f"∂_{j - 1}∂_{i}x={space.serialize(n - 2, rhs)}",
                )


def _degeneracy_degeneracy(space: SimplicialSet, n: int) -> Outcomes:
    for x in space.simplices(n):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = space.degeneracy(n + 1, i, space.degeneracy(n, j, x))
                rhs = space.degeneracy(n + 1, j + 1, space.degeneracy(n, i, x))
                yield expect(
                    lhs == rhs,
                    lambda: f"x={space.serialize(n, x)}, i={i}, j={j}: "
                    f"s_{i}s_{j}x={space.serialize(n + 2, lhs)} but "
                    f"s_{j + 1}s_{i}x={space.serialize(n + 2, rhs)}",
                )


def _face_degeneracy_lower(space: SimplicialSet, n: int) -> Outcomes:
    for x in space.simplices(n):
        for j in range(1, n + 1):
            for i in range(j):
                lhs = space.face(n + 1, i, space.degeneracy(n, j, x))
                rhs = space.degeneracy(n - 1, j - 1, space.face(n, i, x))
                yield expect(
                    lhs == rhs,
                    lambda: f"x={space.serialize(n, x)}, i={i}, j={j}: "
                    f"∂_{i}s_{j}x={space.serialize(n, lhs)} but "
                    f"s_{j - 1}∂_{i}x={space.serialize(n, rhs)}",
                )


def _face_degeneracy_identity(space: SimplicialSet, n: int) -> Outcomes:
    for x in space.simplices(n):
        for j in range(n + 1):
            for i in (j, j + 1):
                value = space.face(n + 1, i, space.degeneracy(n, j, x))
                yield expect(
                    value == x,
                    lambda: f"x={space.serialize(n, x)}, j={j}: "
                    f"∂_{i}s_{j}x={space.serialize(n, value)} is not x",
                )


def _face_degeneracy_upper(space: SimplicialSet, n: int) -> Outcomes:
    for x in space.simplices(n):
        for j in range(n + 1):
            for i in range(j + 2, n + 2):
                lhs = space.face(n + 1, i, space.degeneracy(n, j, x))
                rhs = space.degeneracy(n - 1, j, space.face(n, i - 1, x))
                yield expect(
                    lhs == rhs,
                    lambda: f"x={space.serialize(n, x)}, i={i}, j={j}: "
                    f"∂_{i}s_{j}x={space.serialize(n, lhs)} but "
                    f"s_{j}∂_{i - 1}x={space.serialize(n, rhs)}",
                )


def identity_records(space: SimplicialSet, n: int, max_dim: int, prefix: str = "") -> List[CheckRecord]:
    """Records for the identity families whose both sides are defined on X_n."""
    records = []
    if n >= 2:
        records.append(run_check(f"{prefix}face-face", n, lambda: _face_face(space, n)))
    if n + 2 <= max_dim:
        records.append(
            run_check(f"{prefix}degeneracy-degeneracy", n, lambda: _degeneracy_degeneracy(space, n))
        )
    if n + 1 <= max_dim:
        if n >= 1:
            records.append(
                run_check(
                    f"{prefix}face-degeneracy-lower", n, lambda: _face_degeneracy_lower(space, n)
                )
            )
        records.append(
            run_check(
                f"{prefix}face-degeneracy-identity", n, lambda: _face_degeneracy_identity(space, n)
            )
        )
        if n >= 1:
            records.append(
                run_check(
                    f"{prefix}face-degeneracy-upper", n, lambda: _face_degeneracy_upper(space, n)
                )
            )
    return records


def check_simplicial_identities(
    space: SimplicialSet, max_dim: int, *, jobs: int = 1, prefix: str = ""
) -> Report:
    """Check all simplicial identities on X_n for n ≤ max_dim, where both sides exist."""
    max_dim = min(max_dim, space.cutoff)
    report = run_by_dimension(
        f"identities:{space.name}",
        range(max_dim + 1),
        lambda n: identity_records(space, n, max_dim, prefix),
        jobs,
    )
    report.config["max_dim"] = max_dim
    return report


def _map_faces(f: SimplicialMap, n: int, indices) -> Outcomes:
    source, target = f.source, f.target
    for x in source.simplices(n):
        image = f(n, x)
        for i in indices:
            lhs = target.face(n, i, image)
            rhs = f(n - 1, source.face(n, i, x))
            yield expect(
                lhs == rhs,
                lambda: f"x={source.serialize(n, x)}, i={i}: "
                f"∂_{i}{f.name}(x)={target.serialize(n - 1, lhs)} but "
                f"{f.name}(∂_{i}x)={target.serialize(n - 1, rhs)}",
            )


def _map_degeneracies(f: SimplicialMap, n: int) -> Outcomes:
    source, target = f.source, f.target
    for x in source.simplices(n):
        image = f(n, x)
        for i in range(n + 1):
            lhs = target.degeneracy(n, i, image)
            rhs = f(n + 1, source.degeneracy(n, i, x))
            yield expect(
                lhs == rhs,
                lambda: f"x={source.serialize(n, x)}, i={i}: "
                f"s_{i}{f.name}(x)={target.serialize(n + 1, lhs)} but "
                f"{f.name}(s_{i}x)={target.serialize(n + 1, rhs)}",
            )


def map_records(
    f: SimplicialMap,
    n: int,
    max_dim: int,
    prefix: str = "",
    *,
    include_face_zero: bool = True,
) -> List[CheckRecord]:
    records = []
    if n >= 1:
        if include_face_zero:
            records.append(run_check(f"{prefix}face-0", n, lambda: _map_faces(f, n, [0])))
        records.append(run_check(f"{prefix}faces", n, lambda: _map_faces(f, n, range(1, n + 1))))
    if n < max_dim:
        records.append(run_check(f"{prefix}degeneracies", n, lambda: _map_degeneracies(f, n)))
    return records


def check_simplicial_map(
    f: SimplicialMap,
    max_dim: int,
    *,
    jobs: int = 1,
    prefix: str = "",
    include_face_zero: bool = True,
) -> Report:
    """Check that ``f`` commutes with ∂_i and s_i in degrees ≤ max_dim."""
    max_dim = min(max_dim, f.cutoff)
    prefix = prefix or f"{f.name} "
    report = run_by_dimension(
        f"map:{f.name}",
        range(max_dim + 1),
        lambda n: map_records(f, n, max_dim, prefix, include_face_zero=include_face_zero),
        jobs,
    )
    report.config["max_dim"] = max_dim
    return report


def _structure_homomorphisms(group: SimplicialGroup, n: int, max_dim: int) -> Outcomes:
    homs = []
    if n >= 1:
        homs.extend((f"∂_{i}", group.face_hom(n, i)) for i in range(n + 1))
    if n < max_dim:
        homs.extend((f"s_{i}", group.degeneracy_hom(n, i)) for i in range(n + 1))
    for label, hom in homs:
        failure = hom.first_failure()
        yield expect(
            failure is None,
            lambda: f"level {n}: {label} is not a homomorphism at {failure}",
        )


def check_simplicial_group(group: SimplicialGroup, max_dim: int, *, jobs: int = 1) -> Report:
    """Structure maps are homomorphisms, plus the simplicial identities."""
    max_dim = min(max_dim, group.cutoff)
    report = run_by_dimension(
        f"simplicial-group:{group.name}",
        range(max_dim + 1),
        lambda n: [
            run_check(
                "structure-homomorphisms", n, lambda: _structure_homomorphisms(group, n, max_dim)
            )
        ]
        + identity_records(group, n, max_dim),
        jobs,
    )
    report.config["max_dim"] = max_dim
    return report
