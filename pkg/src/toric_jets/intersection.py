"""Intersection numbers with invariant curves and the resulting positivity levels.

For a wall tau = sigma_0 cap sigma_1 with far rays n_0, n_1 the smooth fan
gives a relation ``n_0 + n_1 = sum_i s_i n_i`` over the shared rays n_i, and

    D_{n_0}.V(tau) = D_{n_1}.V(tau) = 1,   D_{n_i}.V(tau) = -s_i,

every other invariant divisor meeting V(tau) in 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .divisors import (
    NOT_SPANNED,
    LineBundle,
    SupportFunction,
    canonical_bundle,
    support_function,
)
from .errors import DimensionError, InconsistencyError, PreconditionError
from .fan import Fan, Wall


@dataclass(frozen=True)
class WallRelation:
    wall: Wall
    coefficients: dict[int, int]  # shared ray index -> s_i


def wall_relation(fan: Fan, wall: Wall) -> WallRelation:
    basis_idx = list(wall.shared_rays) + [wall.opposite_a]
    basis = [fan.rays[i] for i in basis_idx]
    target = lattice.add(fan.rays[wall.opposite_a], fan.rays[wall.opposite_b])
    coords = lattice.coordinates_in_basis(basis, target)
    if coords[-1] != 0:
        raise InconsistencyError(f"wall {wall} has no relation of the expected shape")
    return WallRelation(wall, dict(zip(wall.shared_rays, coords[:-1])))


def curve_multiplicity(fan: Fan, wall: Wall) -> int:
    """Maximal multiplicity of the invariant curve V(wall).

    On a smooth fan every V(tau) is a smooth rational curve, so this is 1.
    """
    return 1


def divisor_dot_curve(fan: Fan, ray: int, wall: Wall) -> int:
    """D_ray . V(wall)."""
    if ray in (wall.opposite_a, wall.opposite_b):
        return 1
    if ray in wall.shared_rays:
        return -wall_relation(fan, wall).coefficients[ray]
    return 0


def intersection_number(L: LineBundle, wall: Wall, psi: SupportFunction | None = None) -> int:
    """L . V(wall), computed two independent ways that must agree."""
    fan = L.fan
    if psi is None:
        psi = support_function(L)
    rel = wall_relation(fan, wall)
    n0, n1 = wall.opposite_a, wall.opposite_b
    by_relation = -psi.values[n0] - psi.values[n1] + sum(
        s * psi.values[i] for i, s in rel.coefficients.items()
    )
    by_slope = lattice.pair(psi.slopes[wall.cone_b], fan.rays[n0]) - psi.values[n0]
    by_slope_swapped = lattice.pair(psi.slopes[wall.cone_a], fan.rays[n1]) - psi.values[n1]
    if not by_relation == by_slope == by_slope_swapped:
        raise InconsistencyError(
            f"intersection formulas disagree on wall {wall}: "
            f"{by_relation}, {by_slope}, {by_slope_swapped}"
        )
    return by_relation


def intersection_table(L: LineBundle) -> tuple[int, ...]:
    """L . V(tau) for every wall, in the fan's wall order."""
    psi = support_function(L)
    return tuple(intersection_number(L, w, psi) for w in L.fan.walls)


def jet_level(L: LineBundle):
    """The largest k with L . C >= k on every invariant curve C, or NOT_SPANNED."""
    k = min(intersection_table(L))
    return NOT_SPANNED if k < 0 else k


def is_nef(L: LineBundle) -> bool:
    return all(x >= 0 for x in intersection_table(L))


def seshadri_global(L: LineBundle):
    """min over invariant curves of L.C / m(C); NOT_SPANNED unless L is nef.

    With m(C) = 1 on smooth fans this is an integer, and L generates k-jets
    exactly when it is at least k.
    """
    fan = L.fan
    psi = support_function(L)
    ratios = []
    for w in fan.walls:
        d = intersection_number(L, w, psi)
        m = curve_multiplicity(fan, w)
        if d % m:
            raise InconsistencyError("non-integral Seshadri ratio on a smooth fan")
        ratios.append(d // m)
    k = min(ratios)
    return NOT_SPANNED if k < 0 else k


@dataclass(frozen=True)
class AdjointNefReport:
    bundle: LineBundle
    table: tuple[int, ...]
    nef: bool
    negative_walls: tuple[int, ...]


def adjoint_nef_report(L: LineBundle, k: int) -> AdjointNefReport:
    """Wall table and nefness of kK + L on a surface, for k-jet ample L."""
    if L.fan.dim != 2:
        raise DimensionError(f"adjoint report needs a surface, fan has dimension {L.fan.dim}")
    level = jet_level(L)
    if level is NOT_SPANNED or level < k:
        raise PreconditionError(f"L has jet level {level}, need at least {k}")
    adj = canonical_bundle(L.fan) * k + L
    table = intersection_table(adj)
    negative = tuple(i for i, x in enumerate(table) if x < 0)
    return AdjointNefReport(adj, table, not negative, negative)


def self_intersection(L: LineBundle) -> int:
    """L^2 on a surface, expanded as sum_i a_i (L . D_i)."""
    fan = L.fan
    if fan.dim != 2:
        raise DimensionError("self-intersection is implemented for surfaces only")
    return intersection_pairing(L, L)


def intersection_pairing(L: LineBundle, E: LineBundle) -> int:
    """L . E on a surface via sum_i a_i (E . D_i); every D_i is a wall curve."""
    fan = L.fan
    if fan.dim != 2:
        raise DimensionError("intersection pairing is implemented for surfaces only")
    table = intersection_table(E)
    total = 0
    for w, value in zip(fan.walls, table):
        (ray,) = w.shared_rays
        total += L.coeffs[ray] * value
    return total
