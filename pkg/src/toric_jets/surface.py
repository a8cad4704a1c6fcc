"""Toric surfaces: nefness of k-adjoint bundles and higher adjoint jets."""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import NOT_SPANNED, LineBundle, canonical_bundle, linearly_equivalent
from .errors import DimensionError, PreconditionError
from .fan import Fan, Wall
from .intersection import intersection_table, jet_level, self_intersection, wall_relation
from .jets import JetSpec, is_jet_surjective, oracle_jet_level
from .polytope import lattice_points

P2_EXCEPTION = "minimal-P2-exception"
FR_EXCEPTION = "minimal-Fr-exception"
NEF = "nef"
NON_MINIMAL = "non-minimal"


@dataclass(frozen=True)
class AdjointReport:
    """Outcome of :func:`k_reduction_check`.

    ``tag`` is what the classification of minimal toric surfaces predicts,
    ``nef`` is read off the computed wall table; ``agrees`` compares the two.
    """

    bundle: LineBundle
    table: tuple[int, ...]
    nef: bool
    violating_walls: tuple[int, ...]
    tag: str
    predicted_nef: bool
    anticanonical: bool

    @property
    def agrees(self) -> bool:
        return self.nef == self.predicted_nef


def _require_surface(fan: Fan):
    if fan.dim != 2:
        raise DimensionError(f"expected a toric surface, fan has dimension {fan.dim}")


def wall_ray(wall: Wall) -> int:
    """On a surface each wall is a ray; return its index."""
    (ray,) = wall.shared_rays
    return ray


def self_intersections(fan: Fan) -> dict[int, int]:
    """D_i^2 for every ray i of a surface fan."""
    _require_surface(fan)
    return {wall_ray(w): -s for w in fan.walls for s in wall_relation(fan, w).coefficients.values()}


def k_reduction_check(L: LineBundle, k: int) -> AdjointReport:
    """Nefness of kK_S + L for a k-jet ample L on a toric surface S.

    Non-nef is predicted only on P^2 with L = O(a), a < 3k, and on F_r when
    L meets some fibre in fewer than 2k points.  L = -kK_S is accepted and
    flagged (kK_S + L is then trivial, hence nef).
    """
    fan = L.fan
    _require_surface(fan)
    if k < 0:
        raise PreconditionError("k must be >= 0")
    level = jet_level(L)
    if level is NOT_SPANNED or level < k:
        raise PreconditionError(f"L has jet level {level}, need at least {k}")
    adj = canonical_bundle(fan) * k + L
    table = intersection_table(adj)
    violating = tuple(i for i, x in enumerate(table) if x < 0)
    l_table = intersection_table(L)

    if fan.n_rays == 3:
        degree = l_table[0]  # L.line; all walls agree on P^2
        predicted = degree >= 3 * k
        tag = NEF if predicted else P2_EXCEPTION
    elif fan.n_rays == 4:
        sq = self_intersections(fan)
        fibre_degrees = [d for w, d in zip(fan.walls, l_table) if sq[wall_ray(w)] == 0]
        predicted = min(fibre_degrees) >= 2 * k
        tag = NEF if predicted else FR_EXCEPTION
    else:
        predicted = True
        tag = NON_MINIMAL
    anti = linearly_equivalent(L, canonical_bundle(fan) * -k)
    return AdjointReport(adj, table, not violating, violating, tag, predicted, anti)


def _adjoint_preconditions(L: LineBundle, k: int):
    _require_surface(L.fan)
    if k < 0:
        raise PreconditionError("k must be >= 0")
    level = jet_level(L)
    if level is NOT_SPANNED or level < 1:
        raise PreconditionError("L must be ample")
    if self_intersection(L) <= 1:
        raise PreconditionError(f"need L^2 > 1, got {self_intersection(L)}")


def higher_adjoint_fixed_point_jets(L: LineBundle, k: int) -> bool:
    """Whether K_S + (k+2)L generates k-jets at each torus-fixed point."""
    _adjoint_preconditions(L, k)
    adj = canonical_bundle(L.fan) + L * (k + 2)
    sections = lattice_points(adj)
    return all(
        is_jet_surjective(adj, JetSpec([(c, k + 1)]), sections) for c in range(L.fan.n_cones)
    )


def higher_adjoint_simultaneous(L: LineBundle, k: int, max_fixed_points: int = 8) -> bool:
    """Whether K_S + (2k+2)L generates simultaneous k-jets on fixed points."""
    _adjoint_preconditions(L, k)
    adj = canonical_bundle(L.fan) + L * (2 * k + 2)
    level = oracle_jet_level(adj, max_k=k, max_fixed_points=max_fixed_points)
    return level is not NOT_SPANNED and level >= k
