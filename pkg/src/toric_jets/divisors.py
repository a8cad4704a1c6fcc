"""Torus-invariant line bundles, their support functions and k-convexity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import lattice
from .errors import DimensionError, FanMismatchError, ParameterError
from .fan import Fan


class NotSpanned:
    """Marker for "no jet level": the bundle is not even globally generated.

    Kept distinct from integers so it cannot slip into arithmetic or ordering
    comparisons unnoticed.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_SPANNED"

    def __str__(self):
        return "not-spanned"

    def __reduce__(self):
        return (NotSpanned, ())


NOT_SPANNED = NotSpanned()


def is_spanned(level) -> bool:
    return level is not NOT_SPANNED


def level_min(level, cap: int):
    """min(level, cap), passing the not-spanned marker through."""
    return level if level is NOT_SPANNED else min(level, cap)


@dataclass(frozen=True)
class LineBundle:
    """L = sum a_i D_i, one integer coefficient per ray of ``fan``."""

    fan: Fan
    coeffs: tuple[int, ...]

    def __init__(self, fan: Fan, coeffs: Sequence[int]):
        coeffs = lattice.as_vector(coeffs)
        if len(coeffs) != fan.n_rays:
            raise DimensionError(f"{len(coeffs)} coefficients for {fan.n_rays} rays")
        object.__setattr__(self, "fan", fan)
        object.__setattr__(self, "coeffs", coeffs)

    def _same_fan(self, other: "LineBundle"):
        if other.fan is not self.fan and other.fan != self.fan:
            raise FanMismatchError("line bundles live on different fans")

    def __add__(self, other: "LineBundle") -> "LineBundle":
        self._same_fan(other)
        return LineBundle(self.fan, lattice.add(self.coeffs, other.coeffs))

    def __sub__(self, other: "LineBundle") -> "LineBundle":
        self._same_fan(other)
        return LineBundle(self.fan, lattice.sub(self.coeffs, other.coeffs))

    def __mul__(self, c: int) -> "LineBundle":
        return LineBundle(self.fan, lattice.scale(c, self.coeffs))

    __rmul__ = __mul__

    def __neg__(self) -> "LineBundle":
        return self * -1


def divisor(fan: Fan, **terms: int) -> LineBundle:
    """Convenience constructor: ``divisor(fan, D1=3, D4=-1)`` (1-based names)."""
    coeffs = [0] * fan.n_rays
    for name, c in terms.items():
        if not name.startswith("D") or not name[1:].isdigit():
            raise ParameterError(f"unknown divisor name {name!r}")
        idx = int(name[1:]) - 1
        if not 0 <= idx < fan.n_rays:
            raise ParameterError(f"{name} does not exist on a fan with {fan.n_rays} rays")
        coeffs[idx] = c
    return LineBundle(fan, coeffs)


def canonical_bundle(fan: Fan) -> LineBundle:
    return LineBundle(fan, [-1] * fan.n_rays)


def anticanonical_bundle(fan: Fan) -> LineBundle:
    return LineBundle(fan, [1] * fan.n_rays)


def principal_divisor(fan: Fan, m: Sequence[int]) -> LineBundle:
    """div(chi^m) = sum <m, rho_i> D_i."""
    return LineBundle(fan, [lattice.pair(m, r) for r in fan.rays])


def linearly_equivalent(L: LineBundle, E: LineBundle) -> bool:
    """Whether L - E is the divisor of a character."""
    diff = L - E
    fan = L.fan
    m = lattice.solve_unimodular(fan.cone_rays(0), [diff.coeffs[i] for i in fan.cones[0]])
    return principal_divisor(fan, m).coeffs == diff.coeffs


@dataclass(frozen=True)
class SupportFunction:
    """The piecewise-linear function psi_L, one slope m_sigma per maximal cone.

    ``values[i]`` is psi at ray i, i.e. ``-a_i``.
    """

    fan: Fan
    slopes: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def __call__(self, v: Sequence[int]) -> int:
        return evaluate(self, v)


def support_function(L: LineBundle) -> SupportFunction:
    fan = L.fan
    slopes = []
    for c, cone in enumerate(fan.cones):
        slopes.append(lattice.solve_unimodular(fan.cone_rays(c), [-L.coeffs[i] for i in cone]))
    values = tuple(-a for a in L.coeffs)
    # m_sigma0 and m_sigma1 must agree on their common face
    for w in fan.walls:
        for i in w.shared_rays:
            ra = lattice.pair(slopes[w.cone_a], fan.rays[i])
            rb = lattice.pair(slopes[w.cone_b], fan.rays[i])
            assert ra == rb == values[i]
    return SupportFunction(fan, tuple(slopes), values)


def evaluate(psi: SupportFunction, v: Sequence[int]) -> int:
    """psi(v) = <m_sigma, v> for any maximal cone sigma containing v."""
    c, _ = psi.fan.containing_cone(v)
    return lattice.pair(psi.slopes[c], v)


def convexity_gaps(psi: SupportFunction):
    """Yield (cone, ray, <m_cone, ray> - psi(ray)) for every ray outside every cone.

    Both sides of the k-convexity inequality are linear on each cone, so the
    inequality at rays implies it at every lattice point outside the cone;
    checking rays is therefore enough.
    """
    fan = psi.fan
    for c, cone in enumerate(fan.cones):
        members = set(cone)
        for i, ray in enumerate(fan.rays):
            if i not in members:
                yield c, i, lattice.pair(psi.slopes[c], ray) - psi.values[i]


def is_k_convex(psi: SupportFunction, k: int) -> bool:
    return all(gap >= k for _, _, gap in convexity_gaps(psi))


def max_convexity(psi: SupportFunction):
    """Largest k for which psi is k-convex, or NOT_SPANNED if not even 0-convex."""
    gaps = [gap for _, _, gap in convexity_gaps(psi)]
    if not gaps:
        raise DimensionError("fan has a single maximal cone; convexity is undefined")
    k = min(gaps)
    return NOT_SPANNED if k < 0 else k


def pullback_minus_exceptional(L: LineBundle, blown_fan: Fan, new_ray: int, eps: int) -> LineBundle:
    """p^*L - eps E on the star subdivision ``blown_fan`` of L's fan.

    Old rays keep their coefficients; the exceptional ray gets
    ``sum_{rho_i in sigma} a_i - eps``, which makes psi of the pullback agree
    with psi_L everywhere when eps = 0.
    """
    fan = L.fan
    if eps < 0:
        raise ParameterError(f"eps must be >= 0, got {eps}")
    if (
        new_ray != blown_fan.n_rays - 1
        or blown_fan.n_rays != fan.n_rays + 1
        or blown_fan.rays[:-1] != fan.rays
    ):
        raise FanMismatchError("blown_fan is not a one-ray star subdivision of L's fan")
    rho = blown_fan.rays[new_ray]
    c, coords = fan.containing_cone(rho)
    if sorted(coords) != [1] * fan.dim:
        raise FanMismatchError("new ray is not the sum of the rays of a maximal cone")
    sigma = fan.cones[c]
    if sigma in blown_fan.cones:
        raise FanMismatchError("the subdivided cone is still present in blown_fan")
    a_e = sum(L.coeffs[i] for i in sigma) - eps
    return LineBundle(blown_fan, list(L.coeffs) + [a_e])
