"""The polytope P_L, its vertices and edges, and the monomial basis of H^0(X, L)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lattice
from .divisors import NOT_SPANNED, LineBundle, is_k_convex, max_convexity, support_function
from .errors import InconsistencyError, NotConvexError, NotKConvexError, ParameterError
from .fan import Wall


@dataclass(frozen=True)
class HPolytope:
    """Inequalities <m, normal> >= bound, one per ray."""

    inequalities: tuple[tuple[tuple[int, ...], int], ...]

    def contains(self, m: Sequence[int]) -> bool:
        return all(lattice.pair(m, normal) >= bound for normal, bound in self.inequalities)


@dataclass(frozen=True)
class SectionSet:
    """Lattice points of P_L with their exponent vectors in every fixed-point chart.

    ``exponents[p][c]`` is the tuple (<m, rho_j> + a_j) over the rays rho_j of
    cone c (in the cone's sorted ray order) for point ``points[p]``.
    """

    points: tuple[tuple[int, ...], ...]
    exponents: tuple[tuple[tuple[int, ...], ...], ...]

    def __len__(self):
        return len(self.points)


def polytope_of(L: LineBundle) -> HPolytope:
    return HPolytope(tuple((ray, -a) for ray, a in zip(L.fan.rays, L.coeffs)))


def _require_convex(L: LineBundle):
    psi = support_function(L)
    if max_convexity(psi) is NOT_SPANNED:
        raise NotConvexError("support function is not convex; P_L is not spanned by its m_sigma")
    return psi


def vertices(L: LineBundle) -> list[tuple[int, ...]]:
    """Distinct m_sigma, sorted lexicographically.

    For convex psi_L these span P_L; for strictly convex psi_L they are
    exactly its vertices, one per maximal cone.
    """
    psi = _require_convex(L)
    return sorted(set(psi.slopes))


def edge_length(L: LineBundle, wall: Wall) -> int:
    """Lattice length of the segment from m_{sigma_0} to m_{sigma_1}."""
    psi = _require_convex(L)
    return lattice.lattice_length(lattice.sub(psi.slopes[wall.cone_a], psi.slopes[wall.cone_b]))


def edge_lengths(L: LineBundle) -> tuple[int, ...]:
    return tuple(edge_length(L, w) for w in L.fan.walls)


def chart_exponents_of(L: LineBundle, m: Sequence[int], cone: int) -> tuple[int, ...]:
    fan = L.fan
    return tuple(lattice.pair(m, fan.rays[i]) + L.coeffs[i] for i in fan.cones[cone])


def lattice_points(L: LineBundle) -> SectionSet:
    """All of P_L cap M, in lexicographic order.

    Any m in P_L satisfies m >= psi_L everywhere, hence <m, +-e_j> is bounded
    by the extreme values of m_sigma on +-e_j.  The coordinate box of the
    m_sigma therefore contains P_L whether or not psi_L is convex.
    """
    psi = support_function(L)
    poly = polytope_of(L)
    n = L.fan.dim
    lo = [min(m[j] for m in psi.slopes) for j in range(n)]
    hi = [max(m[j] for m in psi.slopes) for j in range(n)]
    points = []
    for m in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if poly.contains(m):
            points.append(tuple(m))
    exps = tuple(
        tuple(chart_exponents_of(L, m, c) for c in range(L.fan.n_cones)) for m in points
    )
    return SectionSet(tuple(points), exps)


def section_lemma_point(L: LineBundle, sigma: int, t: Sequence[int]) -> tuple[int, ...]:
    """Section whose germ at x(sigma) is the monomial with exponents t.

    Walks t_j / l_j of the way along each edge leaving m_sigma, where l_j is
    the lattice length of the edge towards the neighbour across the facet
    opposite ray j.  Requires psi_L to be k-convex with sum(t) <= k.
    """
    fan = L.fan
    n = fan.dim
    t = tuple(t)
    if len(t) != n or any(x < 0 for x in t):
        raise ParameterError(f"exponent tuple must have {n} non-negative entries, got {t}")
    psi = support_function(L)
    k = max_convexity(psi)
    if k is NOT_SPANNED or sum(t) > k:
        raise NotKConvexError(f"needs {sum(t)}-convexity, support function is {k}-convex")
    assert is_k_convex(psi, sum(t))
    cone = fan.cones[sigma]
    m_sigma = psi.slopes[sigma]
    m = [Fraction(x) for x in m_sigma]
    for j, ray in enumerate(cone):
        if t[j] == 0:
            continue
        wall = next(w for w in fan.walls if sigma in (w.cone_a, w.cone_b) and ray not in w.shared_rays)
        other = wall.cone_b if wall.cone_a == sigma else wall.cone_a
        step = lattice.sub(psi.slopes[other], m_sigma)
        length = lattice.lattice_length(step)
        for i in range(n):
            m[i] += Fraction(t[j], length) * step[i]
    if any(x.denominator != 1 for x in m):
        raise InconsistencyError(f"section construction left the lattice: {m}")
    point = tuple(int(x) for x in m)
    if chart_exponents_of(L, point, sigma) != t or not polytope_of(L).contains(point):
        raise InconsistencyError("constructed section does not have the requested germ")
    return point


def area2(L: LineBundle) -> Fraction:
    """Twice the Euclidean area of P_L for a nef bundle on a surface."""
    pts = vertices(L)
    if len(pts) < 3:
        return Fraction(0)
    cx = Fraction(sum(p[0] for p in pts), len(pts))
    cy = Fraction(sum(p[1] for p in pts), len(pts))

    def key(p):
        # exact angular sort around the centroid
        x, y = p[0] - cx, p[1] - cy
        upper = y > 0 or (y == 0 and x > 0)
        slope = x / (abs(x) + abs(y))
        return (0, -slope) if upper else (1, slope)

    pts.sort(key=key)
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total)
