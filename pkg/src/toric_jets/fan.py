"""Complete smooth fans, their walls, standard examples and star subdivisions."""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import lattice
from .errors import (
    ConeError,
    DanglingWall,
    DimensionError,
    FanError,
    IncompleteFan,
    NonPrimitiveRay,
    NonUnimodularCone,
    ParameterError,
    UnusedRay,
)

# Fixed seed for the completeness probes in dimension >= 3.
PROBE_SEED = 20240611
PROBE_COUNT = 24


@dataclass(frozen=True)
class Wall:
    """A codimension-one cone shared by two maximal cones.

    ``cone_a < cone_b`` always; ``opposite_a`` is the ray of ``cone_a`` not in
    the wall, ``opposite_b`` the one of ``cone_b``.
    """

    cone_a: int
    cone_b: int
    shared_rays: tuple[int, ...]
    opposite_a: int
    opposite_b: int


@dataclass(frozen=True)
class ValidationReport:
    unimodular: bool
    walls_two_sided: bool
    complete: bool

    @property
    def ok(self) -> bool:
        return self.unimodular and self.walls_two_sided and self.complete


@dataclass(frozen=True, eq=False)
class Fan:
    """A complete regular fan given by primitive rays and maximal cones.

    Cones are stored as sorted tuples of 0-based ray indices.  Construction
    validates the data and raises a :class:`~toric_jets.errors.FanError`
    subclass if it is not a smooth complete fan.
    """

    rays: tuple[tuple[int, ...], ...]
    cones: tuple[tuple[int, ...], ...]
    report: ValidationReport = field(init=False, repr=False, compare=False)

    def __init__(self, rays: Sequence[Sequence[int]], cones: Sequence[Sequence[int]]):
        object.__setattr__(self, "rays", tuple(lattice.as_vector(r) for r in rays))
        object.__setattr__(self, "cones", tuple(tuple(sorted(int(i) for i in c)) for c in cones))
        object.__setattr__(self, "report", validate(self))

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @property
    def n_cones(self) -> int:
        return len(self.cones)

    def cone_rays(self, c: int) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in self.cones[c]]

    @cached_property
    def walls(self) -> tuple[Wall, ...]:
        return tuple(_find_walls(self.cones, self.dim))

    def cone_index(self, ray_indices: Sequence[int]) -> int:
        key = tuple(sorted(ray_indices))
        try:
            return self.cones.index(key)
        except ValueError:
            raise ConeError(f"{list(key)} is not a maximal cone of this fan") from None

    def containing_cone(self, v: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        """Index of a maximal cone containing v and v's coordinates in its rays."""
        for c in range(self.n_cones):
            coords = lattice.coordinates_in_basis(self.cone_rays(c), v)
            if all(x >= 0 for x in coords):
                return c, coords
        raise IncompleteFan(f"no maximal cone contains {tuple(v)}")

    def canonical_form(self) -> frozenset:
        """Ray-order independent description, for equality up to relabelling."""
        return frozenset(frozenset(self.rays[i] for i in c) for c in self.cones)

    def same_as(self, other: "Fan") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.rays == other.rays and self.cones == other.cones

    def __hash__(self):
        return hash((self.rays, self.cones))


def _faces(cone: tuple[int, ...]):
    for i in range(len(cone)):
        yield cone[:i] + cone[i + 1:], cone[i]


def _find_walls(cones, n) -> list[Wall]:
    by_face: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for ci, cone in enumerate(cones):
        for face, opp in _faces(cone):
            by_face.setdefault(face, []).append((ci, opp))
    walls = []
    for face, owners in by_face.items():
        if len(owners) == 2:
            (ca, oa), (cb, ob) = sorted(owners)
            walls.append(Wall(ca, cb, face, oa, ob))
    walls.sort(key=lambda w: (w.cone_a, w.cone_b))
    return walls


def validate(fan: Fan) -> ValidationReport:
    """Check that the rays and cones form a smooth complete fan.

    Raises on the first failure; the returned report is all-true otherwise.
    Completeness is exact in dimension <= 2 (cyclic order of rays).  In
    higher dimension each (n-1)-face must bound exactly two cones lying on
    opposite sides of it, which makes the cones cover the sphere some whole
    number of times; seeded probe directions then check that number is one.
    """
    rays, cones = fan.rays, fan.cones
    if not rays:
        raise FanError("a fan needs at least one ray")
    n = len(rays[0])
    if n < 1:
        raise DimensionError("lattice dimension must be at least 1")
    for i, r in enumerate(rays):
        if len(r) != n:
            raise DimensionError(f"ray {i} has length {len(r)}, expected {n}")
        if not any(r):
            raise NonPrimitiveRay(f"ray {i} is the zero vector")
        if not lattice.is_primitive(r):
            raise NonPrimitiveRay(f"ray {i} = {r} is not primitive")
    if len(set(rays)) != len(rays):
        raise FanError("rays must be pairwise distinct")
    if not cones:
        raise IncompleteFan("no maximal cones given")
    if len(set(cones)) != len(cones):
        raise FanError("duplicate maximal cone")
    used = set()
    for ci, cone in enumerate(cones):
        if len(cone) != n or len(set(cone)) != n:
            raise ConeError(f"cone {ci} must have {n} distinct rays, got {list(cone)}")
        for i in cone:
            if not 0 <= i < len(rays):
                raise ConeError(f"cone {ci} refers to missing ray index {i}")
        d = lattice.det([rays[i] for i in cone])
        if d not in (1, -1):
            raise NonUnimodularCone(f"cone {ci} = {list(cone)} has determinant {d}")
        used.update(cone)
    unused = set(range(len(rays))) - used
    if unused:
        raise UnusedRay(f"rays {sorted(unused)} lie in no maximal cone")

    by_face: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for ci, cone in enumerate(cones):
        for face, opp in _faces(cone):
            by_face.setdefault(face, []).append((ci, opp))
    for face, owners in by_face.items():
        if len(owners) == 1:
            raise IncompleteFan(f"face {list(face)} bounds only cone {owners[0][0]}")
        if len(owners) > 2:
            raise DanglingWall(f"face {list(face)} bounds {len(owners)} maximal cones")
        (ca, oa), (cb, ob) = owners
        # the far ray of one cone must have a negative coefficient on the
        # near ray of the other, i.e. the two cones sit on opposite sides
        coords = lattice.coordinates_in_basis([rays[i] for i in cones[ca]], rays[ob])
        if coords[cones[ca].index(oa)] >= 0:
            raise DanglingWall(f"cones {ca} and {cb} overlap across face {list(face)}")

    if n == 2:
        _check_cyclic_2d(rays, cones)
    elif n >= 3:
        _probe_completeness(rays, cones, by_face)
    return ValidationReport(True, True, True)


def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_order(rays) -> list[int]:
    def cmp(i, j):
        a, b = rays[i], rays[j]
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(range(len(rays)), key=functools.cmp_to_key(cmp))


def _check_cyclic_2d(rays, cones):
    order = _angle_order(rays)
    expected = {tuple(sorted((order[i], order[(i + 1) % len(order)]))) for i in range(len(order))}
    if len(order) < 3 or expected != set(cones):
        raise IncompleteFan("cones are not the consecutive pairs of rays in angular order")


def _interior_count(rays, cones, p) -> tuple[int, bool]:
    inside = 0
    degenerate = False
    for cone in cones:
        coords = lattice.coordinates_in_basis([rays[i] for i in cone], p)
        if all(x > 0 for x in coords):
            inside += 1
        elif all(x >= 0 for x in coords):
            degenerate = True
    return inside, degenerate


def _probe_completeness(rays, cones, by_face):
    n = len(rays[0])
    probes = []
    big = 1000
    for face, owners in sorted(by_face.items()):
        base = [0] * n
        for i in face:
            base = [b + big * x for b, x in zip(base, rays[i])]
        for _, opp in owners:
            probes.append(tuple(b + x for b, x in zip(base, rays[opp])))
    rng = random.Random(PROBE_SEED)
    for _ in range(PROBE_COUNT):
        probes.append(tuple(rng.randint(-10**6, 10**6) for _ in range(n)))
    for p in probes:
        if not any(p):
            continue
        inside, degenerate = _interior_count(rays, cones, p)
        if inside == 0 and degenerate:
            continue
        if inside != 1:
            raise IncompleteFan(f"probe direction {p} lies in {inside} maximal cones")


# ---------------------------------------------------------------- builders


def projective_space(n: int) -> Fan:
    """Fan of P^n: rays e_1..e_n and -(e_1+...+e_n)."""
    if n < 1:
        raise DimensionError(f"projective space needs n >= 1, got {n}")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple([-1] * n))
    cones = [[i for i in range(n + 1) if i != skip] for skip in range(n, -1, -1)]
    return Fan(rays, cones)


def hirzebruch(r: int) -> Fan:
    """Fan of the Hirzebruch surface F_r.

    Rays are ordered e2, e1, -e2, -e1 + r e2 so that D1 is the negative
    section (D1^2 = -r) and D2 a fibre.
    """
    if r < 0:
        raise ParameterError(f"Hirzebruch index must be >= 0, got {r}")
    rays = [(0, 1), (1, 0), (0, -1), (-1, r)]
    cones = [(0, 1), (1, 2), (2, 3), (3, 0)]
    return Fan(rays, cones)


def del_pezzo_6() -> Fan:
    """Equivariant blow-up of P^2 at its three fixed points (degree 6)."""
    rays = [(0, 1), (1, 1), (1, 0), (0, -1), (-1, -1), (-1, 0)]
    cones = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    return Fan(rays, cones)


def blow_up(fan: Fan, sigma: int) -> tuple[Fan, int]:
    """Star subdivision of ``fan`` at maximal cone ``sigma``.

    The new ray (sum of the rays of sigma) is appended last, so old ray
    indices stay valid.  Cone sigma is removed and its n replacements are
    appended after the remaining cones.
    """
    if fan.dim < 2:
        raise DimensionError("blowing up a point of a curve changes nothing; needs dim >= 2")
    if not isinstance(sigma, int) or not 0 <= sigma < fan.n_cones:
        raise ConeError(f"{sigma!r} is not a maximal cone index (fan has {fan.n_cones})")
    cone = fan.cones[sigma]
    new_ray = tuple(sum(c) for c in zip(*(fan.rays[i] for i in cone)))
    assert lattice.is_primitive(new_ray), "sum of a unimodular basis must be primitive"
    e = fan.n_rays
    new_cones = [c for i, c in enumerate(fan.cones) if i != sigma]
    for i in cone:
        new_cones.append(tuple(sorted([j for j in cone if j != i] + [e])))
    return Fan(list(fan.rays) + [new_ray], new_cones), e


def blow_up_cones(fan: Fan, cones: Sequence[Sequence[int]]) -> tuple[Fan, list[int]]:
    """Blow up several maximal cones, each given by its ray indices."""
    new_rays = []
    for ray_set in cones:
        fan, e = blow_up(fan, fan.cone_index(ray_set))
        new_rays.append(e)
    return fan, new_rays


def random_blow_up(fan: Fan, count: int, seed: int) -> Fan:
    """Blow up ``count`` maximal cones chosen with a seeded generator."""
    rng = random.Random(seed)
    for _ in range(count):
        fan, _ = blow_up(fan, rng.randrange(fan.n_cones))
    return fan


def is_isomorphic(f: Fan, g: Fan) -> bool:
    """Whether some lattice automorphism carries the fan f onto g."""
    if (f.dim, f.n_rays, f.n_cones) != (g.dim, g.n_rays, g.n_cones):
        return False
    src = f.cone_rays(0)
    target = g.canonical_form()
    g_rays = set(g.rays)
    for cone in g.cones:
        for perm in itertools.permutations(cone):
            dst = [g.rays[i] for i in perm]
            image = _linear_map(src, dst)
            mapped = [image(r) for r in f.rays]
            if set(mapped) != g_rays:
                continue
            if frozenset(frozenset(mapped[i] for i in c) for c in f.cones) == target:
                return True
    return False


def _linear_map(src, dst):
    # A with A src_i = dst_i; src unimodular so A is integral
    n = len(src)

    def apply(v):
        coords = lattice.coordinates_in_basis(src, v)
        return tuple(sum(coords[i] * dst[i][j] for i in range(n)) for j in range(n))

    return apply
