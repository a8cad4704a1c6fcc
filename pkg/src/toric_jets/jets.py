"""Brute-force jet surjectivity at torus-fixed points.

At the fixed point x(sigma) the section chi^m has germ prod_j X_j^{e_j} with
e_j = <m, rho_j> + a_j over the rays of sigma.  Its Taylor coefficient for
the multi-index t is therefore nonzero (equal to prod t_j!) exactly when
e = t.  Surjectivity onto a sum of jet fibres is decided by exact rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator, Sequence

from . import lattice
from .divisors import NOT_SPANNED, LineBundle
from .errors import NotASectionError, ParameterError, SpecError
from .polytope import SectionSet, chart_exponents_of, lattice_points, polytope_of

DEFAULT_MAX_K = 3
DEFAULT_MAX_FIXED_POINTS = 8


@dataclass(frozen=True)
class JetSpec:
    """Jet targets: (maximal cone index, multiplicity k_i >= 1), cones distinct.

    A JetSpec tests k-jets with k = sum(k_i) - 1.
    """

    targets: tuple[tuple[int, int], ...]

    def __init__(self, targets: Sequence[tuple[int, int]]):
        targets = tuple((int(c), int(k)) for c, k in targets)
        if not targets:
            raise SpecError("a jet spec needs at least one target")
        cones = [c for c, _ in targets]
        if len(set(cones)) != len(cones):
            raise SpecError(f"target cones must be distinct, got {cones}")
        if any(k < 1 for _, k in targets):
            raise SpecError("multiplicities must be >= 1")
        object.__setattr__(self, "targets", targets)

    @property
    def order(self) -> int:
        return sum(k for _, k in self.targets) - 1


@dataclass(frozen=True)
class JetMatrix:
    rows: tuple[tuple[int, ...], ...]  # lattice points m
    columns: tuple[tuple[int, tuple[int, ...]], ...]  # (cone, multi-index t)
    entries: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return lattice.rank(self.entries)


def multi_indices(n: int, max_degree: int) -> list[tuple[int, ...]]:
    """All t in N^n with |t| <= max_degree, graded then lexicographic."""
    out = []
    for d in range(max_degree + 1):
        for t in itertools.product(range(d + 1), repeat=n):
            if sum(t) == d:
                out.append(t)
    return out


def chart_exponents(L: LineBundle, m: Sequence[int], sigma: int) -> tuple[int, ...]:
    if not polytope_of(L).contains(m):
        raise NotASectionError(f"{tuple(m)} is not a lattice point of P_L")
    return chart_exponents_of(L, m, sigma)


def _columns(L: LineBundle, spec: JetSpec):
    n = L.fan.dim
    for c, k in spec.targets:
        if not 0 <= c < L.fan.n_cones:
            raise SpecError(f"cone index {c} out of range")
        for t in multi_indices(n, k - 1):
            yield c, t


def jet_matrix(L: LineBundle, spec: JetSpec, sections: SectionSet | None = None) -> JetMatrix:
    if sections is None:
        sections = lattice_points(L)
    columns = tuple(_columns(L, spec))
    entries = []
    for p in range(len(sections)):
        row = []
        for c, t in columns:
            row.append(prod(factorial(x) for x in t) if sections.exponents[p][c] == t else 0)
        entries.append(tuple(row))
    return JetMatrix(sections.points, columns, tuple(entries))


def expected_columns(n: int, spec: JetSpec) -> int:
    return sum(comb(n + k - 1, n) for _, k in spec.targets)


def chart_index(sections: SectionSet) -> list[dict[tuple[int, ...], int]]:
    """Per cone, map exponent vector -> row of the (unique) section having it."""
    n_cones = len(sections.exponents[0]) if sections.points else 0
    index: list[dict[tuple[int, ...], int]] = [{} for _ in range(n_cones)]
    for p, per_cone in enumerate(sections.exponents):
        for c, e in enumerate(per_cone):
            index[c][e] = p
    return index


def is_jet_surjective(
    L: LineBundle,
    spec: JetSpec,
    sections: SectionSet | None = None,
    index: list[dict[tuple[int, ...], int]] | None = None,
) -> bool:
    """Exact rank test of the jet matrix restricted to its nonzero rows."""
    if sections is None:
        sections = lattice_points(L)
    if not sections.points:
        return False
    if index is None:
        index = chart_index(sections)
    columns = list(_columns(L, spec))
    rows: dict[int, list[int]] = {}
    for j, (c, t) in enumerate(columns):
        p = index[c].get(t)
        if p is None:
            return False  # zero column
        rows.setdefault(p, [0] * len(columns))[j] = prod(factorial(x) for x in t)
    if len(rows) < len(columns):
        return False
    return lattice.rank(list(rows.values())) == len(columns)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def all_specs(n_cones: int, k: int) -> Iterator[JetSpec]:
    """Every jet spec over distinct fixed points with multiplicities summing to k+1."""
    for r in range(1, min(n_cones, k + 1) + 1):
        for cones in itertools.combinations(range(n_cones), r):
            for ks in compositions(k + 1, r):
                yield JetSpec(list(zip(cones, ks)))


def failing_spec(L: LineBundle, k: int, sections: SectionSet | None = None) -> JetSpec | None:
    if sections is None:
        sections = lattice_points(L)
    index = chart_index(sections) if sections.points else None
    for spec in all_specs(L.fan.n_cones, k):
        if not is_jet_surjective(L, spec, sections, index):
            return spec
    return None


def oracle_jet_level(
    L: LineBundle,
    max_k: int = DEFAULT_MAX_K,
    max_fixed_points: int = DEFAULT_MAX_FIXED_POINTS,
):
    """Largest k <= max_k such that every fixed-point jet spec of order k surjects.

    Returns NOT_SPANNED when some 0-jet (plain evaluation) already fails.
    Surjectivity for order k implies it for all lower orders, so the search
    stops at the first failing order.
    """
    if max_k < 0:
        raise ParameterError("max_k must be >= 0")
    if L.fan.n_cones > max_fixed_points:
        raise ParameterError(
            f"{L.fan.n_cones} fixed points exceeds max_fixed_points={max_fixed_points}"
        )
    sections = lattice_points(L)
    for k in range(max_k + 1):
        if failing_spec(L, k, sections) is not None:
            return NOT_SPANNED if k == 0 else k - 1
    return max_k
