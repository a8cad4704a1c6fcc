import itertools

import pytest

from helpers import corpus, random_bundles
from toric_jets.divisors import NOT_SPANNED, LineBundle, anticanonical_bundle, divisor, level_min
from toric_jets.errors import NotASectionError, ParameterError, SpecError
from toric_jets.fan import del_pezzo_6, hirzebruch, projective_space
from toric_jets.intersection import jet_level
from toric_jets.jets import (
    JetSpec,
    all_specs,
    chart_exponents,
    compositions,
    expected_columns,
    is_jet_surjective,
    jet_matrix,
    multi_indices,
    oracle_jet_level,
)
from toric_jets.polytope import lattice_points

FANS = corpus()


def test_multi_indices():
    assert multi_indices(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(multi_indices(3, 2)) == 10


def test_compositions():
    assert sorted(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(compositions(2, 1)) == [(2,)]
    assert len(list(compositions(5, 3))) == 6


def test_spec_validation():
    assert JetSpec([(0, 2), (3, 1)]).order == 2
    with pytest.raises(SpecError):
        JetSpec([])
    with pytest.raises(SpecError):
        JetSpec([(0, 1), (0, 2)])
    with pytest.raises(SpecError):
        JetSpec([(0, 0)])
    with pytest.raises(SpecError):
        jet_matrix(divisor(projective_space(2), D1=1), JetSpec([(7, 1)]))


def test_all_specs_orders():
    specs = list(all_specs(3, 2))
    assert all(s.order == 2 for s in specs)
    # (3) once per cone, (1,2)/(2,1) per pair, (1,1,1) once
    assert len(specs) == 3 + 3 * 2 + 1


def test_dp6_chart_exponents_at_first_cone():
    L = anticanonical_bundle(del_pezzo_6())
    sections = lattice_points(L)
    got = {m: chart_exponents(L, m, 0) for m in sections.points}
    assert got[(0, -1)] == (0, 0)
    assert got[(1, -1)] == (0, 1)
    assert got[(-1, 0)] == (1, 0)
    assert got[(0, 0)] == (1, 1)
    assert got[(0, 1)] == (2, 2)
    with pytest.raises(NotASectionError):
        chart_exponents(L, (2, 2), 0)


def test_dp6_first_jets_have_rank_three():
    L = anticanonical_bundle(del_pezzo_6())
    for c in range(6):
        mat = jet_matrix(L, JetSpec([(c, 2)]))
        assert len(mat.columns) == 3
        assert mat.rank == 3
    assert not is_jet_surjective(L, JetSpec([(0, 3)]))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a", range(4))
def test_projective_space_jet_matrix_square(n, a):
    # O(a) on P^n: a single a-jet spec sees every section exactly once
    L = divisor(projective_space(n), D1=a)
    mat = jet_matrix(L, JetSpec([(0, a + 1)]))
    assert len(mat.rows) == len(mat.columns) == expected_columns(n, JetSpec([(0, a + 1)]))
    assert mat.rank == len(mat.columns)


def test_trivial_bundle_on_p1():
    L = LineBundle(projective_space(1), [0, 0])
    assert is_jet_surjective(L, JetSpec([(0, 1)]))
    assert not is_jet_surjective(L, JetSpec([(0, 2)]))
    assert not is_jet_surjective(L, JetSpec([(0, 1), (1, 1)]))
    assert oracle_jet_level(L) == 0


def test_empty_polytope():
    L = divisor(projective_space(2), D1=-1)
    assert len(lattice_points(L)) == 0
    assert not is_jet_surjective(L, JetSpec([(0, 1)]))
    assert oracle_jet_level(L) is NOT_SPANNED


def test_spec_order_does_not_matter():
    for name in ("F1", "dP6", "P3"):
        fan = FANS[name]
        for L in random_bundles(fan, 15, seed=61, lo=0, hi=3):
            for spec in all_specs(fan.n_cones, 2):
                flipped = JetSpec(list(reversed(spec.targets)))
                assert is_jet_surjective(L, spec) == is_jet_surjective(L, flipped)


@pytest.mark.parametrize("name", ["P2", "F0", "F2", "dP6"])
def test_reduced_rank_matches_full_matrix(name):
    fan = FANS[name]
    for L in random_bundles(fan, 25, seed=67, lo=-1, hi=3):
        sections = lattice_points(L)
        for spec in itertools.islice(all_specs(fan.n_cones, 1), 12):
            mat = jet_matrix(L, spec, sections)
            full = bool(mat.rows) and mat.rank == len(mat.columns)
            assert is_jet_surjective(L, spec, sections) == full


def test_oracle_limits():
    with pytest.raises(ParameterError):
        oracle_jet_level(divisor(projective_space(2), D1=1), max_k=-1)
    with pytest.raises(ParameterError):
        oracle_jet_level(anticanonical_bundle(del_pezzo_6()), max_fixed_points=5)


@pytest.mark.parametrize("name", ["P1", "P2", "F0", "F1", "F3", "dP6"])
def test_oracle_matches_jet_level(name):
    fan = FANS[name]
    for L in random_bundles(fan, 30, seed=71, lo=-1, hi=3):
        level = jet_level(L)
        assert oracle_jet_level(L, max_k=2) == level_min(level, 2)


def test_hirzebruch_oracle_example():
    L = divisor(hirzebruch(1), D1=2, D2=3)
    assert jet_level(L) == 1
    assert oracle_jet_level(L) == 1
