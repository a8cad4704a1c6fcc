import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from helpers import cofactor_det, corpus
from toric_jets import lattice
from toric_jets.errors import DimensionError, NotUnimodularError, ShapeError, ZeroVectorError

small = st.integers(-50, 50)


def vec(n):
    return st.lists(small, min_size=n, max_size=n).map(tuple)


@pytest.mark.parametrize(
    "m, v, expected",
    [((1, 0), (0, 1), 0), ((2, 3), (1, 1), 5), ((-1, -1), (1, 1), -2)],
)
def test_pair(m, v, expected):
    assert lattice.pair(m, v) == expected


def test_pair_dimension_mismatch():
    with pytest.raises(DimensionError):
        lattice.pair((1, 2), (1, 2, 3))


@given(vec(3), vec(3), vec(3))
def test_pair_bilinear(m, v, w):
    assert lattice.pair(m, lattice.add(v, w)) == lattice.pair(m, v) + lattice.pair(m, w)


@pytest.mark.parametrize(
    "rows, expected",
    [([(1, 0), (0, 1)], 1), ([(0, 1), (1, 1)], -1), ([(1, 0), (0, -1)], -1)],
)
def test_det_examples(rows, expected):
    assert lattice.det(rows) == cofactor_det(rows) == expected


@given(st.integers(1, 4).flatmap(lambda n: st.lists(vec(n), min_size=n, max_size=n)))
def test_det_matches_cofactor_expansion(rows):
    assert lattice.det(rows) == cofactor_det(rows)


@given(st.lists(vec(3), min_size=3, max_size=3), st.permutations(range(3)))
def test_det_row_permutation_changes_sign_only(rows, perm):
    permuted = [rows[i] for i in perm]
    assert abs(lattice.det(permuted)) == abs(lattice.det(rows))
    inversions = sum(1 for i, j in itertools.combinations(range(3), 2) if perm[i] > perm[j])
    parity = (-1) ** inversions
    assert lattice.det(permuted) == parity * lattice.det(rows)


def test_det_errors():
    with pytest.raises(ShapeError):
        lattice.det([(1, 2, 3), (4, 5, 6)])
    with pytest.raises(OverflowError):
        lattice.det([(2**40, 0), (0, 2**40)])


def test_solve_unimodular_examples():
    assert lattice.solve_unimodular([(1, 0), (0, 1)], (-1, -1)) == (-1, -1)
    m = lattice.solve_unimodular([(0, 1), (1, 1)], (-1, -1))
    assert m == (0, -1)
    assert lattice.pair(m, (0, 1)) == -1 and lattice.pair(m, (1, 1)) == -1
    assert lattice.solve_unimodular([(1, 0), (0, 1)], (0, 0)) == (0, 0)


def test_solve_unimodular_rejects_non_unimodular():
    with pytest.raises(NotUnimodularError):
        lattice.solve_unimodular([(2, 0), (0, 1)], (1, 1))


def test_solve_unimodular_round_trip_on_corpus():
    for fan in corpus().values():
        for c in range(fan.n_cones):
            A = fan.cone_rays(c)
            for b in itertools.product(range(-2, 3), repeat=fan.dim):
                x = lattice.solve_unimodular(A, b)
                assert tuple(lattice.pair(row, x) for row in A) == b


@pytest.mark.parametrize("v, expected", [((2, 4), (1, 2)), ((0, -3), (0, -1)), ((1, 1), (1, 1))])
def test_primitive(v, expected):
    assert lattice.primitive(v) == expected


def test_primitive_zero():
    with pytest.raises(ZeroVectorError):
        lattice.primitive((0, 0))


@given(st.integers(1, 6).flatmap(lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=7)))
def test_rank_matches_sympy(rows):
    assert lattice.rank(rows) == sympy.Matrix(rows).rank()
