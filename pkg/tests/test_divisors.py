import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import corpus, random_bundles
from toric_jets import lattice
from toric_jets.divisors import (
    NOT_SPANNED,
    LineBundle,
    anticanonical_bundle,
    canonical_bundle,
    divisor,
    evaluate,
    is_k_convex,
    linearly_equivalent,
    max_convexity,
    principal_divisor,
    pullback_minus_exceptional,
    support_function,
)
from toric_jets.errors import FanMismatchError
from toric_jets.fan import blow_up, del_pezzo_6, hirzebruch, projective_space
from toric_jets.intersection import is_nef

FANS = corpus()


def level(L):
    return max_convexity(support_function(L))


def test_zero_bundle_has_zero_slopes():
    for fan in FANS.values():
        psi = support_function(LineBundle(fan, [0] * fan.n_rays))
        assert all(m == (0,) * fan.dim for m in psi.slopes)
        assert is_k_convex(psi, 0) and not is_k_convex(psi, 1)


def test_dp6_anticanonical_slope_on_first_cone():
    psi = support_function(anticanonical_bundle(del_pezzo_6()))
    m = psi.slopes[0]
    assert m == (0, -1)
    # coordinates in the basis dual to (0,1), (1,1)
    assert (lattice.pair(m, (0, 1)), lattice.pair(m, (1, 1))) == (-1, -1)


def test_p2_hyperplane_slope():
    p2 = projective_space(2)
    psi = support_function(divisor(p2, D1=1))
    assert psi.slopes[p2.cone_index((0, 1))] == (-1, 0)


def test_evaluate():
    p2 = projective_space(2)
    psi = support_function(divisor(p2, D1=1))
    assert evaluate(psi, (1, 0)) == -1
    assert evaluate(psi, (0, 1)) == 0
    assert evaluate(psi, (-1, -1)) == 0
    zero = support_function(LineBundle(p2, [0, 0, 0]))
    assert all(evaluate(zero, v) == 0 for v in itertools.product(range(-2, 3), repeat=2))


def test_evaluate_independent_of_containing_cone():
    for fan in FANS.values():
        for L in random_bundles(fan, 5, seed=3):
            psi = support_function(L)
            for w in fan.walls:
                if not w.shared_rays:
                    continue
                v = tuple(sum(c) for c in zip(*(fan.rays[i] for i in w.shared_rays)))
                assert lattice.pair(psi.slopes[w.cone_a], v) == lattice.pair(psi.slopes[w.cone_b], v)


@pytest.mark.parametrize("k", range(5))
def test_p2_multiples_of_hyperplane(k):
    psi = support_function(divisor(projective_space(2), D1=k))
    assert is_k_convex(psi, k) and not is_k_convex(psi, k + 1)


def test_dp6_anticanonical_is_1_convex_only():
    psi = support_function(anticanonical_bundle(del_pezzo_6()))
    assert is_k_convex(psi, 1) and not is_k_convex(psi, 2)


def test_max_convexity_examples():
    assert level(divisor(projective_space(2), D1=3)) == 3
    assert level(divisor(hirzebruch(2), D1=1, D2=3)) == 1
    assert level(divisor(projective_space(2), D1=-1)) is NOT_SPANNED


def test_canonical_bundle():
    for fan in FANS.values():
        assert canonical_bundle(fan).coeffs == (-1,) * fan.n_rays
    assert level(-canonical_bundle(projective_space(2))) == 3
    assert level(-canonical_bundle(del_pezzo_6())) == 1
    assert level(-canonical_bundle(hirzebruch(0))) == 2
    f0 = hirzebruch(0)
    assert linearly_equivalent(anticanonical_bundle(f0), divisor(f0, D1=2, D2=2))


def test_pullback_examples():
    p2 = projective_space(2)
    sigma = p2.cone_index((0, 1))
    blown, e = blow_up(p2, sigma)
    L = divisor(p2, D1=3)
    H = pullback_minus_exceptional(L, blown, e, 1)
    assert level(H) == 1  # min(3 - 1, 1)
    assert level(pullback_minus_exceptional(divisor(p2, D1=2), blown, e, 2)) == 0
    P = pullback_minus_exceptional(L, blown, e, 0)
    assert evaluate(support_function(P), blown.rays[e]) == evaluate(support_function(L), blown.rays[e])


def test_pullback_rejects_foreign_fan():
    p2 = projective_space(2)
    blown, e = blow_up(del_pezzo_6(), 0)
    with pytest.raises(FanMismatchError):
        pullback_minus_exceptional(divisor(p2, D1=1), blown, e, 0)


@pytest.mark.parametrize("name", [n for n in FANS if FANS[n].dim >= 2])
def test_pullback_with_zero_eps_is_psi_extension(name):
    fan = FANS[name]
    for L in random_bundles(fan, 10, seed=11):
        psi = support_function(L)
        for c in range(fan.n_cones):
            blown, e = blow_up(fan, c)
            pulled = support_function(pullback_minus_exceptional(L, blown, e, 0))
            for v in blown.rays:
                assert evaluate(pulled, v) == evaluate(psi, v)


def _lattice_sample_k_convex(psi, k, radius=4):
    """k-convexity checked at every lattice point of a box, not just rays."""
    fan = psi.fan
    for v in itertools.product(range(-radius, radius + 1), repeat=fan.dim):
        if not any(v):
            continue
        value = evaluate(psi, v)
        for c, cone in enumerate(fan.cones):
            coords = lattice.coordinates_in_basis(fan.cone_rays(c), v)
            if all(x >= 0 for x in coords):
                continue  # v lies in this cone
            if lattice.pair(psi.slopes[c], v) < value + k:
                return False
    return True


@pytest.mark.parametrize("name", ["P2", "F0", "F1", "F3", "dP6", "BlF2"])
def test_ray_reduction_matches_lattice_sampling(name):
    fan = FANS[name]
    for L in random_bundles(fan, 25, seed=7, lo=-1, hi=3):
        psi = support_function(L)
        for k in range(0, 4):
            assert is_k_convex(psi, k) == _lattice_sample_k_convex(psi, k)


def test_convex_iff_nef_on_corpus():
    for fan in FANS.values():
        for L in random_bundles(fan, 40, seed=19):
            assert is_k_convex(support_function(L), 0) == is_nef(L)


def test_monotone_and_additive():
    for fan in FANS.values():
        bundles = random_bundles(fan, 30, seed=23, lo=0, hi=3)
        for L, E in zip(bundles, bundles[1:]):
            kl, ke = level(L), level(E)
            if kl is NOT_SPANNED or ke is NOT_SPANNED:
                continue
            psi = support_function(L)
            assert all(is_k_convex(psi, t) for t in range(kl + 1))
            assert level(L + E) >= kl + ke


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(sorted(FANS)),
    st.lists(st.integers(-3, 3), min_size=8, max_size=8),
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
)
def test_character_shift_leaves_convexity_unchanged(name, coeffs, m):
    fan = FANS[name]
    L = LineBundle(fan, coeffs[: fan.n_rays])
    shift = principal_divisor(fan, m[: fan.dim])
    assert level(L + shift) == level(L)
    assert linearly_equivalent(L + shift, L)
