import itertools
import math
from fractions import Fraction

import pytest

from boolshift.boolfn import make_function, make_inner_product
from boolshift.randstat import (
    brute_force_moments,
    cantelli_chain,
    expected_success_mc,
    pairing_indicator,
    random1_bound,
    random2_bound,
    variance_closed_form,
    walk_expectation,
)

from oracles import walk_expectation_by_enumeration


def test_moments_mean_exact():
    for n in (2, 3):
        for t in (1, 2, 3):
            report = brute_force_moments(n, t)
            assert report.mean == Fraction(1, 1 << n)


def test_moments_variance_t2():
    report = brute_force_moments(2, 2)
    assert report.variance == Fraction(12, 64) - Fraction(28, 256) + Fraction(16, 1024)
    assert report.variance == Fraction(96, 1024)
    assert report.closed_form_variance == report.variance

    report3 = brute_force_moments(3, 2)
    assert report3.variance == variance_closed_form(3)


def test_moments_limits():
    with pytest.raises(ValueError):
        brute_force_moments(4, 2)
    report = brute_force_moments(1, 2, slow=False)
    assert report.mean == Fraction(1, 2)
    with pytest.raises(ValueError):
        brute_force_moments(2, 0)


def test_moments_n4_slow_path():
    report = brute_force_moments(4, 2, slow=True)
    assert report.mean == Fraction(1, 16)
    assert report.variance == variance_closed_form(4)


def test_pairing_indicator():
    assert pairing_indicator(["a", "a", "b", "b"]) == 1
    assert pairing_indicator(["a", "b", "c", "d"]) == 0
    assert pairing_indicator([1, 1, 1, 1]) == 1
    assert pairing_indicator([1, 1, 1, 2]) == 0
    with pytest.raises(ValueError):
        pairing_indicator([1, 2, 3])


def test_pairing_count_over_two_element_set():
    total = sum(pairing_indicator(t) for t in itertools.product("ab", repeat=4))
    assert total == 3 * 2**2 - 2 * 2 == 8


def test_pairing_matches_function_average():
    # average of (-1)^{sum f(a_i)} over all functions equals the indicator
    for n, tuple_len in ((1, 2), (1, 4), (1, 6), (2, 2), (2, 4), (2, 6)):
        size = 1 << n
        for tup in itertools.product(range(size), repeat=tuple_len):
            total = 0
            for mask in range(1 << size):
                parity = sum((mask >> a) & 1 for a in tup) & 1
                total += -1 if parity else 1
            assert total == pairing_indicator(tup) * (1 << size)


def test_walk_expectation_small_values():
    assert walk_expectation(2) == 1
    assert walk_expectation(4) == Fraction(3, 2)
    with pytest.raises(ValueError):
        walk_expectation(3)
    with pytest.raises(ValueError):
        walk_expectation(0)


def test_walk_expectation_matches_enumeration():
    for steps in range(2, 21, 2):
        assert walk_expectation(steps) == walk_expectation_by_enumeration(steps)


def test_walk_expectation_sqrt_bound():
    for m in range(1, 513):
        val = walk_expectation(2 * m)
        assert val * val >= m


def test_random1_bound_values():
    assert random1_bound(1) == 0.5
    for n in range(1, 17):
        assert random1_bound(n) >= 0.5
    assert random1_bound(16) == pytest.approx(2 / math.pi, abs=1e-3)
    with pytest.raises(ValueError):
        random1_bound(0)


def test_random2_bound_values():
    assert random2_bound(6) == pytest.approx(1 - 3 / 4096, abs=1e-15)
    values = [random2_bound(n) for n in range(1, 12)]
    assert all(b > a for a, b in zip(values, values[1:]))
    with pytest.raises(ValueError):
        random2_bound(0)


def test_cantelli_chain_example():
    report = cantelli_chain(6, k=2.0)
    assert report.intermediate == pytest.approx((1 - 2 / 8) * 1.25**-2, abs=1e-12)
    assert report.intermediate == pytest.approx(0.48, abs=1e-12)
    # the relaxed final form sits below the intermediate along the chain
    assert report.chain_final <= report.intermediate
    # and below the headline constant (the headline is not chain-certified)
    assert report.intermediate <= random2_bound(6)
    assert report.sigma2_exact == variance_closed_form(6)


def test_cantelli_chain_default_k():
    report = cantelli_chain(12)
    assert report.k == pytest.approx(2.0 ** (12 / 6))
    assert report.chain_final == pytest.approx(1 - 3 * 2.0 ** (-4), abs=1e-12)


def test_expected_success_mc_deterministic():
    a = expected_success_mc(4, 2, 50, 777)
    b = expected_success_mc(4, 2, 50, 777)
    assert a == b
    c = expected_success_mc(4, 2, 50, 778)
    assert a != c


def test_expected_success_mc_sampler_stub():
    est, err = expected_success_mc(
        4, 1, 25, 0, sampler=lambda i: make_inner_product(4)
    )
    assert est == pytest.approx(1.0, abs=1e-12)
    assert err == pytest.approx(0.0, abs=1e-12)


def test_expected_success_mc_validation():
    with pytest.raises(ValueError):
        expected_success_mc(3, 2, 0, 1)
    with pytest.raises(ValueError):
        expected_success_mc(3, 0, 5, 1)
    with pytest.raises(ValueError):
        expected_success_mc(3, 1, 5, 1, sampler=lambda i: make_function(2, "0000"))


def test_expected_success_mc_matches_exhaustive_mean():
    # at n=2 the exact average of p_f(2) over all 16 functions is 5/8;
    # a seeded 4000-sample estimate must land within 5 standard errors
    est, err = expected_success_mc(2, 2, 4000, 2024)
    assert abs(est - 0.625) <= 5 * err
