import math

import numpy as np
import pytest

from boolshift.boolfn import (
    make_delta,
    make_function,
    make_inner_product,
    random_function,
)
from boolshift.pgm import (
    INCONCLUSIVE,
    build_phi_state,
    delta_closed_form,
    outcome_distribution,
    outcome_distribution_statevector,
    phi_state_closed_form,
    sample_measurement,
    success_probability,
)
from boolshift.spectral import support

from oracles import success_probability_by_definition


def test_success_probability_examples():
    assert success_probability(make_inner_product(2), 1) == pytest.approx(1.0, abs=1e-12)
    assert success_probability(make_delta(3, 0), 1) == pytest.approx(25 / 32, abs=1e-12)
    assert success_probability(make_function(2, "0000"), 1) == pytest.approx(0.25, abs=1e-12)


def test_success_probability_matches_definition():
    for trial in range(5):
        f = random_function(4, 600 + trial)
        for t in (1, 2, 3):
            assert success_probability(f, t) == pytest.approx(
                success_probability_by_definition(f, t), abs=1e-10
            )


def test_success_probability_range_and_validation():
    with pytest.raises(ValueError):
        success_probability(make_delta(2, 0), 0)
    for trial in range(20):
        f = random_function(4, 80 + trial)
        p = success_probability(f, 2)
        assert 0.0 <= p <= 1.0 + 1e-12


def test_delta_closed_form_values():
    for t in (1, 2, 7):
        assert delta_closed_form(2, t) == pytest.approx(1.0, abs=1e-12)
    assert delta_closed_form(3, 1) == pytest.approx(25 / 32, abs=1e-12)
    assert delta_closed_form(12, 4096) == pytest.approx(1 - math.exp(-4), abs=0.02)
    with pytest.raises(ValueError):
        delta_closed_form(0, 1)
    with pytest.raises(ValueError):
        delta_closed_form(3, 0)


def test_delta_closed_form_cross_oracle():
    for n in (2, 3, 4):
        for x0 in range(1 << n):
            f = make_delta(n, x0)
            for t in (1, 2, 3):
                assert success_probability(f, t) == pytest.approx(
                    delta_closed_form(n, t), abs=1e-12
                )


def test_delta_closed_form_monotone_in_t():
    for n in range(1, 11):
        values = [delta_closed_form(n, t) for t in range(1, min(1 << n, 64) + 1)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_outcome_distribution_bent():
    ip = make_inner_product(4)
    for s in (0, 5, 15):
        dist = outcome_distribution(ip, 1, s)
        assert dist.probs[s] == pytest.approx(1.0, abs=1e-12)
        others = np.delete(dist.probs, s)
        assert np.abs(others).max() < 1e-12
        assert dist.p_inconclusive < 1e-9


def test_outcome_distribution_constant():
    dist = outcome_distribution(make_function(2, "0000"), 1, 2)
    assert np.allclose(dist.probs, 0.25, atol=1e-12)
    assert dist.p_inconclusive == pytest.approx(0.0, abs=1e-9)


def test_outcome_distribution_shift_covariance():
    f = random_function(4, 11)
    base = outcome_distribution(f, 2, 0)
    for s in (3, 9):
        shifted = outcome_distribution(f, 2, s)
        assert np.allclose(shifted.probs, base.probs[np.arange(16) ^ s], atol=1e-12)


def test_outcome_distribution_success_entry():
    for trial in range(10):
        f = random_function(4, 1200 + trial)
        s = trial
        for t in (1, 2):
            dist = outcome_distribution(f, t, s)
            assert dist.probs[s] == pytest.approx(success_probability(f, t), abs=1e-12)
            assert dist.probs.sum() <= 1.0 + 1e-9


def test_phi_state_circuit_matches_closed_form():
    for trial in range(10):
        n = 3 if trial % 2 else 4
        f = random_function(n, 2500 + trial)
        s = trial % (1 << n)
        for t in (1, 2):
            sim = build_phi_state(f, t, s)
            closed = phi_state_closed_form(f, t, s)
            assert np.abs(sim.amplitudes - closed.amplitudes).max() < 1e-12


def test_phi_state_single_query_form():
    f = random_function(3, 77)
    s = 5
    state = build_phi_state(f, 1, s)
    from boolshift.fourier import signed_numerators

    fhat = signed_numerators(f) / 8
    signs = np.array([1 - 2 * ((w & s).bit_count() & 1) for w in range(8)])
    assert np.abs(state.amplitudes - signs * fhat).max() < 1e-12


def test_phi_state_norm_and_success():
    for trial in range(5):
        f = random_function(4, 3100 + trial)
        s = (5 * trial) % 16
        state = build_phi_state(f, 2, s)
        assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-9)


def test_phi_state_size_limit():
    with pytest.raises(ValueError, match="limit"):
        build_phi_state(make_delta(12, 0), 2, 0)


def test_statevector_distribution_matches_transform_route():
    for trial in range(10):
        f = random_function(4, 4000 + trial)
        s = (3 * trial) % 16
        for t in (1, 2):
            a = outcome_distribution(f, t, s)
            b = outcome_distribution_statevector(f, t, s)
            assert np.abs(a.probs - b.probs).max() < 1e-9
            assert abs(a.p_inconclusive - b.p_inconclusive) < 1e-9
            # the explicit projection onto the correct-outcome vector
            # reproduces the closed-form success probability
            assert b.probs[s] == pytest.approx(success_probability(f, t), abs=1e-9)


def test_success_probability_independent_of_shift():
    for trial in range(5):
        f = random_function(4, 5100 + trial)
        state_probs = set()
        for s in range(16):
            dist = outcome_distribution(f, 2, s)
            state_probs.add(round(float(dist.probs[s]), 12))
        assert len(state_probs) == 1


def test_success_bounded_by_support_fraction():
    for trial in range(20):
        f = random_function(5, 6000 + trial)
        for t in (1, 2):
            p = success_probability(f, t)
            p_max = support(f, t).size / 32
            assert p <= p_max + 1e-9


def test_sampling_bent_always_correct():
    hist = sample_measurement(make_inner_product(4), 1, 9, 2000, 31337)
    assert hist == {9: 2000}


def test_sampling_delta_frequency():
    shots = 100_000
    hist = sample_measurement(make_delta(3, 0), 1, 5, shots, 2718)
    p = 25 / 32
    freq = hist[5] / shots
    assert abs(freq - p) <= 3 * math.sqrt(p * (1 - p) / shots)


def test_sampling_deterministic_and_validated():
    f = make_delta(3, 0)
    assert sample_measurement(f, 1, 0, 500, 1) == sample_measurement(f, 1, 0, 500, 1)
    assert sample_measurement(f, 1, 0, 500, 1) != sample_measurement(f, 1, 0, 500, 2)
    with pytest.raises(ValueError):
        sample_measurement(f, 1, 0, 0, 1)


def test_sampling_keys_are_valid_outcomes():
    hist = sample_measurement(random_function(3, 8), 2, 1, 1000, 99)
    for key in hist:
        assert key == INCONCLUSIVE or 0 <= key < 8
    assert sum(hist.values()) == 1000
