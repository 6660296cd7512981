from fractions import Fraction

import pytest

from boolshift.boolfn import (
    hamming_weight,
    make_delta,
    make_function,
    make_inner_product,
    random_function,
    shift,
)
from boolshift.fourier import autocorrelation
from boolshift.shifts import (
    coset_confinement_check,
    exact_one_query_feasible,
    find_b_shifts,
    gf2_rank,
    gf2_reduce,
    is_bent,
)


def test_gf2_reduce_canonical():
    # lowest-set-bit pivots: rows 011 and 110 carry pivots 1 and 2, and
    # full reduction clears bit 1 from the first row, leaving 101
    assert gf2_reduce([0b110, 0b011, 0b101]) == [0b101, 0b110]
    assert gf2_reduce([]) == []
    assert gf2_rank([1, 2, 4, 7]) == 3
    # every span element reduces to the same basis
    assert gf2_reduce([0b101, 0b110, 0b011]) == [0b101, 0b110]


def test_constant_function_structure():
    struct = find_b_shifts(make_function(2, "0000"))
    assert struct.undetectable_shifts() == [0, 1, 2, 3]
    assert struct.anti_shift is None


def test_parity_structure():
    struct = find_b_shifts(make_function(2, "0110"))
    assert struct.undetectable_basis == (0b11,)
    assert struct.anti_shift == 0b01
    assert struct.anti_shifts() == [0b01, 0b10]


def test_inner_product_structure():
    struct = find_b_shifts(make_inner_product(2))
    assert struct.undetectable_basis == ()
    assert struct.anti_shift is None


def test_b_shift_definition_agrees():
    # (F*F)(s) = +-1 exactly at the b-shifts found by direct comparison
    for trial in range(30):
        f = random_function(4, 300 + trial)
        struct = find_b_shifts(f)
        for s in struct.undetectable_shifts():
            assert shift(f, s) == f
        for a in struct.anti_shifts():
            negated = make_function(4, 1 - f.table)
            assert shift(f, a) == negated


def test_at_most_one_anti_shift_without_undetectable():
    for trial in range(200):
        f = random_function(4, 1000 + trial)
        struct = find_b_shifts(f)
        if not struct.undetectable_basis:
            assert len(struct.anti_shifts()) <= 1


def test_is_bent_examples():
    assert is_bent(make_inner_product(2))
    assert is_bent(make_inner_product(4))
    assert not is_bent(make_delta(3, 0))
    # odd n can never be bent
    for trial in range(20):
        assert not is_bent(random_function(3, trial))
        assert not is_bent(random_function(5, trial))


def test_bent_weight_window():
    # |f| = (2^n +- 2^{n/2}) / 2 for every bent function at n = 2, 4
    for n in (2, 4):
        size = 1 << n
        root = 1 << (n // 2)
        allowed = {(size - root) // 2, (size + root) // 2}
        found = 0
        for trial in range(500):
            f = random_function(n, 8800 + trial)
            if is_bent(f):
                found += 1
                assert hamming_weight(f) in allowed
        if n == 2:
            assert found > 0


def test_autocorrelation_range_and_saturation():
    for trial in range(50):
        f = random_function(4, 50 + trial)
        struct = find_b_shifts(f)
        b_shifts = set(struct.undetectable_shifts()) | set(struct.anti_shifts())
        for s, v in enumerate(autocorrelation(f).value_fractions()):
            assert -1 <= v <= 1
            assert (abs(v) == 1) == (s in b_shifts)


def test_exact_one_query_examples():
    witness = exact_one_query_feasible(make_inner_product(2))
    assert witness.feasible and witness.k == 0 and witness.p_empty == 0

    witness = exact_one_query_feasible(make_function(1, "01"))
    assert witness.feasible and witness.k == 2
    assert witness.p_empty == Fraction(1, 2)

    assert not exact_one_query_feasible(make_delta(3, 0)).feasible
    assert not exact_one_query_feasible(make_function(1, "00")).feasible


def test_n2_bent_equivalence_exhaustive():
    bent_weights = []
    for mask in range(16):
        f = make_function(2, [(mask >> i) & 1 for i in range(4)])
        bent = is_bent(f)
        assert bent == exact_one_query_feasible(f).feasible
        if bent:
            bent_weights.append(hamming_weight(f))
    assert sorted(bent_weights) == [1, 1, 1, 1, 3, 3, 3, 3]


def test_coset_confinement_parity():
    assert coset_confinement_check(make_function(2, "0110"))
    assert coset_confinement_check(make_function(2, "1111"))


def test_coset_confinement_random():
    for trial in range(1000):
        n = 2 + trial % 5
        f = random_function(n, 40_000 + trial)
        assert coset_confinement_check(f)
