"""Group-invariant cycles, quaternionic cycle spaces, symmetric products."""

import pytest

from chowchi.binomials import binomial
from chowchi.chow import ChowParams, chow_euler_closed
from chowchi.invariants import (
    QuaternionicParams,
    g_invariant_euler,
    grassmannian_euler,
    quaternionic_d1_oracle,
    quaternionic_euler_closed,
    quaternionic_p0_oracle,
    sp_euler,
)

from oracles import expand_inv_one_minus_t


def test_quaternionic_params_validation():
    with pytest.raises(ValueError):
        QuaternionicParams(0, 0, 1)
    with pytest.raises(ValueError):
        QuaternionicParams(2, 1, 0)
    with pytest.raises(ValueError):
        QuaternionicParams(-1, 2, 0)
    with pytest.raises(ValueError):
        QuaternionicParams(1, 2, -1)


def test_g_invariant_examples():
    assert g_invariant_euler(ChowParams(0, 1, 2)) == 3
    assert g_invariant_euler(ChowParams(1, 2, 3)) == 10
    assert g_invariant_euler(ChowParams(2, 2, 5)) == 1


def test_g_invariant_matches_ambient_count():
    for n in range(7):
        for p in range(n + 1):
            for d in range(9):
                params = ChowParams(p, n, d)
                assert g_invariant_euler(params) \
                    == chow_euler_closed(params).chi


def test_quaternionic_examples():
    assert quaternionic_euler_closed(QuaternionicParams(0, 1, 2)) == 3
    assert quaternionic_euler_closed(QuaternionicParams(3, 2, 4)) == 1
    assert quaternionic_euler_closed(QuaternionicParams(1, 2, 2)) == 21


def test_quaternionic_matches_ambient_chow():
    # C_{p,d}(n) sits in P^{2n-1}, and the fixed-cycle count coincides with
    # the full Chow count there because C(2n, p+1) = v_{p,2n-1}.
    for n in range(1, 7):
        for p in range(2 * n):
            for d in range(11):
                assert quaternionic_euler_closed(QuaternionicParams(p, n, d)) \
                    == chow_euler_closed(ChowParams(p, 2 * n - 1, d)).chi


def test_p0_oracle_examples():
    assert quaternionic_p0_oracle(1, 2) == 3
    assert quaternionic_p0_oracle(2, 0) == 1
    assert quaternionic_p0_oracle(2, 3) == 20


def test_p0_oracle_rejects_bad_range():
    with pytest.raises(ValueError):
        quaternionic_p0_oracle(0, 2)
    with pytest.raises(ValueError):
        quaternionic_p0_oracle(2, -1)


def test_p0_oracle_matches_closed_form():
    for n in range(1, 7):
        for d in range(11):
            assert quaternionic_p0_oracle(n, d) \
                == quaternionic_euler_closed(QuaternionicParams(0, n, d))


def test_d1_oracle_examples():
    assert quaternionic_d1_oracle(0, 1) == 2
    assert quaternionic_d1_oracle(1, 1) == 1
    assert quaternionic_d1_oracle(1, 2) == 6


def test_d1_oracle_rejects_bad_range():
    with pytest.raises(ValueError):
        quaternionic_d1_oracle(2, 1)
    with pytest.raises(ValueError):
        quaternionic_d1_oracle(-1, 1)


def test_d1_oracle_is_vandermonde():
    # The hyperplane-pair convolution telescopes to a single binomial.
    for n in range(1, 9):
        for p in range(2 * n):
            value = quaternionic_d1_oracle(p, n)
            assert value == binomial(2 * n, p + 1)
            assert value \
                == quaternionic_euler_closed(QuaternionicParams(p, n, 1))


def test_quaternionic_degree_sequences_match_chow_tables():
    # Both count families reduce to the same binomial sequences, so tables
    # in d agree column-by-column for matching ambient dimensions.
    for n in range(1, 5):
        for p in range(2 * n):
            for d in range(9):
                assert quaternionic_euler_closed(QuaternionicParams(p, n, d)) \
                    == binomial(binomial(2 * n, p + 1) + d - 1, d)


def test_sp_euler_examples():
    assert sp_euler(0, 4) == 0
    assert sp_euler(3, 2) == 6
    assert sp_euler(-2, 2) == 1
    assert sp_euler(1, 7) == 1


def test_sp_euler_of_projective_space():
    for n in range(7):
        for d in range(11):
            assert sp_euler(n + 1, d) == binomial(n + d, d)


def test_sp_euler_matches_series_expansion():
    for chi in range(-6, 13):
        coeffs = expand_inv_one_minus_t(chi, 12)
        for d in range(13):
            assert sp_euler(chi, d) == coeffs[d]


def test_sp_euler_rejects_negative_degree():
    with pytest.raises(ValueError):
        sp_euler(3, -1)


def test_grassmannian_examples():
    assert grassmannian_euler(0, 4) == 1
    assert grassmannian_euler(1, 3) == 3
    assert grassmannian_euler(2, 4) == 6


def test_grassmannian_rejects_bad_range():
    with pytest.raises(ValueError):
        grassmannian_euler(3, 2)
    with pytest.raises(ValueError):
        grassmannian_euler(-1, 2)
