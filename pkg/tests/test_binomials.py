"""Pascal-table binomials and the signed generalization."""

import math
import threading

import pytest

from chowchi.binomials import BinomialTable, binomial, binomial_signed

from oracles import expand_inv_one_minus_t


def test_small_values():
    assert binomial(4, 2) == 6
    assert binomial(7, 0) == 1
    assert binomial(0, 0) == 1


def test_out_of_range_k_is_zero():
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_pascal_identity_up_to_64():
    for n in range(1, 65):
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_symmetry_up_to_64():
    for n in range(65):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)


def test_matches_stdlib_comb():
    for n in range(65):
        for k in range(n + 1):
            assert binomial(n, k) == math.comb(n, k)


def test_vandermonde_convolution():
    # index-safe thanks to the out-of-range-gives-zero convention
    for m in range(17):
        for n in range(17):
            for r in range(17):
                total = sum(binomial(m, i) * binomial(n, r - i) for i in range(r + 1))
                assert total == binomial(m + n, r)


def test_signed_examples():
    assert binomial_signed(0, 3) == 0
    assert binomial_signed(0, 0) == 1
    assert binomial_signed(-2, 2) == 1
    assert binomial_signed(-2, 1) == -2


def test_signed_agrees_with_binomial_for_positive_a():
    for a in range(1, 17):
        for k in range(17):
            assert binomial_signed(a, k) == binomial(a + k - 1, k)


def test_signed_negative_k_rejected():
    with pytest.raises(ValueError):
        binomial_signed(3, -1)


def test_signed_matches_explicit_series_expansion():
    # coefficient of t^k in (1-t)^(-a), with the a < 0 side expanded as an
    # honest polynomial power of (1 - t)
    for a in range(-8, 9):
        coeffs = expand_inv_one_minus_t(a, 16)
        for k in range(17):
            assert binomial_signed(a, k) == coeffs[k], (a, k)


def test_table_grows_lazily_within_bound():
    table = BinomialTable(16)
    assert table.n_max == 16
    assert table.rows_cached == 1
    assert table.value(10, 3) == 120
    assert table.rows_cached == 11


def test_table_answers_beyond_bound_without_caching():
    table = BinomialTable(4)
    assert table.value(30000, 2) == math.comb(30000, 2)
    assert table.value(24310, 1) == 24310
    assert table.rows_cached == 1


def test_table_rejects_negative_bound():
    with pytest.raises(ValueError):
        BinomialTable(-1)


def test_concurrent_readers_see_consistent_values():
    table = BinomialTable(512)
    errors = []

    def worker():
        for n in range(120):
            for k in (0, 1, n // 2, n):
                if table.value(n, k) != math.comb(n, k):
                    errors.append((n, k))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
