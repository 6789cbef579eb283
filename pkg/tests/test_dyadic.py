import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lejacircle.dyadic import (BinaryDecomposition, decompose, square_from_expansion, tau,
                               tau_cumulative_fast, tau_cumulative_fast_array,
                               tau_cumulative_naive, tau_cumulative_table)


@pytest.mark.parametrize("n, exps", [(13, (3, 2, 0)), (1024, (10,)), (85, (6, 4, 2, 0)), (1, (0,))])
def test_decompose(n, exps):
    d = decompose(n)
    assert d.exponents == exps
    assert d.t == len(exps) == tau(n)


def test_decompose_rejects_zero():
    with pytest.raises(ValueError):
        decompose(0)
    with pytest.raises(ValueError):
        tau(0)


def test_decomposition_invariants_enforced():
    with pytest.raises(ValueError):
        BinaryDecomposition(5, (0, 2))
    with pytest.raises(ValueError):
        BinaryDecomposition(6, (2, 0))


@pytest.mark.parametrize("n, t", [(2 ** 10, 1), (13, 3), (255, 8)])
def test_tau(n, t):
    assert tau(n) == t


@pytest.mark.parametrize("n, total", [(16, 32), (13, 22), (2, 1), (1, 0)])
def test_tau_cumulative_examples(n, total):
    assert tau_cumulative_fast(n) == total
    assert tau_cumulative_naive(n) == total


def test_tau_cumulative_powers_of_two():
    for n in range(0, 16):
        assert tau_cumulative_fast(1 << n) == (n << n) >> 1


def test_tau_cumulative_fast_matches_table_to_2_16():
    table = tau_cumulative_table(1 << 16)
    ns = np.arange(1, (1 << 16) + 1)
    assert np.array_equal(tau_cumulative_fast_array(ns), table[1:])
    for n in range(1, 3000):
        assert tau_cumulative_fast(n) == table[n]


def test_tau_cumulative_is_exact_beyond_int64():
    # split the range at 2**80: every k >= 2**80 has one extra high bit
    n = (1 << 80) + 131
    expected = (80 << 79) + 131 + tau_cumulative_naive(131)
    assert tau_cumulative_fast(n) == expected


def test_array_version_reports_overflow():
    with pytest.raises(OverflowError):
        tau_cumulative_fast_array([1 << 41])
    with pytest.raises(OverflowError):
        tau_cumulative_table((1 << 40) + 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=6, unique=True),
       st.data())
def test_shift_identity(exps, data):
    exps = sorted(exps, reverse=True)
    base = sum(1 << e for e in exps)
    lowest = exps[-1]
    m = data.draw(st.integers(min_value=1, max_value=(1 << lowest) - 1))
    assert tau(base + m) == len(exps) + tau(m)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10 ** 30))
def test_square_expansion_random(n):
    assert square_from_expansion(n) == n * n


def test_square_expansion_all_small():
    assert all(square_from_expansion(n) == n * n for n in range(1, 20000))
