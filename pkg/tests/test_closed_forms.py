"""
Closed-form tests: the counting formulas against each other and against the recursion.
"""
import sys
from math import comb, gcd

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from subcount.models.problem import ParityClass
from subcount.services.closed_forms_service import binomial_row, closed_forms_service
from subcount.services.recurrence_service import recurrence_service

closed_forms_service_module = sys.modules["subcount.services.closed_forms_service"]


@pytest.mark.unit
@pytest.mark.parametrize("r, g, expected", [(5, 1, 5), (2, 3, 8), (3, 2, 9)])
def test_count_line_subbundles(r, g, expected):
    """Test r^g on small instances."""
    assert closed_forms_service.count_line_subbundles(r, g) == expected


@pytest.mark.unit
def test_line_subbundles_genus_one():
    """Test a generic rank-r bundle on an elliptic curve has r maximal line subbundles."""
    for r in range(2, 11):
        assert closed_forms_service.count_line_subbundles(r, 1) == r


@pytest.mark.unit
def test_line_recurrence_reproduces_r_to_the_g(line_system):
    """Test repeated multiplication by r equals r^g for r <= 10, g <= 30."""
    for r in range(2, 11):
        system = line_system(r)
        for g in range(1, 31):
            assert recurrence_service.iterate(system, g)[0] == closed_forms_service.count_line_subbundles(r, g)
            assert closed_forms_service.line_eigen(r, g) == r ** g


@pytest.mark.unit
@pytest.mark.parametrize("g, a, b", [(1, 6, 2), (2, 40, 24), (3, 288, 224), (4, 2176, 1920)])
def test_binomial_and_eigen_forms(g, a, b):
    """Test both closed forms on hand-derived values."""
    assert closed_forms_service.a_binomial(g) == a
    assert closed_forms_service.b_binomial(g) == b
    assert closed_forms_service.a_eigen(g) == a
    assert closed_forms_service.b_eigen(g) == b


@pytest.mark.unit
@pytest.mark.parametrize("g, parity, expected", [
    (1, ParityClass.EVEN, 6),
    (1, ParityClass.ODD, 2),
    (3, ParityClass.EVEN, 288),
])
def test_count_rank2_of_4(g, parity, expected):
    """Test parity dispatch to a_g or b_g."""
    assert closed_forms_service.count_rank2_of_4(g, parity) == expected


@pytest.mark.unit
def test_binomial_row_matches_math_comb():
    """Test the multiplicative rule against the standard library."""
    for n in range(0, 60):
        assert list(binomial_row(n)) == [comb(n, k) for k in range(n + 1)]


@pytest.mark.unit
def test_parity_sum_uses_binomial_row(mocker):
    """Test the binomial-sum path takes its coefficients from the binomial row."""
    spy = mocker.spy(closed_forms_service_module, "binomial_row")
    assert closed_forms_service.a_binomial(3) == 288
    spy.assert_called_once_with(3)


@pytest.mark.slow
def test_path_equivalence_up_to_512(rank_two_system):
    """Test binomial sums, eigen forms and the recursion agree for g <= 512."""
    state = rank_two_system.base
    for g in range(1, 513):
        if g > 1:
            state = recurrence_service.step(state, rank_two_system)
        a, b = state.entries
        assert closed_forms_service.a_binomial(g) == closed_forms_service.a_eigen(g) == a
        assert closed_forms_service.b_binomial(g) == closed_forms_service.b_eigen(g) == b
        assert a + b == 8 ** g
        assert a - b == 4 ** g
        assert a > b > 0


@pytest.mark.unit
def test_factored_forms_up_to_256():
    """Test a_g = 2^(2g-1)(2^g+1), b_g = 2^(2g-1)(2^g-1) and their gcd."""
    for g in range(1, 257):
        a, b = closed_forms_service.a_eigen(g), closed_forms_service.b_eigen(g)
        common = 2 ** (2 * g - 1)
        assert a == common * (2 ** g + 1)
        assert b == common * (2 ** g - 1)
        assert gcd(a, b) == common


@hypothesis_settings(max_examples=100, deadline=None)
@given(r=st.integers(min_value=2, max_value=6),
       g1=st.integers(min_value=1, max_value=10),
       g2=st.integers(min_value=1, max_value=10))
def test_line_count_is_multiplicative(r, g1, g2):
    """Test r^(g1+g2) = r^g1 r^g2."""
    assert (closed_forms_service.count_line_subbundles(r, g1 + g2)
            == closed_forms_service.count_line_subbundles(r, g1)
            * closed_forms_service.count_line_subbundles(r, g2))


@hypothesis_settings(max_examples=60, deadline=None)
@given(g=st.integers(min_value=1, max_value=300))
def test_binomial_sums_partition_the_full_expansion(g):
    """Test a_g + b_g is the full binomial expansion of (6 + 2)^g."""
    assert closed_forms_service.a_binomial(g) + closed_forms_service.b_binomial(g) == 8 ** g
    assert closed_forms_service.a_binomial(g) - closed_forms_service.b_binomial(g) == 4 ** g
