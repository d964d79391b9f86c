import pytest
from hypothesis import given, strategies as st

from polylbt.errors import DomainError
from polylbt.exactmath import (binom, check_identity, check_inequality,
                               identity_grid, inequality_grid)


def test_binom_basic():
    assert binom(5, 2) == 10
    assert binom(1, 2) == 0
    assert binom(-1, 2) == 0
    assert binom(3, -1) == 0
    assert binom(0, 0) == 1


@given(st.integers(1, 200), st.integers(0, 200))
def test_pascal(n, k):
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


@given(st.integers(0, 60), st.integers(0, 60), st.integers(0, 60))
def test_vandermonde_sampled(n, a, c):
    assert check_identity("I5", n=n, a=a, c=c)


def test_identity_examples():
    c = check_identity("I2", n=5, c=2)
    assert (c.lhs, c.rhs, c.holds) == (10, 10, True)
    c = check_identity("I3", n=6, c=2, a=2)
    assert (c.lhs, c.rhs, c.holds) == (9, 9, True)
    c = check_identity("I7", d=6, ell=1, k=2)
    assert c.params["a"] == 4
    assert c.lhs == 3 and c.strict_required and c.holds


def test_inequality_examples():
    c = check_inequality("Q1", d=4, k=1)
    assert (c.lhs, c.rhs, c.holds) == (18, 19, True)
    c = check_inequality("Q1", d=5, k=3)
    assert c.holds and not c.strict_required
    c = check_inequality("Q3", d=5, ell=1)
    assert c.holds and c.strict_required and c.lhs < c.rhs


def test_domain_errors_name_the_item():
    with pytest.raises(DomainError, match="I2"):
        check_identity("I2", n=2, c=5)
    with pytest.raises(DomainError, match="Q5"):
        check_inequality("Q5", d=5, ell=3, r=9)
    with pytest.raises(DomainError):
        check_identity("I9")


def test_i1_equality_endpoints_flag():
    # below the top index equality forces r in {2, s}
    for params in identity_grid("I1", 12):
        c = check_identity("I1", **params)
        assert c.holds
        assert c.notes["equality_only_if_r_is_2_or_s"], params


def test_i1_top_index_always_equal():
    # at k = d-1 both sides are d+2, whatever r is
    for d in range(3, 10):
        for s in range(3, d + 1):
            for r in range(3, s):
                c = check_identity("I1", d=d, r=r, s=s, k=d - 1)
                assert c.equal and c.lhs == d + 2


@pytest.mark.parametrize("item", ["I1", "I2", "I3", "I4", "I5", "I6", "I7"])
def test_identity_grid_small(item):
    assert all(check_identity(item, **p) for p in identity_grid(item, 14))


@pytest.mark.parametrize("item", ["Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"])
def test_inequality_grid_to_30(item):
    assert all(check_inequality(item, **p) for p in inequality_grid(item, 30))


def test_q5_literal_summand_only_differs_past_d_plus_1():
    from polylbt.exactmath import _eta_raw, _tau_small_raw
    for d in range(5, 16):
        for ell in range(3, 2 * d):
            for r in range(3, min(ell + 1, d + 1) + 1):
                e = ell - r + 2
                lit = (_tau_small_raw(d - 1, e, 1) + 2 * (d - 1) + e
                       + sum(d - i for i in range(1, r)))
                assert check_inequality("Q5", d=d, ell=ell, r=r).rhs == lit
