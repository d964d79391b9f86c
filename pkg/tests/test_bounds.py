import pytest
from hypothesis import given, strategies as st

from polylbt import bounds as B
from polylbt.errors import DomainError
from polylbt.exactmath import binom


def euler_ok(values, d):
    return sum((-1) ** k * v for k, v in enumerate(values)) == 1 - (-1) ** d


def test_theta_examples():
    assert B.theta(4, 2, 1) == 13
    for d in range(2, 9):
        assert [B.theta(d, 1, k) for k in range(d)] == [binom(d + 1, k + 1) for k in range(d)]
        for s in range(2, d + 1):
            assert B.theta(d, s, d - 1) == d + 2
    with pytest.raises(DomainError):
        B.theta(4, 5, 1)


def test_eta_examples():
    assert B.eta(9, 4, 1) == 19
    assert [B.eta(11, 4, k) for k in (1, 2, 3)] == [22, 18, 7]
    with pytest.raises(DomainError, match="theta"):
        B.eta(8, 4, 1)


def test_eta_forms_agree_and_flat():
    for d in range(2, 31):
        for n in range(2 * d + 1, 4 * d):
            for k in range(d):
                assert B.eta(n, d, k) == B.eta_alt(n, d, k)
            if n <= 3 * d - 1:
                assert B.eta(n, d, 0) == n
            else:
                assert B.eta(n, d, 1) == B.eta(3 * d - 1, d, 1)


def test_rho_examples():
    assert B.rho(4, 2, 4, 0) == 9 == B.dplus2_vertex_count(4, 2, 4)
    assert B.rho(4, 2, 4, 1) == 18
    for d in range(2, 11):
        for a in range(2, d + 1):
            for m in range(1, a // 2 + 1):
                assert B.rho(a, m, d, d - 1) == d + 2
                assert B.rho(a, m, d, 0) == d + 1 + m * (a - m)


def test_dplus2_vertex_monotonicity():
    # T_m^{d,d-a} has the reversed rho f-vector
    def t(a, m, d, k):
        return B.rho(a, m, d, d - 1 - k)

    for d in range(2, 13):
        for k in range(d):
            for a in range(2, d + 1):
                for m in range(1, a // 2):
                    lo, hi = t(a, m, d, k), t(a, m + 1, d, k)
                    assert hi >= lo
                    assert (hi > lo) == (m <= k)
                if a <= d - 1:
                    for m in range(1, a // 2 + 1):
                        lo, hi = t(a, m, d, k), t(a + 1, m, d, k)
                        assert hi >= lo
                        assert (hi > lo) == (a - m <= k)


def test_tau_examples_and_regimes():
    assert B.tau(11, 5, 1) == 27
    assert B.tau_regime(11, 5) == ("small", 4, 2)
    with pytest.raises(DomainError, match="m=3 regime"):
        B.tau(13, 5, 1)
    with pytest.raises(DomainError, match="m=3 regime"):
        B.tau(20, 6, 1)


def test_tau_forms_agree():
    for d in range(4, 21):
        for n in range(2 * d + 1, 3 * d + 2):
            for k in range(1, d - 1):
                try:
                    v = B.tau(n, d, k)
                except DomainError:
                    continue
                assert v == B.tau_alt(n, d, k)


def test_tau_ordering_and_extension():
    for d in range(7, 21):
        for k in range(1, d - 1):
            a, b, c = (B.tau(n, d, k) for n in (3 * d - 3, 3 * d - 2, 3 * d - 1))
            assert a <= b <= c
            assert B.tau(3 * d + 4, d, k) == c


def test_zeta_examples():
    assert B.zeta(4, 3, 1) == 16
    for d in range(3, 12):
        for k in range(1, d - 1):
            assert B.zeta(d, 2, k) == B.theta(d, 2, k)


def test_sigma_and_pyr_over_j():
    assert [B.sigma_fvector(4, k) for k in range(4)] == [10, 21, 18, 7]
    assert [B.pyr_over_J(4, 0, k) for k in range(4)] == [11, 22, 18, 7]
    for d in range(3, 20):
        assert B.sigma_fvector(d, 0) == 3 * d - 2


def test_lbt_simple_examples():
    assert B.lbt_simple(3, 5, 0) == 6
    assert B.lbt_simple(3, 5, 1) == 9
    assert B.lbt_simple(4, 7, 0) == 11
    with pytest.raises(DomainError):
        B.lbt_simple(4, 7, 3)


def test_euler_on_complete_families():
    for d in range(3, 11):
        for n in range(2 * d + 1, 3 * d):
            assert euler_ok([B.eta(n, d, k) for k in range(d)], d)
        for a in range(2, d + 1):
            for m in range(1, a // 2 + 1):
                assert euler_ok([B.rho(a, m, d, k) for k in range(d)], d)
        assert euler_ok([B.sigma_fvector(d, k) for k in range(d)], d)
        for t in range(0, d - 2):
            assert euler_ok([B.pyr_over_J(d, t, k) for k in range(d)], d)
        if d >= 4:
            for i, rng in B.CONJ_RANGES.items():
                lo, hi = rng(d)
                # s5=5 at d=4 has no polytope behind it
                for s in range(lo, min(hi, d) + 1):
                    assert euler_ok([B.conjecture_f(i, d, s, k) for k in range(d)], d), (i, s)


def test_displayed_f3_breaks_euler_by_one():
    for d in range(4, 12):
        for s in range(1, d - 2):
            vals = [B.f3_displayed(d, s, k) for k in range(d)]
            alt = sum((-1) ** k * v for k, v in enumerate(vals))
            assert alt == 1 - (-1) ** d + 1
            diff = [B.conjecture_f(3, d, s, k) - v for k, v in enumerate(vals)]
            assert diff == [0, 1] + [0] * (d - 2)


def test_conjecture_examples():
    for d in range(4, 11):
        assert B.conjecture_f(1, d, 2, 0) == 3 * d - 2
    assert B.conjecture_f(1, 4, 2, 1) == B.sigma_fvector(4, 1) == 21
    assert B.conjecture_f(1, 7, 5, 1) - B.conjecture_f(3, 7, 2, 1) == 0
    # f2 and f4 ranges evaluate to 2d+2 and 4d-6 at their ends
    assert B.conjecture_f(2, 6, 3, 0) == 14
    assert B.conjecture_f(4, 6, 4, 0) == 18
    with pytest.raises(DomainError):
        B.conjecture_f(5, 6, 6, 1)


def test_f0f2():
    for pair in B.F0F2_EXCEPTIONS:
        assert not B.four_polytope_f0f2(*pair)
    assert B.four_polytope_f0f2(5, 10)
    for f0 in range(6, 13):
        assert not B.four_polytope_f0f2(f0, f0 * f0 - 3 * f0 - 1)
    with pytest.raises(DomainError):
        B.four_polytope_f0f2(4, 4)


@given(st.integers(5, 2000))
def test_f0f2_lower_is_exact_threshold(f0):
    lo = B.f0f2_lower(f0)
    ok = lambda f2: (2 * f2 - 2 * f0 - 3) >= 0 and (2 * f2 - 2 * f0 - 3) ** 2 >= 8 * f0 + 9
    assert ok(lo) and not ok(lo - 1)


def test_bound_query():
    q = B.BoundQuery("ETA", 4, 1, {"n_vertices": 11})
    assert q.evaluate() == 22
    assert B.BoundQuery("CONJ_F1", 4, 1, {"s": 2}).evaluate() == 21
    with pytest.raises(DomainError):
        B.BoundQuery("RHO", 4, 1, {"a": 5, "m": 1})
