from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbern.volkenborn import (
    INF,
    convergence_check,
    convergence_reports,
    padic_val,
    riemann_sum,
    riemann_sum_enumerated,
    shift_identity_check,
)

F = Fraction
PRIMES = [2, 3, 5, 7]


def test_riemann_sum_examples():
    assert riemann_sum(1, 2, 3) == F(7, 2)
    assert riemann_sum(2, 3, 2) == F(68, 3)
    assert all(riemann_sum(0, p, n) == 1 for p in PRIMES for n in range(5))


def test_padic_val_examples():
    assert padic_val(4, 2) == 2
    assert padic_val(F(68, 3), 3) == -1
    assert padic_val(0, 5) == INF


def test_composite_prime_rejected():
    with pytest.raises(ValueError):
        padic_val(3, 4)
    with pytest.raises(ValueError):
        riemann_sum(1, 9, 2)
    with pytest.raises(ValueError):
        convergence_check(1, 1, 2)


@pytest.mark.parametrize("p", PRIMES)
def test_faulhaber_matches_enumeration(p):
    level = 1
    while p ** (level + 1) <= 10**4:
        level += 1
    for n in range(9):
        for lv in range(level + 1):
            assert riemann_sum(n, p, lv) == riemann_sum_enumerated(n, p, lv)


nonzero = st.fractions(max_denominator=10**4).filter(bool)


@settings(max_examples=80, deadline=None)
@given(nonzero, nonzero, st.sampled_from(PRIMES))
def test_valuation_axioms(a, b, p):
    assert padic_val(a * b, p) == padic_val(a, p) + padic_val(b, p)
    if a + b:
        assert padic_val(a + b, p) >= min(padic_val(a, p), padic_val(b, p))
    assert padic_val(1 / a, p) == -padic_val(a, p)


def test_convergence_examples():
    row = convergence_check(1, 2, 3)[-1]
    assert row.riemann_sum == F(7, 2) and row.error == 4 and row.valuation == 2 and row.bound == 1
    assert all(r.error == 0 and r.valuation == INF and r.passed for r in convergence_check(0, 5, 4))
    row = convergence_check(2, 3, 2)[-1]
    # v_3(3) = 1, so the bound at N = 2 is 0
    assert row.error == F(45, 2) and row.valuation == 2 and row.bound == 0


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("n", range(0, 9))
def test_convergence_grid(n, p):
    rows = convergence_check(n, p, 6)
    assert [r.level for r in rows] == list(range(1, 7))
    for r in rows:
        assert r.identity_holds and r.passed
        assert r.valuation >= r.bound
        assert all(v >= r.bound for v in r.term_valuations)
    assert all(rep.passed for rep in convergence_reports(n, p, 6))


def test_shift_examples():
    assert shift_identity_check(2, 1).lhs == 0 and shift_identity_check(2, 1).passed
    r = shift_identity_check(1, 1)
    assert r.lhs == 1 and r.passed
    r = shift_identity_check(3, 4)
    assert r.lhs == 42 and r.rhs == 42


@pytest.mark.parametrize("k", range(0, 11))
def test_shift_grid(k):
    for m in range(1, 9):
        assert shift_identity_check(k, m).passed
