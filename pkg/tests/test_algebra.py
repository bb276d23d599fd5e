from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from genbern.algebra import CycloElem, UniPoly, cyclotomic_poly, divisors, euler_phi
from genbern.serialize import cyclo_from_dict, cyclo_to_dict, format_rational, parse_rational

F = Fraction

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


def cyclo(order):
    n = euler_phi(order)
    return st.lists(rationals, min_size=n, max_size=n).map(lambda cs: CycloElem(order, cs))


# -- cyclotomic polynomials --------------------------------------------------


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == UniPoly([-1, 1])
    assert cyclotomic_poly(4) == UniPoly([1, 0, 1])
    assert cyclotomic_poly(6) == UniPoly([1, -1, 1])


@pytest.mark.parametrize("m", range(1, 101))
def test_cyclotomic_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs())]
    phi = cyclotomic_poly(m)
    assert list(phi.coeffs) == expected
    assert phi.degree == euler_phi(m)
    assert all(c.denominator == 1 for c in phi.coeffs)


@pytest.mark.parametrize("m", [1, 2, 6, 12, 30, 36, 60, 97, 100])
def test_product_of_cyclotomics_is_x_to_m_minus_one(m):
    prod = UniPoly([1])
    for d in divisors(m):
        prod = prod * cyclotomic_poly(d)
    assert prod == UniPoly([-1] + [0] * (m - 1) + [1])


@pytest.mark.parametrize("m", range(1, 31))
def test_zeta_is_a_root_of_phi(m):
    phi = cyclotomic_poly(m)
    assert phi(CycloElem.zeta(m)) == 0
    assert CycloElem.zeta(m) ** m == 1


# -- cyclotomic field ----------------------------------------------------------


def test_cyclo_examples():
    z4 = CycloElem.zeta(4)
    assert z4 * z4 == -1
    z3 = CycloElem.zeta(3)
    assert 1 + z3 + z3 * z3 == 0
    assert CycloElem.zeta(5).inverse() == CycloElem.zeta(5, 4)


def test_canonical_reduction():
    # zeta_6^2 = zeta_6 - 1 in the power basis mod x^2 - x + 1
    assert CycloElem(6, [0, 0, 1]).coeffs == (F(-1), F(1))
    assert CycloElem(6, [0, 0, 1]) == CycloElem(6, [-1, 1])
    assert CycloElem(4, [F(2, 4), F(-3, 6)]).coeffs == (F(1, 2), F(-1, 2))


def test_degenerate_orders_are_rational():
    assert CycloElem.zeta(2) == -1
    assert CycloElem.zeta(1) == 1
    assert CycloElem(2, [3]).dimension == 1
    assert CycloElem(1, [F(1, 3)]).to_rational() == F(1, 3)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycloElem.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        CycloElem.one(5) / 0


def test_mixed_orders_refuse_to_combine():
    with pytest.raises(ValueError):
        CycloElem.zeta(4) + CycloElem.zeta(3)
    with pytest.raises(ValueError):
        CycloElem.zeta(4) * CycloElem.zeta(8)


def test_lift_sends_zeta_to_power():
    z = CycloElem.zeta(4)
    assert z.lift(12) == CycloElem.zeta(12, 3)
    a = CycloElem(3, [F(1, 2), 5])
    b = CycloElem(3, [-2, F(1, 7)])
    assert (a * b).lift(6) == a.lift(6) * b.lift(6)
    assert (a + b).lift(15) == a.lift(15) + b.lift(15)
    with pytest.raises(ValueError):
        z.lift(6)


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=30).flatmap(lambda m: st.tuples(cyclo(m), cyclo(m), cyclo(m))))
def test_cyclo_field_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    if b:
        assert (a * b) * b.inverse() == a
        assert (a * b) / b == a


# -- polynomials ---------------------------------------------------------------


def test_poly_eval_examples():
    p = UniPoly([F(1, 6), -1, 1])
    assert p(F(1, 4)) == F(-1, 48)
    assert p(0) == F(1, 6)
    assert UniPoly([-1, 1])(1) == 0


def test_zero_polynomial_is_empty():
    assert UniPoly([0, 0]).coeffs == ()
    assert UniPoly().degree == -1
    assert (UniPoly([1, 1]) - UniPoly([1, 1])).coeffs == ()


polys = st.lists(rationals, max_size=6).map(UniPoly)


@settings(max_examples=60, deadline=None)
@given(polys, polys, rationals)
def test_evaluation_is_a_ring_homomorphism(p, q, x0):
    assert (p + q)(x0) == p(x0) + q(x0)
    assert (p * q)(x0) == p(x0) * q(x0)
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@settings(max_examples=40, deadline=None)
@given(polys, rationals, rationals)
def test_compose_linear_matches_generic_composition(p, a, b):
    assert p.compose_linear(a, b) == p(UniPoly([b, a]))


def test_divmod_monic():
    num = UniPoly([-1, 0, 0, 0, 0, 0, 1])
    q, r = num.divmod_monic(UniPoly([-1, 1]))
    assert not r
    assert q == UniPoly([1, 1, 1, 1, 1, 1])


# -- serialization -------------------------------------------------------------


def test_rational_wire_format():
    assert format_rational(F(-3, 2)) == "-3/2"
    assert format_rational(5) == "5/1"
    assert parse_rational("5") == 5
    assert parse_rational("-6/4") == F(-3, 2)
    with pytest.raises(ValueError):
        parse_rational("1.5")


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=24).flatmap(cyclo))
def test_cyclo_roundtrip(z):
    rec = cyclo_to_dict(z)
    assert len(rec["coeffs"]) == euler_phi(z.order)
    assert cyclo_from_dict(rec) == z
