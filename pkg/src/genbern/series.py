"""Truncated power series in t over an exact scalar ring.

This is the independent route to every closed form in :mod:`genbern.bernoulli`:
generating functions are built from exponentials and divided out, and
the EGF coefficient n! [t^n] is read off.  Every factor e^{ct} - 1 has a
vanishing constant term, so it is always represented pre-divided by t
(:func:`expm1_over_t`); only series with a unit constant term are inverted.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import CycloElem, as_rational
from .dirichlet import PeriodicMap

__all__ = [
    "DEFAULT_ORDER",
    "NonUnitError",
    "TruncSeries",
    "series_exp_linear",
    "expm1_over_t",
    "series_div_unit",
    "bernoulli_series",
    "gen_bernoulli_series",
    "character_exp_sum",
    "power_sum_series",
    "t_chi_series",
]

DEFAULT_ORDER = 16


class NonUnitError(ArithmeticError):
    """Raised when dividing by a series whose constant term is zero."""


class TruncSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^(N+1)), ordinary coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def _check(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([self.coeffs[0] + other, *self.coeffs[1:]], self.order)
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(self.order + 1):
            acc = 0
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncSeries(out, self.order)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c / other for c in self.coeffs], self.order)
        return series_div_unit(self, other)

    def egf(self, k: int):
        """k! * [t^k]."""
        return self.coeffs[k] * factorial(k)

    def egf_coeffs(self) -> list:
        return [self.egf(k) for k in range(self.order + 1)]


def series_exp_linear(c, order: int) -> TruncSeries:
    """e^{ct} = sum c^k t^k / k!."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    out, term = [], Fraction(1)
    for k in range(order + 1):
        out.append(term)
        term = term * c / (k + 1)
    return TruncSeries(out, order)


def expm1_over_t(c, order: int) -> TruncSeries:
    """(e^{ct} - 1)/t = sum c^(k+1) t^k / (k+1)!; constant term c."""
    out, term = [], Fraction(1)
    for k in range(order + 1):
        term = term * c / (k + 1)
        out.append(term)
    return TruncSeries(out, order)


def series_div_unit(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    """q with q * den = num + O(t^(N+1)); den must have a nonzero constant term."""
    num._check(den)
    d0 = den.coeffs[0]
    if not d0:
        raise NonUnitError("denominator series has zero constant term")
    inv0 = 1 / d0 if isinstance(d0, CycloElem) else 1 / Fraction(d0)
    q = []
    for k in range(num.order + 1):
        acc = num.coeffs[k]
        for i in range(k):
            if q[i] and den.coeffs[k - i]:
                acc = acc - q[i] * den.coeffs[k - i]
        q.append(acc * inv0)
    return TruncSeries(q, num.order)


def bernoulli_series(order: int = DEFAULT_ORDER) -> TruncSeries:
    """t/(e^t - 1) = 1 / ((e^t - 1)/t); coefficient k is B_k / k!."""
    return series_div_unit(series_exp_linear(0, order), expm1_over_t(1, order))


def character_exp_sum(chi: PeriodicMap, scale, order: int) -> TruncSeries:
    """sum_{a=0}^{d-1} chi(a) e^{scale * a * t}."""
    total = TruncSeries([CycloElem.zero(chi.order)], order)
    for a in range(chi.modulus):
        v = chi(a)
        if v:
            total = total + series_exp_linear(scale * a, order) * v
    return total


def gen_bernoulli_series(chi: PeriodicMap, order: int = DEFAULT_ORDER, x0=0) -> TruncSeries:
    """t * sum chi(i) e^{it} e^{x0 t} / (e^{dt} - 1); EGF coefficient n is B_{n,chi}(x0)."""
    num = character_exp_sum(chi, 1, order)
    x0 = as_rational(x0)
    if x0:
        num = num * series_exp_linear(x0, order)
    return series_div_unit(num, expm1_over_t(chi.modulus, order))


def power_sum_series(chi: PeriodicMap, w: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """sum chi(i) e^{it} (e^{dwt} - 1)/(e^{dt} - 1); EGF coefficient k is T_k(chi, dw - 1)."""
    d = chi.modulus
    ratio = series_div_unit(expm1_over_t(d * w, order), expm1_over_t(d, order))
    return character_exp_sum(chi, 1, order) * ratio


def t_chi_series(chi: PeriodicMap, w1: int, w2: int, x0=0, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The two-weight symmetric generating function

        t (e^{d w1 w2 t} - 1) e^{w1 w2 x0 t} S(w1) S(w2) / ((e^{w1 d t} - 1)(e^{w2 d t} - 1))

    with S(w) = sum_{a<d} chi(a) e^{w a t}.  One factor of t is cleared
    against each of the three e^{...} - 1 factors.
    """
    if w1 < 1 or w2 < 1:
        raise ValueError("weights must be positive")
    d = chi.modulus
    x0 = as_rational(x0)
    num = (
        expm1_over_t(d * w1 * w2, order)
        * series_exp_linear(w1 * w2 * x0, order)
        * character_exp_sum(chi, w1, order)
        * character_exp_sum(chi, w2, order)
    )
    den = expm1_over_t(w1 * d, order) * expm1_over_t(w2 * d, order)
    return series_div_unit(num, den)
