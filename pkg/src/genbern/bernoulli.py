"""Closed forms for Bernoulli numbers and polynomials, their character-twisted
versions, and character power sums.

Convention: B_1 = -1/2 (generating function t/(e^t - 1)).  For a d-periodic
map chi the generalized numbers are

    B_{n,chi} = d^(n-1) * sum_{i=0}^{d-1} chi(i) B_n(i/d)

and B_{n,chi}(x) = sum_l C(n,l) B_{l,chi} x^(n-l).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .algebra import CycloElem, UniPoly, as_rational
from .dirichlet import PeriodicMap

__all__ = [
    "BernoulliCache",
    "bernoulli_number",
    "bernoulli_poly",
    "gen_bernoulli_number",
    "gen_bernoulli_number_printed",
    "gen_bernoulli_poly",
    "gen_bernoulli_poly_at",
    "gen_bernoulli_at_direct",
    "power_sum",
]


class BernoulliCache:
    """Append-only tables of B_n and B_n(x).

    Growth happens under a lock; readers only ever index below the current
    length, so they always see fully built entries.
    """

    def __init__(self):
        self._numbers: list[Fraction] = [Fraction(1)]
        self._polys: list[UniPoly] = [UniPoly((Fraction(1),))]
        self._lock = threading.Lock()

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n >= len(self._numbers):
            with self._lock:
                nums = self._numbers
                while len(nums) <= n:
                    m = len(nums)
                    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
                    s = sum(comb(m + 1, k) * nums[k] for k in range(m))
                    nums.append(-s / (m + 1))
        return self._numbers[n]

    def poly(self, n: int) -> UniPoly:
        if n >= len(self._polys):
            self.number(n)
            with self._lock:
                while len(self._polys) <= n:
                    m = len(self._polys)
                    self._polys.append(
                        UniPoly(comb(m, j) * self._numbers[m - j] for j in range(m + 1))
                    )
        return self._polys[n]


_DEFAULT = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return _DEFAULT.number(n)


def bernoulli_poly(n: int) -> UniPoly:
    """B_n(x) with Fraction coefficients (index = power of x)."""
    return _DEFAULT.poly(n)


def _memo(chi: PeriodicMap, key, compute):
    # values are pure functions of (chi, key): a lost race only recomputes
    try:
        return chi.cache[key]
    except KeyError:
        return chi.cache.setdefault(key, compute())


def gen_bernoulli_number(chi: PeriodicMap, n: int) -> CycloElem:
    """B_{n,chi} = d^(n-1) sum_{i<d} chi(i) B_n(i/d)."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")

    def compute():
        d = chi.modulus
        bn = bernoulli_poly(n)
        total = CycloElem.zero(chi.order)
        for i in range(d):
            v = chi(i)
            if v:
                total = total + v * bn(Fraction(i, d))
        return total * Fraction(d) ** (n - 1)

    return _memo(chi, ("B", n), compute)


def gen_bernoulli_number_printed(chi: PeriodicMap, n: int) -> CycloElem:
    """d^n sum_{i<d} chi(i) B_i(i/d): the misprinted closed form, kept only as a
    falsification target."""
    d = chi.modulus
    total = CycloElem.zero(chi.order)
    for i in range(d):
        total = total + chi(i) * bernoulli_poly(i)(Fraction(i, d))
    return total * Fraction(d) ** n


def gen_bernoulli_poly(chi: PeriodicMap, n: int) -> UniPoly:
    """B_{n,chi}(x) = sum_l C(n,l) B_{l,chi} x^(n-l), CycloElem coefficients."""

    def compute():
        return UniPoly(comb(n, j) * gen_bernoulli_number(chi, n - j) for j in range(n + 1))

    return _memo(chi, ("Bx", n), compute)


def gen_bernoulli_poly_at(chi: PeriodicMap, n: int, x0) -> CycloElem:
    value = gen_bernoulli_poly(chi, n)(as_rational(x0))
    if not isinstance(value, CycloElem):
        value = CycloElem.scalar(chi.order, value)
    return value


def gen_bernoulli_at_direct(chi: PeriodicMap, n: int, x0) -> CycloElem:
    """B_{n,chi}(x0) = d^(n-1) sum_{a<d} chi(a) B_n((a + x0)/d).

    Evaluates at a point without going through B_{l,chi} or the binomial
    expansion, so it serves as a second route to the same value.
    """
    x0 = as_rational(x0)

    def compute():
        d = chi.modulus
        bn = bernoulli_poly(n)
        # rational parts summed per character value, one field product each
        buckets: dict[CycloElem, Fraction] = {}
        for a in range(d):
            v = chi(a)
            if v:
                buckets[v] = buckets.get(v, 0) + bn((a + x0) / d)
        total = CycloElem.zero(chi.order)
        for v, s in buckets.items():
            total = total + v * s
        return total * Fraction(d) ** (n - 1)

    return _memo(chi, ("direct", n, x0), compute)


def power_sum(chi: PeriodicMap, k: int, n: int) -> CycloElem:
    """T_k(chi, n) = sum_{l=0}^{n} chi(l) l^k, with 0^0 = 1."""
    if k < 0 or n < 0:
        raise ValueError("power_sum needs k >= 0 and n >= 0")

    def compute():
        total = CycloElem.zero(chi.order)
        for ell in range(n + 1):
            v = chi(ell)
            if v:
                total = total + v * ell**k  # Python: 0**0 == 1
        return total

    return _memo(chi, ("T", k, n), compute)
