"""Finite levels of the p-adic invariant integral of monomials.

The level-N average  I_N(x^n) = p^-N sum_{x<p^N} x^n  is an exact rational
(computed from Faulhaber's formula, not by enumeration).  Its p-adic
distance to B_n is controlled by the expansion

    I_N(x^n) - B_n = sum_{k<n} C(n+1,k) B_k p^(N(n-k)) / (n+1)

whose terms each have valuation >= N - v_p(n+1) - 1, because Bernoulli
denominators are squarefree (von Staudt-Clausen).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import as_rational
from .bernoulli import bernoulli_number, bernoulli_poly
from .identities import IdentityInstance, VerificationReport
from .serialize import to_jsonable

__all__ = [
    "INF",
    "is_prime",
    "padic_val",
    "riemann_sum",
    "riemann_sum_enumerated",
    "error_terms",
    "LevelRow",
    "convergence_check",
    "shift_identity_check",
    "convergence_reports",
]

INF = math.inf


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _require_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def _int_val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_val(q, p: int):
    """v_p(q) as an int, or math.inf for q = 0."""
    _require_prime(p)
    q = as_rational(q)
    if not q:
        return INF
    return _int_val(abs(q.numerator), p) - _int_val(q.denominator, p)


def riemann_sum(n: int, p: int, level: int) -> Fraction:
    """p^-N sum_{x=0}^{p^N - 1} x^n = (B_{n+1}(p^N) - B_{n+1}) / ((n+1) p^N)."""
    _require_prime(p)
    if n < 0 or level < 0:
        raise ValueError("need n >= 0 and level >= 0")
    m = p**level
    return (bernoulli_poly(n + 1)(Fraction(m)) - bernoulli_number(n + 1)) / ((n + 1) * m)


def riemann_sum_enumerated(n: int, p: int, level: int) -> Fraction:
    """Literal sum; only for small p^N."""
    _require_prime(p)
    m = p**level
    return Fraction(sum(x**n for x in range(m)), m)


def error_terms(n: int, p: int, level: int) -> list[Fraction]:
    """Terms C(n+1,k) B_k p^(N(n-k)) / (n+1), k = 0..n-1."""
    m = p**level
    return [
        comb(n + 1, k) * bernoulli_number(k) * Fraction(m ** (n - k), n + 1) for k in range(n)
    ]


def _val_out(v):
    return "inf" if v == INF else v


@dataclass(frozen=True)
class LevelRow:
    level: int
    riemann_sum: Fraction
    error: Fraction
    valuation: float | int
    bound: int
    term_valuations: tuple
    identity_holds: bool
    passed: bool

    def to_record(self) -> dict:
        return {
            "level": self.level,
            "riemann_sum": to_jsonable(self.riemann_sum),
            "error": to_jsonable(self.error),
            "valuation": _val_out(self.valuation),
            "bound": self.bound,
            "term_valuations": [_val_out(v) for v in self.term_valuations],
            "identity_holds": self.identity_holds,
            "pass": self.passed,
        }


def convergence_check(n: int, p: int, max_level: int) -> list[LevelRow]:
    """One row per level 1..max_level.

    A row passes when the error equals the sum of the expansion terms and
    both the error and every term have valuation >= N - v_p(n+1) - 1.
    """
    _require_prime(p)
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    bn = bernoulli_number(n)
    rows = []
    for level in range(1, max_level + 1):
        s = riemann_sum(n, p, level)
        err = s - bn
        terms = error_terms(n, p, level)
        bound = level - _int_val(n + 1, p) - 1
        val = padic_val(err, p)
        term_vals = tuple(padic_val(t, p) for t in terms)
        identity = sum(terms, Fraction(0)) == err
        ok = identity and val >= bound and all(v >= bound for v in term_vals)
        rows.append(LevelRow(level, s, err, val, bound, term_vals, identity, ok))
    return rows


def shift_identity_check(k: int, m: int) -> VerificationReport:
    """I(f(x + m)) - I(f) = sum_{i=0}^{m-1} f'(i) for f(x) = x^k.

    The left side is B_k(m) - B_k; the right side k * sum_{i<m} i^(k-1)
    (zero for k = 0).  m = 1 is the single-step shift I(f(x+1)) = I(f) + f'(0).
    """
    if k < 0 or m < 1:
        raise ValueError("need k >= 0 and m >= 1")
    lhs = bernoulli_poly(k)(Fraction(m)) - bernoulli_number(k)
    rhs = Fraction(k * sum(i ** (k - 1) for i in range(m))) if k else Fraction(0)
    inst = IdentityInstance(id="volkenborn-shift", d=1, degree=k, n=m, mode="point")
    return VerificationReport.compare(inst, Fraction(lhs), rhs)


def convergence_reports(n: int, p: int, max_level: int) -> list[VerificationReport]:
    """Level rows as reports: lhs is the exact error, rhs the expansion sum.

    ``passed`` also requires the valuation bound, so a row can fail with
    zero discrepancy when only the bound is violated.
    """
    out = []
    for row in convergence_check(n, p, max_level):
        inst = IdentityInstance(id="volkenborn-conv", d=1, degree=n, n=row.level, mode="point", p=p)
        rhs = sum(error_terms(n, p, row.level), Fraction(0))
        out.append(VerificationReport(inst, row.error, rhs, row.passed,
                                      None if row.passed else row.error - rhs))
    return out
