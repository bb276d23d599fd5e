"""Exact scalars and polynomials: rationals, dense univariate polynomials,
cyclotomic polynomials and the cyclotomic fields Q(zeta_m).

Everything here is immutable.  The only caching is memoization of pure
functions of the cyclotomic order (``functools.lru_cache``).
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "UniPoly",
    "CycloElem",
    "cyclotomic_poly",
    "euler_phi",
    "divisors",
    "as_rational",
]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# ---------------------------------------------------------------------------
# Dense univariate polynomials


class UniPoly:
    """Dense polynomial ``c[0] + c[1] x + ... + c[n] x^n`` over an exact ring.

    Coefficients may be ints, Fractions or CycloElems; trailing zeros are
    stripped so the zero polynomial has an empty coefficient tuple.
    Calling a polynomial evaluates it by Horner's rule.  The argument may be
    another UniPoly, in which case the call is composition.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "UniPoly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            if self.degree <= 0:
                return self[0] == other
            return False
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                t = x * y
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return UniPoly(0 if c is None else c for c in out)

    def __rmul__(self, other):
        # scalar on the left; scalars here are commutative
        return UniPoly(other * c for c in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x0):
        """Horner evaluation at ``x0`` (a scalar or a UniPoly)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        if isinstance(x0, UniPoly) and not isinstance(acc, UniPoly):
            acc = UniPoly((acc,))
        return acc

    def compose_linear(self, a, b) -> "UniPoly":
        """p(a*x + b) for scalars a, b."""
        acc: list = []
        for c in reversed(self.coeffs):
            nxt = [c + acc[0] * b] if acc else [c]
            for j in range(1, len(acc)):
                nxt.append(acc[j - 1] * a + acc[j] * b)
            if acc:
                nxt.append(acc[-1] * a)
            acc = nxt
        return UniPoly(acc)

    def map(self, f) -> "UniPoly":
        return UniPoly(f(c) for c in self.coeffs)

    def scale_var(self, a) -> "UniPoly":
        """p(a*x)."""
        out, power = [], 1
        for c in self.coeffs:
            out.append(c * power)
            power = power * a
        return UniPoly(out)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod_monic(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division by a polynomial with leading coefficient 1."""
        if not divisor or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dq = divisor.degree
        if len(rem) - 1 < dq:
            return UniPoly(), self
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            quot[k - dq] = c
            for j, dc in enumerate(divisor.coeffs):
                rem[k - dq + j] -= c * dc
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, divisor):
        return self.divmod_monic(divisor)[0]

    def __mod__(self, divisor):
        return self.divmod_monic(divisor)[1]


# ---------------------------------------------------------------------------
# Cyclotomic polynomials


@functools.lru_cache(maxsize=None)
def _cyclotomic_int(m: int) -> tuple[int, ...]:
    if m < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {m}")
    poly = UniPoly([-1] + [0] * (m - 1) + [1])
    for d in divisors(m)[:-1]:
        q, r = poly.divmod_monic(UniPoly(_cyclotomic_int(d)))
        assert not r, "x^m - 1 not divisible by a proper cyclotomic factor"
        poly = q
    return tuple(int(c) for c in poly.coeffs)


def cyclotomic_poly(m: int) -> UniPoly:
    """Phi_m as (x^m - 1) divided by Phi_d for every proper divisor d of m."""
    return UniPoly(Fraction(c) for c in _cyclotomic_int(m))


@functools.lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of zeta_m^k, 0 <= k < m, in the power basis."""
    phi_coeffs = _cyclotomic_int(m)
    n = len(phi_coeffs) - 1
    rows = []
    vec = [1] + [0] * (n - 1)
    for _ in range(m):
        rows.append(tuple(vec))
        # multiply by zeta: shift, then replace zeta^n by -(Phi_m - zeta^n)
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(n):
                vec[j] -= top * phi_coeffs[j]
    return tuple(rows)


# ---------------------------------------------------------------------------
# Cyclotomic field elements


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g > 1:
        nums = [a // g for a in nums]
        den //= g
    if not any(nums):
        den = 1
    return tuple(nums), den


class CycloElem:
    """Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).

    Stored as an integer numerator vector over one positive common
    denominator, always reduced modulo Phi_m and to lowest terms, so equality
    is plain vector equality.  ``coeffs`` exposes the Fraction coordinates.

    Ints and Fractions combine with any order through the constant
    coefficient.  Mixing two different orders raises ``ValueError``; use
    :meth:`lift` to move into a common field first.
    """

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {order}")
        table = _power_table(order)
        n = len(table[0])
        fr = [as_rational(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        acc = [0] * n
        for k, c in enumerate(fr):
            if not c:
                continue
            a = c.numerator * (den // c.denominator)
            row = table[k % order]
            for j in range(n):
                if row[j]:
                    acc[j] += a * row[j]
        self.order = order
        self._num, self._den = _normalize(acc, den)

    @classmethod
    def _raw(cls, order: int, num, den: int) -> "CycloElem":
        obj = object.__new__(cls)
        obj.order = order
        obj._num, obj._den = _normalize(list(num), den)
        return obj

    @classmethod
    def scalar(cls, order: int, value) -> "CycloElem":
        q = as_rational(value)
        n = len(_power_table(order)[0])
        return cls._raw(order, [q.numerator] + [0] * (n - 1), q.denominator)

    @classmethod
    def zero(cls, order: int) -> "CycloElem":
        return cls.scalar(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloElem":
        return cls.scalar(order, 1)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycloElem":
        """zeta_order ** k."""
        return cls._raw(order, _power_table(order)[k % order], 1)

    # -- inspection ---------------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self._num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self):
        return any(self._num)

    def __repr__(self):
        return f"CycloElem({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                z = "z" if j == 1 else f"z^{j}"
                terms.append(z if c == 1 else f"({c})*{z}")
        return " + ".join(terms) if terms else "0"

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            if other.order != self.order:
                return NotImplemented
            return self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.order, self._num, self._den))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "CycloElem | None":
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise ValueError(
                    f"mixing Q(zeta_{self.order}) with Q(zeta_{other.order}); lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.scalar(self.order, other)
        return None

    def __neg__(self):
        return CycloElem._raw(self.order, [-a for a in self._num], self._den)

    def __add__(self, other):
        if isinstance(other, int) and not isinstance(other, bool) and other == 0:
            return self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return CycloElem._raw(self.order, [a + b for a, b in zip(self._num, o._num)], self._den)
        da, db = self._den, o._den
        return CycloElem._raw(
            self.order, [a * db + b * da for a, b in zip(self._num, o._num)], da * db
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            num, den = other.numerator, other.denominator
            return CycloElem._raw(self.order, [a * num for a in self._num], self._den * den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        n = len(a)
        if n == 1:
            return CycloElem._raw(self.order, [a[0] * b[0]], self._den * o._den)
        raw = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    raw[i + j] += x * y
        out = raw[:n]
        table = _power_table(self.order)
        for k in range(n, 2 * n - 1):
            c = raw[k]
            if c:
                row = table[k % self.order]
                for j in range(n):
                    out[j] += c * row[j]
        return CycloElem._raw(self.order, out, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.dimension
        if n == 1:
            return CycloElem.scalar(self.order, 1 / Fraction(self._num[0], self._den))
        # columns of the multiplication-by-self matrix are self * zeta^j
        cols = []
        for j in range(n):
            cols.append((self * CycloElem.zeta(self.order, j)).coeffs)
        # augmented system M y = e_0
        rows = [[cols[j][i] for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if rows[r][c])
            rows[c], rows[piv] = rows[piv], rows[c]
            pv = rows[c][c]
            rows[c] = [v / pv for v in rows[c]]
            for r in range(n):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        return CycloElem(self.order, [rows[i][n] for i in range(n)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic element by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElem.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def lift(self, target_order: int) -> "CycloElem":
        """Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^(M/m), for m | M."""
        if target_order % self.order:
            raise ValueError(f"{self.order} does not divide {target_order}")
        step = target_order // self.order
        coeffs = [0] * ((len(self._num) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            coeffs[j * step] = c
        return CycloElem(target_order, coeffs)
