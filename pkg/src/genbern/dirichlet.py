"""Dirichlet characters modulo d with exact cyclotomic values.

A character is fixed by the images of the generators of (Z/dZ)*.  We build
the unit group as a direct product of cyclic factors (CRT over the prime
powers of d, with the usual {+-1} x <5> split at 2^e, e >= 3), enumerate the
exponent tuples lexicographically and tabulate chi(0..d-1) eagerly.

Any d-periodic table of cyclotomic scalars can stand in for a character
(:class:`PeriodicMap`); everything downstream only looks at ``modulus``,
``order`` and the value table.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Sequence

from .algebra import CycloElem, divisors, euler_phi

__all__ = [
    "UnitGroupStructure",
    "PeriodicMap",
    "DirichletChar",
    "unit_group",
    "characters",
    "character",
    "chi_eval",
    "conductor",
    "parity",
    "periodic_map",
    "factorize",
]


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _multiplicative_order(a: int, n: int) -> int:
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def _primitive_root(q: int) -> int:
    """Smallest primitive root modulo an odd prime power q."""
    target = euler_phi(q)
    for g in range(2, q):
        if math.gcd(g, q) == 1 and _multiplicative_order(g, q) == target:
            return g
    raise ValueError(f"no primitive root mod {q}")


def _crt_lift(residue: int, q: int, d: int) -> int:
    """The integer in [0, d) that is residue mod q and 1 mod d/q."""
    rest = d // q
    if rest == 1:
        return residue % d
    # x = residue + q*t with q*t = 1 - residue (mod rest)
    t = (1 - residue) * pow(q, -1, rest) % rest
    return (residue + q * t) % d


@dataclass(frozen=True)
class UnitGroupStructure:
    modulus: int
    factors: tuple[tuple[int, int], ...]  # (generator mod d, order)
    dlog: dict = field(compare=False, repr=False)  # unit a -> exponent tuple

    @property
    def exponent(self) -> int:
        return math.lcm(*(o for _, o in self.factors)) if self.factors else 1


def unit_group(d: int) -> UnitGroupStructure:
    """Cyclic decomposition of (Z/dZ)* with a discrete-log table."""
    if d < 1:
        raise ValueError(f"modulus must be >= 1, got {d}")
    factors: list[tuple[int, int]] = []
    for p, e in factorize(d):
        q = p**e
        if p == 2:
            if e == 2:
                factors.append((_crt_lift(-1, q, d), 2))
            elif e >= 3:
                factors.append((_crt_lift(-1, q, d), 2))
                factors.append((_crt_lift(5, q, d), 2 ** (e - 2)))
        else:
            factors.append((_crt_lift(_primitive_root(q), q, d), euler_phi(q)))
    dlog = {}
    for exps in itertools.product(*(range(o) for _, o in factors)):
        a = 1 % d
        for (g, _), k in zip(factors, exps):
            a = a * pow(g, k, d) % d
        dlog[a] = exps
    assert len(dlog) == euler_phi(d)
    return UnitGroupStructure(d, tuple(factors), dlog)


@dataclass(frozen=True, eq=False)
class PeriodicMap:
    """A d-periodic map Z -> Q(zeta_order) given by its values on 0..d-1."""

    modulus: int
    order: int
    values: tuple[CycloElem, ...]
    index: int = 0
    # per-object memo used by the bernoulli module; append-only
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(self.values) != self.modulus:
            raise ValueError("value table length must equal the modulus")
        if any(v.order != self.order for v in self.values):
            raise ValueError("all values must live in the same cyclotomic field")

    def __call__(self, a: int) -> CycloElem:
        return self.values[a % self.modulus]

    def __eq__(self, other):
        if not isinstance(other, PeriodicMap):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.order == other.order
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.modulus, self.order, self.values))

    def __getstate__(self):
        # the memo is rebuilt on the other side rather than shipped
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "cache"}

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)
        object.__setattr__(self, "cache", {})

    @property
    def label(self) -> str:
        return f"map{self.index}:{self.modulus}"


def periodic_map(values: Sequence, order: int = 1, index: int = 0) -> PeriodicMap:
    """Build a PeriodicMap from rationals and/or CycloElems of one order."""
    vals = []
    for v in values:
        if isinstance(v, CycloElem):
            order = v.order
    for v in values:
        vals.append(v if isinstance(v, CycloElem) else CycloElem.scalar(order, v))
    return PeriodicMap(len(vals), order, tuple(vals), index)


@dataclass(frozen=True, eq=False)
class DirichletChar(PeriodicMap):
    exponents: tuple[int, ...] = ()
    group: UnitGroupStructure | None = field(default=None, repr=False)

    @property
    def label(self) -> str:
        return f"{self.modulus}:{self.index}"

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)


def characters(d: int) -> list[DirichletChar]:
    """All phi(d) characters mod d, exponent tuples in lexicographic order.

    Index 0 is the principal character.  For d = 1 the single character
    takes the value 1 at every integer, including 0.
    """
    group = unit_group(d)
    orders = [o for _, o in group.factors]
    big = group.exponent
    chars = []
    for idx, exps in enumerate(itertools.product(*(range(o) for o in orders))):
        m = math.lcm(1, *(o // math.gcd(e, o) for e, o in zip(exps, orders)))
        zero = CycloElem.zero(m)
        values = []
        for a in range(d):
            logs = group.dlog.get(a)
            if logs is None:
                values.append(zero)
                continue
            k = sum(e * (big // o) * t for e, o, t in zip(exps, orders, logs)) % big
            step = big // m
            assert k % step == 0
            values.append(CycloElem.zeta(m, k // step))
        chars.append(
            DirichletChar(d, m, tuple(values), index=idx, exponents=tuple(exps), group=group)
        )
    return chars


def character(d: int, index: int) -> DirichletChar:
    chars = characters(d)
    if not 0 <= index < len(chars):
        raise IndexError(f"character index {index} out of range for modulus {d} ({len(chars)} characters)")
    return chars[index]


def chi_eval(chi: PeriodicMap, a: int) -> CycloElem:
    return chi(a)


def conductor(chi: DirichletChar) -> int:
    """Smallest f | d such that chi is 1 on every unit congruent to 1 mod f."""
    d = chi.modulus
    units = [a for a in range(d) if math.gcd(a, d) == 1]
    for f in divisors(d):
        if all(chi(a) == 1 for a in units if (a - 1) % f == 0):
            return f
    return d  # unreachable: f = d always qualifies


def parity(chi: PeriodicMap) -> int:
    """0 for even characters (chi(-1) = 1), 1 for odd ones."""
    if chi.modulus <= 2:
        return 0
    v = chi(chi.modulus - 1)
    if v == 1:
        return 0
    assert v == -1, f"chi(-1) = {v} is not a sign"
    return 1


def induced_values(chi: DirichletChar, d: int) -> list[CycloElem]:
    """Values of the character mod d induced from chi (whose modulus divides d)."""
    if d % chi.modulus:
        raise ValueError("modulus must divide the target modulus")
    zero = CycloElem.zero(chi.order)
    return [chi(a) if math.gcd(a, d) == 1 else zero for a in range(d)]


def rational_values(chi: PeriodicMap) -> list[Fraction] | None:
    """Value table as Fractions when every value is rational, else None."""
    if all(v.is_rational() for v in chi.values):
        return [v.to_rational() for v in chi.values]
    return None
