"""Exact verification of the symmetry identities for generalized Bernoulli
numbers and polynomials.

Each ``verify_*`` function evaluates both sides of one identity instance in
exact arithmetic and returns a :class:`VerificationReport`.  Sides that
depend on x are compared as polynomials (``x0=None``, symbolic mode) or at
a rational point.  :func:`run_suite` sweeps a grid of moduli, characters,
weights and degrees, optionally adding seeded random periodic maps.

Identity ids:

    lemma1          B_{n,chi} closed form vs. series coefficient
    lemma1-printed  the misprinted closed form vs. series coefficient
    eq13            B_{k,chi}(nd) - B_{k,chi} = k T_{k-1}(chi, nd-1)
    thm2            sum_i C(l,i) B_{i,chi}(w2 x) T_{l-i}(chi, d w1 - 1) w1^(i-1) w2^(l-i), symmetric in w1, w2
    thm2-x0         the same at x = 0, built from B_{i,chi} directly
    thm3            w1^(k-1) sum_{i<d w1} chi(i) B_{k,chi}(w2 x + w2 i/w1), symmetric in w1, w2
    remark-x0       thm3 at x = 0, via the shifted-argument evaluation
    remark-w2-1     thm3 at x = 0, w2 = 1
    series-cross    l! [t^l] of the two-weight generating function vs. a thm2/thm3 side
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from fractions import Fraction
from math import comb, factorial

from .algebra import CycloElem, UniPoly
from .bernoulli import (
    gen_bernoulli_at_direct,
    gen_bernoulli_number,
    gen_bernoulli_number_printed,
    gen_bernoulli_poly,
    gen_bernoulli_poly_at,
    power_sum,
)
from .dirichlet import DirichletChar, PeriodicMap, characters, periodic_map
from .series import gen_bernoulli_series, t_chi_series
from .serialize import format_rational, to_jsonable

__all__ = [
    "IDENTITY_IDS",
    "EXPECTED_FAILURES",
    "IdentityInstance",
    "VerificationReport",
    "SuiteGrid",
    "SuiteResult",
    "verify_lemma1",
    "verify_eq13",
    "verify_thm2",
    "verify_thm2_x0",
    "verify_thm3",
    "verify_remark",
    "verify_remark_x0",
    "verify_series_cross",
    "random_periodic_maps",
    "run_suite",
]

IDENTITY_IDS = (
    "lemma1",
    "lemma1-printed",
    "eq13",
    "thm2",
    "thm2-x0",
    "thm3",
    "remark-x0",
    "remark-w2-1",
    "series-cross",
)

# misprinted closed form: its failures are findings, not regressions
EXPECTED_FAILURES = frozenset({"lemma1-printed"})


@dataclass(frozen=True)
class IdentityInstance:
    id: str
    d: int
    char_index: int | None = None
    map_index: int | None = None
    w1: int | None = None
    w2: int | None = None
    degree: int | None = None
    n: int | None = None
    mode: str = "symbolic"
    x0: Fraction | None = None
    against: str | None = None
    p: int | None = None

    def key(self) -> tuple:
        def k(v):
            return (0, 0) if v is None else (1, v)

        return (
            IDENTITY_IDS.index(self.id) if self.id in IDENTITY_IDS else len(IDENTITY_IDS),
            self.id,
            self.d,
            k(self.map_index),
            k(self.char_index),
            k(self.w1),
            k(self.w2),
            k(self.degree),
            k(self.n),
            self.mode,
            k(self.x0),
            k(self.against),
            k(self.p),
        )

    def params(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "id" or v is None:
                continue
            out[f.name] = format_rational(v) if f.name == "x0" else v
        return out


@dataclass(frozen=True)
class VerificationReport:
    instance: IdentityInstance
    lhs: object
    rhs: object
    passed: bool
    discrepancy: object = None

    @classmethod
    def compare(cls, instance: IdentityInstance, lhs, rhs) -> "VerificationReport":
        diff = lhs - rhs
        ok = not diff
        return cls(instance, lhs, rhs, ok, None if ok else diff)

    @property
    def expected_failure(self) -> bool:
        return self.instance.id in EXPECTED_FAILURES

    def to_record(self) -> dict:
        inst = self.instance
        rec = {
            "id": inst.id,
            "d": inst.d,
            "char_index": inst.char_index,
            "w1": inst.w1,
            "w2": inst.w2,
            "degree": inst.degree,
            "mode": inst.mode,
            "params": inst.params(),
            "pass": self.passed,
            "lhs": to_jsonable(self.lhs),
            "rhs": to_jsonable(self.rhs),
        }
        if not self.passed:
            rec["discrepancy"] = to_jsonable(self.discrepancy)
        return rec

    def to_row(self) -> dict:
        """Same keys as :meth:`to_record` with exact values left unconverted
        (for CSV cells)."""
        rec = self.to_record()
        rec["lhs"], rec["rhs"] = self.lhs, self.rhs
        if not self.passed:
            rec["discrepancy"] = self.discrepancy
        return rec


def _base(chi: PeriodicMap, **kw) -> IdentityInstance:
    if isinstance(chi, DirichletChar):
        return IdentityInstance(d=chi.modulus, char_index=chi.index, **kw)
    return IdentityInstance(d=chi.modulus, map_index=chi.index, **kw)


def _zero(chi: PeriodicMap) -> CycloElem:
    return CycloElem.zero(chi.order)


def _cyclo(chi: PeriodicMap, value) -> CycloElem:
    return value if isinstance(value, CycloElem) else CycloElem.scalar(chi.order, value)


def _oracle_numbers(chi: PeriodicMap, n_max: int) -> list[CycloElem]:
    key = ("oracle", n_max)
    if key not in chi.cache:
        series = gen_bernoulli_series(chi, max(n_max, 0))
        chi.cache[key] = [_cyclo(chi, series.egf(n)) for n in range(n_max + 1)]
    return chi.cache[key]


# ---------------------------------------------------------------------------
# lemma1 and eq13


def verify_lemma1(chi: PeriodicMap, n_max: int) -> list[VerificationReport]:
    """Corrected and printed closed forms for B_{n,chi}, n <= n_max, against
    the generating-function coefficients."""
    oracle = _oracle_numbers(chi, n_max)
    reports = []
    for n in range(n_max + 1):
        reports.append(
            VerificationReport.compare(
                _base(chi, id="lemma1", degree=n, mode="point"),
                gen_bernoulli_number(chi, n),
                oracle[n],
            )
        )
        reports.append(
            VerificationReport.compare(
                _base(chi, id="lemma1-printed", degree=n, mode="point"),
                gen_bernoulli_number_printed(chi, n),
                oracle[n],
            )
        )
    return reports


def verify_eq13(chi: PeriodicMap, k: int, n: int) -> VerificationReport:
    if k < 1 or n < 1:
        raise ValueError("eq13 needs k >= 1 and n >= 1")
    d = chi.modulus
    lhs = gen_bernoulli_poly_at(chi, k, n * d) - gen_bernoulli_number(chi, k)
    rhs = power_sum(chi, k - 1, n * d - 1) * k
    return VerificationReport.compare(_base(chi, id="eq13", degree=k, n=n, mode="point"), lhs, rhs)


# ---------------------------------------------------------------------------
# thm2: the two-weight power-sum expansion


def thm2_side(chi: PeriodicMap, wa: int, wb: int, ell: int, x0=None):
    """sum_i C(l,i) B_{i,chi}(wb x) T_{l-i}(chi, d wa - 1) wa^(i-1) wb^(l-i).

    Returns a UniPoly in x when ``x0`` is None, else a CycloElem.
    """
    d = chi.modulus
    arg = UniPoly((0, wb)) if x0 is None else wb * Fraction(x0)
    total = UniPoly() if x0 is None else _zero(chi)
    for i in range(ell + 1):
        weight = Fraction(comb(ell, i) * wb ** (ell - i)) * Fraction(wa) ** (i - 1)
        scalar = power_sum(chi, ell - i, d * wa - 1) * weight
        if not scalar:
            continue
        total = total + gen_bernoulli_poly(chi, i)(arg) * scalar
    if x0 is not None:
        total = _cyclo(chi, total)
    return total


def verify_thm2(chi: PeriodicMap, w1: int, w2: int, ell: int, x0=None) -> VerificationReport:
    _check_weights(w1, w2)
    mode = "symbolic" if x0 is None else "point"
    inst = _base(chi, id="thm2", w1=w1, w2=w2, degree=ell, mode=mode,
                 x0=None if x0 is None else Fraction(x0))
    return VerificationReport.compare(
        inst, thm2_side(chi, w1, w2, ell, x0), thm2_side(chi, w2, w1, ell, x0)
    )


def verify_thm2_x0(chi: PeriodicMap, w1: int, w2: int, ell: int) -> VerificationReport:
    """thm2 at x = 0, assembled from B_{i,chi} and T_k without any polynomial."""
    _check_weights(w1, w2)
    d = chi.modulus

    def side(wa, wb):
        s = _zero(chi)
        for i in range(ell + 1):
            term = gen_bernoulli_number(chi, i) * power_sum(chi, ell - i, d * wa - 1)
            s = s + term * (comb(ell, i) * Fraction(wa) ** (i - 1) * wb ** (ell - i))
        return s

    inst = _base(chi, id="thm2-x0", w1=w1, w2=w2, degree=ell, mode="point", x0=Fraction(0))
    return VerificationReport.compare(inst, side(w1, w2), side(w2, w1))


# ---------------------------------------------------------------------------
# thm3: the two-weight shifted-argument expansion, and its corollaries


def thm3_side(chi: PeriodicMap, wa: int, wb: int, k: int, x0=None):
    """wa^(k-1) sum_{i<d wa} chi(i) B_{k,chi}(wb x + (wb/wa) i)."""
    d = chi.modulus
    poly = gen_bernoulli_poly(chi, k)
    # terms with equal chi(i) are summed before the single cyclotomic product
    buckets: dict[CycloElem, object] = {}
    for i in range(d * wa):
        v = chi(i)
        if not v:
            continue
        shift = Fraction(wb * i, wa)
        if x0 is None:
            val = poly.compose_linear(wb, shift)
        else:
            val = poly(wb * Fraction(x0) + shift)
        buckets[v] = val if v not in buckets else buckets[v] + val
    total = UniPoly() if x0 is None else _zero(chi)
    for v, acc in buckets.items():
        total = total + acc * v
    total = total * Fraction(wa) ** (k - 1)
    if x0 is not None:
        total = _cyclo(chi, total)
    return total


def verify_thm3(chi: PeriodicMap, w1: int, w2: int, k: int, x0=None) -> VerificationReport:
    _check_weights(w1, w2)
    mode = "symbolic" if x0 is None else "point"
    inst = _base(chi, id="thm3", w1=w1, w2=w2, degree=k, mode=mode,
                 x0=None if x0 is None else Fraction(x0))
    return VerificationReport.compare(
        inst, thm3_side(chi, w1, w2, k, x0), thm3_side(chi, w2, w1, k, x0)
    )


def verify_remark_x0(chi: PeriodicMap, w1: int, w2: int, k: int) -> VerificationReport:
    """sum_{i<d w1} chi(i) B_{k,chi}(w2 i/w1) w1^(k-1) = (w1 <-> w2), each value
    taken by the shifted-argument formula rather than the x-polynomial."""
    _check_weights(w1, w2)
    d = chi.modulus

    def side(wa, wb):
        s = _zero(chi)
        for i in range(d * wa):
            v = chi(i)
            if v:
                s = s + v * gen_bernoulli_at_direct(chi, k, Fraction(wb * i, wa))
        return s * Fraction(wa) ** (k - 1)

    inst = _base(chi, id="remark-x0", w1=w1, w2=w2, degree=k, mode="point", x0=Fraction(0))
    return VerificationReport.compare(inst, side(w1, w2), side(w2, w1))


def verify_remark(chi: PeriodicMap, w1: int, k: int) -> VerificationReport:
    """sum_{i<d w1} chi(i) B_{k,chi}(i/w1) w1^(k-1) = sum_{i<d} chi(i) B_{k,chi}(w1 i)."""
    if w1 < 1:
        raise ValueError("w1 must be positive")
    d = chi.modulus
    lhs = _zero(chi)
    for i in range(d * w1):
        lhs = lhs + chi(i) * gen_bernoulli_poly_at(chi, k, Fraction(i, w1))
    lhs = lhs * Fraction(w1) ** (k - 1)
    rhs = _zero(chi)
    for i in range(d):
        rhs = rhs + chi(i) * gen_bernoulli_poly_at(chi, k, w1 * i)
    inst = _base(chi, id="remark-w2-1", w1=w1, w2=1, degree=k, mode="point", x0=Fraction(0))
    return VerificationReport.compare(inst, lhs, rhs)


# ---------------------------------------------------------------------------
# Series cross-check


def verify_series_cross(
    chi: PeriodicMap, w1: int, w2: int, ell: int, x0=0, order: int | None = None, against: str = "thm2"
) -> VerificationReport:
    """l! [t^l] of the two-weight generating function against the closed-form
    expansion named by ``against`` ("thm2" or "thm3"), both at x = x0."""
    _check_weights(w1, w2)
    x0 = Fraction(x0)
    order = ell if order is None else order
    key = ("tchi", w1, w2, x0, order)
    if key not in chi.cache:
        chi.cache[key] = t_chi_series(chi, w1, w2, x0, order)
    coeff = _cyclo(chi, chi.cache[key].egf(ell))
    if against == "thm2":
        closed = thm2_side(chi, w1, w2, ell, x0)
    elif against == "thm3":
        closed = thm3_side(chi, w1, w2, ell, x0)
    else:
        raise ValueError(f"unknown expansion {against!r}")
    inst = _base(chi, id="series-cross", w1=w1, w2=w2, degree=ell, mode="point", x0=x0, against=against)
    return VerificationReport.compare(inst, coeff, closed)


def _check_weights(w1, w2):
    if w1 < 1 or w2 < 1:
        raise ValueError(f"weights must be positive, got w1={w1}, w2={w2}")


# ---------------------------------------------------------------------------
# Grid runs


@dataclass(frozen=True)
class SuiteGrid:
    d_max: int = 12
    w_max: int = 4
    degree_max: int = 8
    ids: tuple[str, ...] = IDENTITY_IDS
    modes: tuple[str, ...] = ("symbolic",)
    points: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2))
    eq13_n_max: int = 3
    lemma1_n_max: int | None = None  # defaults to degree_max
    series_d_max: int | None = None  # defaults to d_max
    periodic_maps: int = 0
    periodic_d_max: int = 6
    seed: int = 0
    d_values: tuple[int, ...] | None = None  # explicit moduli override 1..d_max

    def moduli(self) -> tuple[int, ...]:
        return self.d_values if self.d_values is not None else tuple(range(1, self.d_max + 1))


@dataclass
class SuiteResult:
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def failures(self) -> list[VerificationReport]:
        """Failures that are not documented errata."""
        return [r for r in self.reports if not r.passed and not r.expected_failure]

    @property
    def errata(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.passed and r.expected_failure]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.reports:
            c = out.setdefault(r.instance.id, {"total": 0, "passed": 0, "failed": 0})
            c["total"] += 1
            c["passed" if r.passed else "failed"] += 1
        return out


def _weight_pairs(w_max):
    return [(w1, w2) for w1 in range(1, w_max + 1) for w2 in range(1, w_max + 1)]


def _check_map(chi: PeriodicMap, grid: SuiteGrid) -> list[VerificationReport]:
    ids = set(grid.ids)
    reports: list[VerificationReport] = []
    deg = grid.degree_max
    pairs = _weight_pairs(grid.w_max)
    if ids & {"lemma1", "lemma1-printed"}:
        n_max = grid.lemma1_n_max if grid.lemma1_n_max is not None else deg
        reports += [r for r in verify_lemma1(chi, n_max) if r.instance.id in ids]
    if "eq13" in ids:
        for k in range(1, deg + 1):
            for n in range(1, grid.eq13_n_max + 1):
                reports.append(verify_eq13(chi, k, n))
    for kind, fn in (("thm2", verify_thm2), ("thm3", verify_thm3)):
        if kind not in ids:
            continue
        for w1, w2 in pairs:
            for deg_i in range(deg + 1):
                if "symbolic" in grid.modes:
                    reports.append(fn(chi, w1, w2, deg_i))
                if "point" in grid.modes:
                    for x0 in grid.points:
                        reports.append(fn(chi, w1, w2, deg_i, x0))
    if "thm2-x0" in ids:
        for w1, w2 in pairs:
            for ell in range(deg + 1):
                reports.append(verify_thm2_x0(chi, w1, w2, ell))
    if "remark-x0" in ids:
        for w1, w2 in pairs:
            for k in range(deg + 1):
                reports.append(verify_remark_x0(chi, w1, w2, k))
    if "remark-w2-1" in ids:
        for w1 in range(1, grid.w_max + 1):
            for k in range(deg + 1):
                reports.append(verify_remark(chi, w1, k))
    series_d_max = grid.series_d_max if grid.series_d_max is not None else grid.d_max
    if "series-cross" in ids and chi.modulus <= series_d_max:
        for w1, w2 in pairs:
            for x0 in grid.points:
                for ell in range(deg + 1):
                    for against in ("thm2", "thm3"):
                        reports.append(verify_series_cross(chi, w1, w2, ell, x0, deg, against))
    return reports


def random_periodic_maps(count: int, d_max: int = 6, seed: int = 0) -> list[PeriodicMap]:
    """Seeded d-periodic rational tables with small entries (numerators in
    [-5, 5], denominators in [1, 4])."""
    rng = random.Random(seed)
    maps = []
    for j in range(count):
        d = rng.randint(1, d_max)
        values = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d)]
        maps.append(periodic_map(values, index=j))
    return maps


def _formal_grid(grid: SuiteGrid) -> SuiteGrid:
    """The part of ``grid`` that applies to arbitrary periodic maps."""
    return SuiteGrid(
        d_max=grid.d_max,
        w_max=grid.w_max,
        degree_max=grid.degree_max,
        ids=tuple(i for i in grid.ids if i in ("thm2", "thm3")),
        modes=grid.modes,
        points=grid.points,
    )


def _check_character(task):
    d, index, grid = task
    return _check_map(characters(d)[index], grid)


def _check_random_map(task):
    j, grid = task
    chi = random_periodic_maps(j + 1, grid.periodic_d_max, grid.seed)[j]
    return _check_map(chi, _formal_grid(grid))


def run_suite(grid: SuiteGrid, workers: int = 1) -> SuiteResult:
    """Verify every requested identity over the grid.

    Characters of every modulus in the grid are checked; random periodic
    maps (if requested) are checked against thm2 and thm3 only.  Reports
    come back sorted by instance key, so the result does not depend on
    ``workers``.
    """
    tasks = [(d, i, grid) for d in grid.moduli() for i in range(len(characters(d)))]
    reports: list[VerificationReport] = []
    if workers > 1:
        map_tasks = [(j, grid) for j in range(grid.periodic_maps)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_check_character, tasks):
                reports += part
            for part in pool.map(_check_random_map, map_tasks):
                reports += part
    else:
        for t in tasks:
            reports += _check_character(t)
        formal = _formal_grid(grid)
        for chi in random_periodic_maps(grid.periodic_maps, grid.periodic_d_max, grid.seed):
            reports += _check_map(chi, formal)
    reports.sort(key=lambda r: r.instance.key())
    return SuiteResult(reports)
