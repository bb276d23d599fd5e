"""Wire formats for exact values: rationals as "p/q" strings, cyclotomic
elements as {order, coeffs} records (or "m:[c0,c1,...]" in CSV cells)."""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import CycloElem, UniPoly, as_rational

__all__ = [
    "format_rational",
    "parse_rational",
    "cyclo_to_dict",
    "cyclo_from_dict",
    "to_jsonable",
    "to_cell",
]


def format_rational(q) -> str:
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Accepts "p/q" or an integer shorthand such as "5" or "-3"."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None


def cyclo_to_dict(z: CycloElem) -> dict:
    return {"order": z.order, "coeffs": [format_rational(c) for c in z.coeffs]}


def cyclo_from_dict(rec: dict) -> CycloElem:
    z = CycloElem(rec["order"], [parse_rational(c) for c in rec["coeffs"]])
    if z.dimension != len(rec["coeffs"]):
        raise ValueError(f"expected {z.dimension} coefficients for order {rec['order']}")
    return z


def to_jsonable(value):
    """Exact JSON form.  Plain ints (counts, indices, moduli) pass through;
    Fractions become "p/q" strings."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, CycloElem):
        return cyclo_to_dict(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, UniPoly):
        return [format_rational(c) if type(c) is int else to_jsonable(c) for c in value.coeffs]
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"no exact serialization for {type(value).__name__}")


def to_cell(value) -> str:
    """Single CSV cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, CycloElem):
        return f"{value.order}:[{','.join(format_rational(c) for c in value.coeffs)}]"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, str):
        return value
    if isinstance(value, (UniPoly, list, tuple)):
        return "[" + ";".join(to_cell(v) for v in value) + "]"
    raise TypeError(f"no exact serialization for {type(value).__name__}")
