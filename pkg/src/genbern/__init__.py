"""Exact generalized Bernoulli numbers attached to Dirichlet characters, and
machine verification of their symmetry identities."""

__version__ = "0.1.0"

from .algebra import CycloElem, Rational, UniPoly, cyclotomic_poly
from .bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    gen_bernoulli_number,
    gen_bernoulli_poly,
    gen_bernoulli_poly_at,
    power_sum,
)
from .dirichlet import DirichletChar, PeriodicMap, character, characters, conductor, parity, periodic_map

__all__ = [
    "CycloElem",
    "Rational",
    "UniPoly",
    "cyclotomic_poly",
    "bernoulli_number",
    "bernoulli_poly",
    "gen_bernoulli_number",
    "gen_bernoulli_poly",
    "gen_bernoulli_poly_at",
    "power_sum",
    "DirichletChar",
    "PeriodicMap",
    "character",
    "characters",
    "conductor",
    "parity",
    "periodic_map",
]
