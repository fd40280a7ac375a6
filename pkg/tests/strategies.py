"""Hypothesis strategies and seeded generators for small exact polynomials."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from mfcoh.milnor import milnor_algebra, NON_ISOLATED
from mfcoh.poly import PolyRing, Polynomial

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=3)
small_ints = st.integers(min_value=-4, max_value=4)


def exponents(nvars: int, max_degree: int):
    return st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_degree
    ).map(tuple)


def polynomials(ring: PolyRing, max_degree: int = 3, max_terms: int = 4, coeffs=coefficients):
    return st.dictionaries(exponents(ring.nvars, max_degree), coeffs, max_size=max_terms).map(
        lambda d: Polynomial(ring, {e: Fraction(c) for e, c in d.items() if c})
    )


def nonzero_polynomials(ring: PolyRing, **kw):
    return polynomials(ring, **kw).filter(lambda p: not p.is_zero())


def rationals(bound: int = 6):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=4)


def random_polynomial(rng: random.Random, ring: PolyRing, max_degree: int, max_terms: int, constant=True):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0 if constant else 1, max_degree)
        e = [0] * ring.nvars
        for _ in range(d):
            e[rng.randrange(ring.nvars)] += 1
        c = rng.randint(-3, 3)
        if c:
            terms[tuple(e)] = Fraction(c)
    return Polynomial(ring, terms)


def random_isolated(rng: random.Random, ring: PolyRing, max_degree: int = 4, max_terms: int = 4):
    """A random polynomial with a finite Milnor algebra and at least one critical point."""
    while True:
        p = random_polynomial(rng, ring, max_degree, max_terms)
        if p.total_degree() < 2:
            continue
        alg = milnor_algebra(p)
        if alg != NON_ISOLATED and alg.mu_total > 0:
            return p, alg.mu_total
