"""Seeded random inputs shared by the test suites. Every generator is PCG64, so a failing case can be replayed."""
from fractions import Fraction

import numpy as np

from germs.harmonic import make_rng
from germs.poly import Monomial, Poly


def random_poly(rng: np.random.Generator, max_degree: int = 4, terms: int = 4, bound: int = 5,
                min_degree: int = 0, rational: bool = False) -> Poly:
    """A random polynomial with up to ``terms`` terms of degree ``min_degree`` to ``max_degree``"""
    out = {}
    for _ in range(terms):
        d = int(rng.integers(min_degree, max_degree, endpoint=True))
        j = int(rng.integers(0, d, endpoint=True))
        c = Fraction(int(rng.integers(-bound, bound, endpoint=True)))
        if rational:
            c /= int(rng.integers(1, bound, endpoint=True))
        out[Monomial(d - j, j)] = c
    return Poly(out)


def seeded(seed: int = 42) -> np.random.Generator:
    return make_rng(seed)
