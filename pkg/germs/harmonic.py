"""
The harmonic generators ``f_k = Re (x+iy)^k`` and ``g_k = Im (x+iy)^k``, the Laplacian calculus over
:class:`.Poly`, and seeded random sampling of homogeneous and polyharmonic polynomials.

Random sampling always goes through a :class:`numpy.random.Generator` backed by the ``PCG64`` bit generator, seeded
from :attr:`.SampleSpec.seed` - so the same seed reproduces the same polynomial on any machine with the same numpy
release. :func:`prng_info` returns the algorithm name and numpy version, which reports echo back to the user.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, List, Optional

import numpy as np

from germs import linalg
from germs.poly import Monomial, Poly, homogeneous_monomials

log = logging.getLogger(__name__)

PRNG_ALGORITHM = 'PCG64'


class HarmonicKind(Enum):
    """``F`` selects the real part of ``(x+iy)^k``, ``G`` the imaginary part"""
    F = 'F'
    G = 'G'


@dataclass(frozen=True)
class SampleSpec:
    """
    What to draw: a homogeneous polynomial of ``degree``, optionally annihilated by ``Δ^harmonicity``, with
    integer coefficients (or integer kernel weights) in ``[-coefficient_bound, coefficient_bound]``.
    """
    degree: int
    harmonicity: Optional[int] = None
    seed: int = 0
    coefficient_bound: int = 9

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f'SampleSpec degree must be positive, got {self.degree}')
        if self.harmonicity is not None and self.harmonicity < 1:
            raise ValueError(f'SampleSpec harmonicity must be a positive integer, got {self.harmonicity}')
        if self.coefficient_bound < 1:
            raise ValueError(f'SampleSpec coefficient_bound must be positive, got {self.coefficient_bound}')


def prng_info() -> Dict[str, str]:
    return dict(algorithm=PRNG_ALGORITHM, numpy=np.__version__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@lru_cache(maxsize=None)
def harmonic_generator(k: int, kind: HarmonicKind) -> Poly:
    """
    Binomial expansion of ``Re (x+iy)^k`` (``kind=F``) or ``Im (x+iy)^k`` (``kind=G``).

        >>> str(harmonic_generator(5, HarmonicKind.F))
        'x^5 - 10*x^3*y^2 + 5*x*y^4'

    """
    if k < 1:
        raise ValueError(f'Harmonic generators are defined for k >= 1, got {k}')
    terms = {}
    parity = 0 if kind == HarmonicKind.F else 1
    for j in range(parity, k + 1, 2):
        # i^j is +-1 for even j (F) and +-i for odd j (G)
        sign = -1 if (j // 2) % 2 else 1
        terms[Monomial(k - j, j)] = sign * math.comb(k, j)
    return Poly(terms)


def harmonic_basis(k: int) -> List[Poly]:
    """``[f_k, g_k]``"""
    return [harmonic_generator(k, HarmonicKind.F), harmonic_generator(k, HarmonicKind.G)]


def derivative(p: Poly, a: int = 0, b: int = 0) -> Poly:
    """``∂x^a ∂y^b p``"""
    terms = {}
    for m, c in p.terms:
        if m.ex < a or m.ey < b:
            continue
        factor = math.perm(m.ex, a) * math.perm(m.ey, b)
        terms[Monomial(m.ex - a, m.ey - b)] = c * factor
    return Poly(terms)


def partial_x(p: Poly) -> Poly:
    return derivative(p, 1, 0)


def partial_y(p: Poly) -> Poly:
    return derivative(p, 0, 1)


def laplacian(p: Poly) -> Poly:
    return derivative(p, 2, 0) + derivative(p, 0, 2)


def laplacian_power(p: Poly, l: int) -> Poly:
    if l < 0:
        raise ValueError(f'Laplacian power must be non-negative, got {l}')
    for _ in range(l):
        if p.is_zero:
            break
        p = laplacian(p)
    return p


def is_l_harmonic(p: Poly, l: int) -> bool:
    """``True`` when ``Δ^l p = 0``. Only positive ``l`` makes sense here."""
    if l < 1:
        raise ValueError(f'l-harmonicity is defined for positive l, got {l}')
    return laplacian_power(p, l).is_zero


def laplacian_matrix(d: int, l: int) -> List[List[Fraction]]:
    """
    Matrix of ``Δ^l`` from the degree ``d`` coefficient space to the degree ``d - 2l`` one, both against
    :func:`.homogeneous_monomials`. Has no rows when ``d < 2l``.
    """
    target = d - 2 * l
    if target < 0:
        return []
    cols = [laplacian_power(Poly.monomial(m.ex, m.ey), l).vector(target) for m in homogeneous_monomials(d)]
    return linalg.transpose(cols)


@lru_cache(maxsize=None)
def _kernel_vectors(d: int, l: int):
    return tuple(tuple(v) for v in linalg.nullspace(laplacian_matrix(d, l), d + 1))


def laplacian_kernel(d: int, l: int) -> List[Poly]:
    """Exact basis of the degree ``d`` homogeneous polynomials annihilated by ``Δ^l``"""
    return [Poly.from_vector(v, d) for v in _kernel_vectors(d, l)]


def _integer_scaled(v) -> List[int]:
    lcm = reduce(math.lcm, (Fraction(c).denominator for c in v), 1)
    ints = [int(Fraction(c) * lcm) for c in v]
    g = reduce(math.gcd, ints, 0) or 1
    return [i // g for i in ints]


def sample_homogeneous(spec: SampleSpec, rng: np.random.Generator = None) -> Poly:
    """
    A random non-zero homogeneous polynomial of degree ``spec.degree`` with integer coefficients in
    ``[-B, B]``. Pass ``rng`` to continue drawing from an existing generator instead of ``spec.seed``.
    """
    rng = make_rng(spec.seed) if rng is None else rng
    bound = spec.coefficient_bound
    while True:
        coeffs = rng.integers(-bound, bound, size=spec.degree + 1, endpoint=True)
        p = Poly.from_vector([int(c) for c in coeffs], spec.degree)
        if not p.is_zero:
            return p


def sample_l_harmonic(spec: SampleSpec, rng: np.random.Generator = None) -> Poly:
    """
    A random non-zero homogeneous polynomial of degree ``spec.degree`` annihilated by ``Δ^spec.harmonicity``.

    Takes a seeded integer combination (weights in ``[-B, B]``) of the exact kernel basis of ``Δ^l``, each basis
    vector first scaled to coprime integers.
    """
    if spec.harmonicity is None:
        raise ValueError('sample_l_harmonic needs SampleSpec.harmonicity to be set')
    rng = make_rng(spec.seed) if rng is None else rng
    d, l, bound = spec.degree, spec.harmonicity, spec.coefficient_bound
    if d < 2 * l - 1:
        log.debug('Every degree %d polynomial is %d-harmonic, sampling the whole space', d, l)
    basis = [_integer_scaled(v) for v in _kernel_vectors(d, l)]
    while True:
        weights = [int(w) for w in rng.integers(-bound, bound, size=len(basis), endpoint=True)]
        coeffs = [sum(w * v[i] for w, v in zip(weights, basis)) for i in range(d + 1)]
        p = Poly.from_vector(coeffs, d)
        if not p.is_zero:
            return p
