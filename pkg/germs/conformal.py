"""
Linear conformal maps of the plane: normalizing a harmonic leading term onto ``f_k`` / ``g_k``, and the dihedral
stabilizer group of ``f_k``.

A :class:`LinearMap2` is either :attr:`Mode.EXACT` (rational entries, every check is an equality) or
:attr:`Mode.APPROX` (float entries, checked against ``settings.APPROX_TOLERANCE``). ``k``-th roots of rationals are
usually irrational, so :func:`normalize_leading` only returns an exact map when the principal root happens to be a
Gaussian rational.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple, Union

import numpy as np
from django.conf import settings
from numpy.polynomial import polynomial as npoly
from sympy import I, expand

from germs import linalg
from germs.exceptions import ApproxModeError, DegenerateLeadingTerm, InvalidDiffeoError, NonHarmonicLeadingTerm, \
    NotHomogeneousError
from germs.harmonic import HarmonicKind, harmonic_basis, harmonic_generator, laplacian
from germs.poly import DiffeoJet, Monomial, Poly, compose, homogeneous_monomials

log = logging.getLogger(__name__)

Number = Union[Fraction, float]
ApproxPoly = Dict[Monomial, float]


class Mode(Enum):
    EXACT = 'exact'
    APPROX = 'approx'


@dataclass(frozen=True)
class LinearMap2:
    """
    ``(x, y) -> (a*x + b*y, c*x + d*y)`` stored as ``entries = ((a, b), (c, d))``.

    :raises InvalidDiffeoError: the determinant is zero (exact) or below ``settings.DET_TOLERANCE`` (approx)
    """
    entries: Tuple[Tuple[Number, Number], Tuple[Number, Number]]
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        cast = Fraction if self.mode == Mode.EXACT else float
        (a, b), (c, d) = self.entries
        object.__setattr__(self, 'entries', ((cast(a), cast(b)), (cast(c), cast(d))))
        if self.mode == Mode.EXACT and self.det == 0:
            raise InvalidDiffeoError(f'Linear map {self.entries} is singular')
        if self.mode == Mode.APPROX and abs(self.det) <= settings.DET_TOLERANCE:
            raise InvalidDiffeoError(f'Linear map {self.entries} has |det| below {settings.DET_TOLERANCE}')

    @classmethod
    def identity(cls) -> 'LinearMap2':
        return cls(((1, 0), (0, 1)))

    @classmethod
    def reflection(cls) -> 'LinearMap2':
        """``(x, y) -> (x, -y)``"""
        return cls(((1, 0), (0, -1)))

    @classmethod
    def from_complex(cls, p: Number, q: Number, mode: Mode = Mode.EXACT) -> 'LinearMap2':
        """Multiplication by ``mu = p + iq``, i.e. ``(x, y) -> (p*x - q*y, q*x + p*y)``"""
        return cls(((p, -q), (q, p)), mode)

    @classmethod
    def rotation(cls, theta: float) -> 'LinearMap2':
        """
        Rotation by ``theta`` radians. Exact when ``theta`` is a multiple of ``pi/2`` (the only angles of this form
        with rational sine and cosine), approximate otherwise.
        """
        quarter = theta / (math.pi / 2)
        if abs(quarter - round(quarter)) < 1e-12:
            cos, sin = [(1, 0), (0, 1), (-1, 0), (0, -1)][round(quarter) % 4]
            return cls.from_complex(cos, sin)
        return cls.from_complex(math.cos(theta), math.sin(theta), Mode.APPROX)

    @property
    def is_exact(self) -> bool:
        return self.mode == Mode.EXACT

    @property
    def det(self) -> Number:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    @property
    def conformal_factor(self) -> Number:
        """``|det|``, which for a conformal map is the squared length scale"""
        return abs(self.det)

    @property
    def is_conformal(self) -> bool:
        """Columns orthogonal and of equal norm (exactly, or within ``settings.CONFORMAL_TOLERANCE`` relative)"""
        (a, b), (c, d) = self.entries
        dot, n1, n2 = a * b + c * d, a * a + c * c, b * b + d * d
        if self.is_exact:
            return dot == 0 and n1 == n2
        scale = max(n1, n2)
        tol = settings.CONFORMAL_TOLERANCE
        return abs(dot) <= tol * scale and abs(n1 - n2) <= tol * scale

    @property
    def is_identity(self) -> bool:
        return self.is_exact and self.entries == ((1, 0), (0, 1))

    def matmul(self, other: 'LinearMap2') -> 'LinearMap2':
        """Matrix product ``self @ other``, i.e. the map ``v -> self(other(v))``"""
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        mode = Mode.EXACT if self.is_exact and other.is_exact else Mode.APPROX
        return LinearMap2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), mode)

    def as_diffeo(self, jet_order: int = 1) -> DiffeoJet:
        """
        :raises ApproxModeError: exact polynomial composition needs rational entries
        """
        if not self.is_exact:
            raise ApproxModeError('An approximate linear map cannot be used as an exact DiffeoJet')
        (a, b), (c, d) = self.entries
        return DiffeoJet.linear(a, b, c, d, jet_order=jet_order)

    def to_dict(self) -> dict:
        return dict(mode=self.mode.value, entries=[list(row) for row in self.entries])


def compose_linear(p: Poly, L: LinearMap2) -> Poly:
    """Exact ``p o L``. Degrees are preserved, so no truncation is needed."""
    return compose(p, L.as_diffeo(max(1, int(p.degree)) if not p.is_zero else 1))


def approx_compose(p: Poly, L: LinearMap2) -> ApproxPoly:
    """
    Floating point ``p o L`` for any linear map, keyed by every monomial in the degrees ``p`` occupies.

    Each homogeneous component ``sum c_j x^(d-j) y^j`` is handled as ``x^d P(t)`` with ``t = y/x``; composing with
    ``L`` turns it into ``x^d sum c_j (a + b t)^(d-j) (c + d t)^j``, a univariate numpy polynomial product.
    """
    (a, b), (c, d) = [[float(v) for v in row] for row in L.entries]
    out = {}   # type: ApproxPoly
    degrees = sorted({m.degree for m in p.monomials()})
    for deg in degrees:
        acc = np.zeros(deg + 1)
        for j, cj in enumerate(p.vector(deg)):
            if cj == 0:
                continue
            term = npoly.polymul(npoly.polypow([a, b], deg - j), npoly.polypow([c, d], j))
            acc[:len(term)] += float(cj) * term
        for j, m in enumerate(homogeneous_monomials(deg)):
            out[m] = float(acc[j])
    return out


def approx_residual(p: Poly, L: LinearMap2, target: Poly) -> float:
    """Largest absolute coefficient of ``p o L - target``, computed in floating point"""
    composed = approx_compose(p, L)
    monomials = set(composed) | set(target.monomials())
    return max((abs(composed.get(m, 0.0) - float(target[m])) for m in monomials), default=0.0)


def check_leading(h: Poly, k: int) -> None:
    """
    :raises DegenerateLeadingTerm: ``h`` is zero
    :raises NotHomogeneousError:   ``h`` has a term whose degree isn't ``k`` (the first such monomial is reported)
    :raises NonHarmonicLeadingTerm: ``Δh != 0`` (``Δh`` is reported)
    """
    if h.is_zero:
        raise DegenerateLeadingTerm(f'Leading term of order {k} is zero')
    for m, _ in h.terms:
        if m.degree != k:
            raise NotHomogeneousError(f'Monomial {m} has degree {m.degree}, expected homogeneous of degree {k}')
    lap = laplacian(h)
    if not lap.is_zero:
        raise NonHarmonicLeadingTerm(f'Leading term {h} is not harmonic: Laplacian is {lap}')


def leading_as_complex(h: Poly, k: int) -> Tuple[Fraction, Fraction]:
    """The unique ``(a, b)`` with ``h = a*f_k + b*g_k``"""
    check_leading(h, k)
    columns = [g.vector(k) for g in harmonic_basis(k)]
    a, b = linalg.solve(linalg.transpose(columns), h.vector(k))
    return a, b


def _principal_root(wr: Fraction, wi: Fraction, k: int) -> complex:
    """
    :raises InvalidDiffeoError: ``wr + i*wi`` is outside the floating point range
    """
    try:
        return complex(wr, wi) ** (1 / k)
    except OverflowError:
        raise InvalidDiffeoError(f'Cannot take a root of {wr} + {wi}i: outside the floating point range')


def _exact_root(wr: Fraction, wi: Fraction, k: int) -> Union[Tuple[Fraction, Fraction], None]:
    """Principal ``k``-th root of ``wr + i*wi`` if it's a Gaussian rational, otherwise ``None``"""
    root = _principal_root(wr, wi, k)
    limit = settings.ROOT_DENOMINATOR_LIMIT
    p = Fraction(root.real).limit_denominator(limit)
    q = Fraction(root.imag).limit_denominator(limit)
    lhs = expand((linalg.to_rational(p) + I * linalg.to_rational(q)) ** k)
    if expand(lhs - (linalg.to_rational(wr) + I * linalg.to_rational(wi))) == 0:
        return p, q
    return None


def normalize_leading(h: Poly, k: int, target: HarmonicKind = HarmonicKind.F) -> LinearMap2:
    """
    A conformal ``L`` with ``h o L`` equal to the ``target`` generator of degree ``k``.

    Writing ``h = a*f_k + b*g_k = Re((a - ib) z^k)``, ``L`` is ``z -> mu*z`` where ``mu`` is the principal ``k``-th
    root of ``1/(a - ib)`` (target ``F``) or ``-i/(a - ib)`` (target ``G``). The result is :attr:`Mode.EXACT` when
    that root is a Gaussian rational, otherwise :attr:`Mode.APPROX` and checked coefficientwise against
    ``settings.APPROX_TOLERANCE``.
    """
    a, b = leading_as_complex(h, k)
    norm = a * a + b * b
    if target == HarmonicKind.F:
        wr, wi = a / norm, b / norm
    else:
        wr, wi = b / norm, -a / norm
    goal = harmonic_generator(k, target)

    exact = _exact_root(wr, wi, k)
    if exact is not None:
        L = LinearMap2.from_complex(*exact)
        if compose_linear(h, L) != goal:
            log.error('Exact root %s of (%s, %s) failed to normalize %s', exact, wr, wi, h)
            raise InvalidDiffeoError(f'Exact normalization of {h} did not reproduce {goal}')
        return L

    root = _principal_root(wr, wi, k)
    L = LinearMap2.from_complex(root.real, root.imag, Mode.APPROX)
    err = approx_residual(h, L, goal)
    log.debug('Approx normalization of %s onto %s: residual %.3e', h, goal, err)
    if err >= settings.APPROX_TOLERANCE:
        log.error('Approx normalization residual %.3e exceeds tolerance %s', err, settings.APPROX_TOLERANCE)
        raise InvalidDiffeoError(f'Approximate normalization of {h} has residual {err:.3e}')
    return L


@dataclass(frozen=True)
class StabilizerElement:
    """
    ``R^rotation_index`` (rotation by ``2*pi/k``), preceded by the reflection ``(x, y) -> (x, -y)`` when
    ``reflected`` - i.e. the matrix ``R^index @ S^reflected``.
    """
    k: int
    rotation_index: int = 0
    reflected: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'rotation_index', self.rotation_index % self.k)

    def matrix(self) -> LinearMap2:
        R = LinearMap2.rotation(2 * math.pi * self.rotation_index / self.k)
        return R.matmul(LinearMap2.reflection()) if self.reflected else R

    def __str__(self):
        return f'R^{self.rotation_index}' + (' S' if self.reflected else '')


def stabilizer_generators(k: int) -> List[LinearMap2]:
    """
    The rotation by ``2*pi/k`` and the reflection ``diag(1, -1)``. The rotation is only exact for k in
    ``{1, 2, 4}``.
    """
    if k < 1:
        raise ValueError(f'Stabilizers are defined for k >= 1, got {k}')
    return [StabilizerElement(k, 1).matrix(), LinearMap2.reflection()]


def stabilizer_elements(k: int) -> List[StabilizerElement]:
    """All ``2k`` elements of the dihedral stabilizer of ``f_k``"""
    return [StabilizerElement(k, i, r) for r in (False, True) for i in range(k)]


def maps_to(L: LinearMap2, p: Poly, q: Poly) -> bool:
    """``p o L == q``, exactly for exact maps, otherwise within ``settings.APPROX_TOLERANCE``"""
    if L.is_exact:
        return compose_linear(p, L) == q
    return approx_residual(p, L, q) < settings.APPROX_TOLERANCE


def fixes(L: LinearMap2, p: Poly) -> bool:
    return maps_to(L, p, p)
