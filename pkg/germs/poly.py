"""
Exact sparse bivariate polynomials over the rationals, their jets, and truncated composition with polynomial
coordinate changes.

Every germ, jet, derivative and coordinate function in this project is a :class:`Poly` - a finite map from
:class:`Monomial` to :class:`fractions.Fraction`. Values are immutable once built, so they can be freely shared,
hashed (e.g. as ``lru_cache`` keys) and sent between processes.

Basic usage:

    >>> x, y = Poly.x(), Poly.y()
    >>> f5 = x**5 - 10 * x**3 * y**2 + 5 * x * y**4
    >>> order(f5)
    5
    >>> phi = DiffeoJet.perturbation(y, Poly.zero(), jet_order=2)
    >>> str(compose_truncated(x**2, phi, 2).body)
    'x^2 + 2*x*y + y^2'

"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple, Union

from germs.exceptions import InvalidDiffeoError, NotAGermError

log = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]

INFINITY = math.inf
"""Order of the zero polynomial. A float sentinel, so it can never be confused with a real integer degree."""


class Monomial(NamedTuple):
    """``x^ex * y^ey``. Sorted by :meth:`.sort_key` (degree ascending, then ``ex`` descending)."""
    ex: int
    ey: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey

    def sort_key(self) -> Tuple[int, int]:
        return self.degree, -self.ex

    def times(self, other: 'Monomial') -> 'Monomial':
        return Monomial(self.ex + other.ex, self.ey + other.ey)

    def __str__(self):
        from germs.grammar import format_monomial
        return format_monomial(self)


def homogeneous_monomials(d: int) -> List[Monomial]:
    """All monomials of total degree ``d`` in canonical order: ``x^d, x^(d-1)*y, ..., y^d``"""
    return [Monomial(d - j, j) for j in range(d + 1)]


class Poly:
    """
    An immutable sparse polynomial in ``x`` and ``y`` with exact rational coefficients.

    Zero coefficients are never stored, so two polynomials are equal exactly when their term maps are equal.

    Construct from a mapping or iterable of ``(monomial, coefficient)`` pairs (duplicate monomials are summed),
    or use the helpers :meth:`.x`, :meth:`.y`, :meth:`.constant` and :meth:`.monomial`.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[Tuple[int, int], Scalar]]] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc = {}   # type: Dict[Monomial, Fraction]
        for m, c in items:
            m = m if isinstance(m, Monomial) else Monomial(*m)
            if m.ex < 0 or m.ey < 0:
                raise ValueError(f'Negative exponent in monomial {tuple(m)}')
            acc[m] = acc.get(m, 0) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash = None

    # --- constructors ---

    @classmethod
    def zero(cls) -> 'Poly':
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> 'Poly':
        return cls({Monomial(0, 0): c})

    @classmethod
    def monomial(cls, ex: int, ey: int, c: Scalar = 1) -> 'Poly':
        return cls({Monomial(ex, ey): c})

    @classmethod
    def x(cls) -> 'Poly':
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> 'Poly':
        return cls.monomial(0, 1)

    @classmethod
    def from_vector(cls, coefficients: Iterable[Scalar], d: int) -> 'Poly':
        """Inverse of :meth:`.vector` - coefficients listed against :func:`homogeneous_monomials` ``(d)``"""
        return cls(zip(homogeneous_monomials(d), coefficients))

    # --- inspection ---

    @property
    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """``(monomial, coefficient)`` pairs in canonical monomial order"""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms]

    def coefficient(self, ex: int, ey: int) -> Fraction:
        return self._terms.get(Monomial(ex, ey), Fraction(0))

    def __getitem__(self, m: Tuple[int, int]) -> Fraction:
        return self._terms.get(Monomial(*m), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> Union[int, float]:
        """Highest total degree of a term (``-inf`` for the zero polynomial)"""
        return max((m.degree for m in self._terms), default=-INFINITY)

    @property
    def order(self) -> Union[int, float]:
        """Lowest total degree of a term (:data:`INFINITY` for the zero polynomial)"""
        return min((m.degree for m in self._terms), default=INFINITY)

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def is_homogeneous(self, d: int = None) -> bool:
        degrees = {m.degree for m in self._terms}
        if not degrees:
            return True
        return len(degrees) == 1 and (d is None or degrees == {d})

    def homogeneous_component(self, d: int) -> 'Poly':
        return Poly({m: c for m, c in self._terms.items() if m.degree == d})

    def truncate(self, k: int) -> 'Poly':
        """Drop every term of degree above ``k``"""
        return Poly({m: c for m, c in self._terms.items() if m.degree <= k})

    def vector(self, d: int) -> List[Fraction]:
        """Coefficients of the degree ``d`` component against :func:`homogeneous_monomials` ``(d)``"""
        return [self._terms.get(m, Fraction(0)) for m in homogeneous_monomials(d)]

    # --- arithmetic ---

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> 'Poly':
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        raise TypeError(f'Cannot combine Poly with {type(other).__name__}')

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul_truncated(self, self._coerce(other), None)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError('Poly powers must be non-negative integers')
        out = Poly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Scalar) -> 'Poly':
        c = Fraction(c)
        return Poly({m: c * v for m, v in self._terms.items()})

    def __str__(self):
        from germs.grammar import format_poly
        return format_poly(self)

    def __repr__(self):
        return f'<Poly {self}>'


def mul_truncated(p: Poly, q: Poly, k: Union[int, None]) -> Poly:
    """
    Product ``p * q`` with every term of degree above ``k`` discarded as it is produced
    (``k=None`` keeps everything). Degree is additive, so dropping early never changes the kept terms.
    """
    out = {}   # type: Dict[Monomial, Fraction]
    for m1, c1 in p._terms.items():
        if k is not None and m1.degree > k:
            continue
        for m2, c2 in q._terms.items():
            m = m1.times(m2)
            if k is not None and m.degree > k:
                continue
            out[m] = out.get(m, 0) + c1 * c2
    return Poly(out)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(c: Scalar, p: Poly) -> Poly:
    return p.scale(c)


def order(p: Poly) -> Union[int, float]:
    """Minimum total degree of a non-zero term, or :data:`INFINITY` for the zero polynomial"""
    return p.order


def homogeneous_component(p: Poly, d: int) -> Poly:
    return p.homogeneous_component(d)


@dataclass(frozen=True)
class GermJet:
    """
    A polynomial truncated at a declared jet order ``k`` - the ``k``-jet of a germ at the origin.

    :raises ValueError:    ``body`` has a term above ``jet_order``, or ``jet_order`` < 1
    :raises NotAGermError: ``body`` has a non-zero constant term
    """
    body: Poly
    jet_order: int

    def __post_init__(self):
        if self.jet_order < 1:
            raise ValueError(f'jet_order must be positive, got {self.jet_order}')
        if self.body.degree > self.jet_order:
            raise ValueError(f'Jet body has degree {self.body.degree} above jet_order {self.jet_order}')
        if self.body.constant_term != 0:
            raise NotAGermError(f'Germ must vanish at the origin (constant term {self.body.constant_term})')

    @cached_property
    def order(self) -> Union[int, float]:
        return self.body.order

    def __str__(self):
        return f'j^{self.jet_order}: {self.body}'


def truncate_jet(p: Poly, k: int) -> GermJet:
    return GermJet(p.truncate(k), k)


def jet_equal(p: Poly, q: Poly, k: int) -> bool:
    """``True`` when ``p`` and ``q`` have the same ``k``-jet"""
    return p.truncate(k) == q.truncate(k)


@dataclass(frozen=True)
class DiffeoJet:
    """
    A polynomial diffeomorphism-germ ``(x, y) -> (px(x, y), py(x, y))`` fixing the origin.

    Both coordinate functions must have no constant term, and the linear part must be invertible.
    """
    px: Poly
    py: Poly
    jet_order: int

    def __post_init__(self):
        if self.px.constant_term != 0 or self.py.constant_term != 0:
            raise InvalidDiffeoError('Coordinate functions must fix the origin (non-zero constant term found)')
        (a, b), (c, d) = self.linear_part()
        if a * d - b * c == 0:
            raise InvalidDiffeoError(f'Linear part ({a}, {b}; {c}, {d}) is singular')
        if max(self.px.degree, self.py.degree) > self.jet_order:
            raise InvalidDiffeoError(f'Coordinate functions exceed the declared jet_order {self.jet_order}')

    @classmethod
    def identity(cls, jet_order: int = 1) -> 'DiffeoJet':
        return cls(Poly.x(), Poly.y(), jet_order)

    @classmethod
    def perturbation(cls, p: Poly, q: Poly, jet_order: int) -> 'DiffeoJet':
        """``id + (p, q)``"""
        return cls(Poly.x() + p, Poly.y() + q, jet_order)

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, c: Scalar, d: Scalar, jet_order: int = 1) -> 'DiffeoJet':
        """``(x, y) -> (a*x + b*y, c*x + d*y)``"""
        x, y = Poly.x(), Poly.y()
        return cls(x * a + y * b, x * c + y * d, jet_order)

    def linear_part(self) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
        return (
            (self.px.coefficient(1, 0), self.px.coefficient(0, 1)),
            (self.py.coefficient(1, 0), self.py.coefficient(0, 1)),
        )

    @property
    def is_identity_tangent(self) -> bool:
        return self.linear_part() == ((1, 0), (0, 1))

    def compose(self, other: 'DiffeoJet', k: int) -> 'DiffeoJet':
        """The ``k``-jet of ``self o other``, i.e. ``(x, y) -> self(other(x, y))``"""
        return DiffeoJet(
            compose_truncated(self.px, other, k).body,
            compose_truncated(self.py, other, k).body,
            k,
        )


def _powers(base: Poly, n: int, k: Union[int, None]) -> List[Poly]:
    out = [Poly.constant(1)]
    for _ in range(n):
        out.append(mul_truncated(out[-1], base, k))
    return out


def compose(p: Poly, phi: DiffeoJet, k: int = None) -> Poly:
    """
    ``p(phi.px, phi.py)``, truncated at degree ``k`` unless ``k`` is None.

    Both coordinate functions have order >= 1, so a monomial of degree above ``k`` can only produce terms above
    ``k`` and is skipped outright; every intermediate product is truncated at ``k``.

    :raises InvalidDiffeoError: ``phi`` is not a :class:`DiffeoJet`
    """
    if not isinstance(phi, DiffeoJet):
        raise InvalidDiffeoError(f'Expected a DiffeoJet, got {type(phi).__name__}')
    kept = [(m, c) for m, c in p.terms if k is None or m.degree <= k]
    if not kept:
        return Poly.zero()
    xs = _powers(phi.px, max(m.ex for m, _ in kept), k)
    ys = _powers(phi.py, max(m.ey for m, _ in kept), k)
    out = Poly.zero()
    for m, c in kept:
        out = out + mul_truncated(xs[m.ex], ys[m.ey], k).scale(c)
    return out


def compose_truncated(p: Poly, phi: DiffeoJet, k: int) -> GermJet:
    """The ``k``-jet of ``p(phi.px, phi.py)``, as a :class:`GermJet`"""
    return GermJet(compose(p, phi, k), k)
