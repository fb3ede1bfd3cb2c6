class GermError(Exception):
    """Base exception for all germ classification errors to inherit"""
    pass


class PolynomialSyntaxError(GermError):
    """
    Polynomial text does not conform to the grammar. ``offset`` is the byte offset (from 0) of the first
    character that could not be parsed.
    """
    def __init__(self, message: str, offset: int = 0):
        super().__init__(f'{message} (at offset {offset})')
        self.offset = offset


class NotHomogeneousError(GermError):
    """A polynomial expected to be homogeneous of a given degree has a term of another degree"""
    pass


class NonHarmonicLeadingTerm(GermError):
    """The leading term of a germ is not annihilated by the Laplacian"""
    pass


class DegenerateLeadingTerm(GermError):
    """The leading term is zero, or has a zero gradient, so it cannot drive a reduction"""
    pass


class InvalidDiffeoError(GermError):
    """Coordinate functions which don't fix the origin, or whose linear part is singular"""
    pass


class UnsupportedReduction(GermError):
    """The requested (order, target degree) pair or depth is outside of what the reduction engine supports"""
    pass


class ApproxModeError(GermError):
    """An approximate (floating point) linear map was passed to something which only accepts exact maps"""
    pass


class ReductionInvariantError(GermError):
    """
    Something which cannot happen has happened: the linear system was inconsistent, a reduction step disturbed
    lower degrees, or the composed germ disagrees with the linear model. Always a bug, never user error.
    """
    pass


class UnknownPlanError(GermError):
    """No verify plan is registered for the requested clause"""
    pass


class NotAGermError(GermError):
    """A polynomial with a non-zero constant term was used where a germ vanishing at the origin is required"""
    pass
