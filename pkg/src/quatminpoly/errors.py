"""Exception types raised by quatminpoly."""


class QuatMinpolyError(Exception):
    """Base class for all library errors."""


class NotInFamily(QuatMinpolyError, ValueError):
    """The matrix does not satisfy the defining relation of the requested family."""


class RankDeficientFactorization(QuatMinpolyError, ValueError):
    """The H(x)H coefficient array of a supposed rotation is not rank one."""


class RankDecisionAmbiguous(QuatMinpolyError, ArithmeticError):
    """A Gram-matrix eigenvalue sits too close to the rank threshold to decide."""


class ScalarInput(QuatMinpolyError, ValueError):
    """The operation needs a non-scalar matrix."""


class SpectrumContainsMinusOne(QuatMinpolyError, ValueError):
    """The Cayley transform is undefined because -1 is an eigenvalue."""


class UnsupportedGrade(QuatMinpolyError, ValueError):
    """Cl(0,6) coefficients outside grades {1, 2, 5, 6} were supplied."""


class ZeroProduct(QuatMinpolyError, ValueError):
    """The octonion product vanished; one of the factors is (numerically) zero."""


class ConsistencyViolation(QuatMinpolyError, AssertionError):
    """An internal identity that must hold failed. Indicates a bug, not bad input."""
