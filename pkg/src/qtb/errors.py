"""Exception types shared across the library."""


class QtbError(Exception):
    """Base class for all mathematical errors raised by this package."""


class MixedBackend(QtbError):
    """Operands belong to different coefficient-field backends."""


class RootUnavailable(QtbError):
    """A requested root does not exist within the configured extension bound."""


class DimensionMismatch(QtbError):
    """Vector or matrix dimensions do not match the ambient rank."""


class NotSublattice(QtbError):
    """The smaller lattice is not contained in the claimed ambient lattice."""


class NotCentral(QtbError):
    """Exponent vector does not lie in the center lattice."""


class NotInCenter(QtbError):
    """Character lattice is not contained in the center lattice."""


class ZeroValue(QtbError):
    """A character value or coefficient that must be nonzero is zero."""


class ZeroBinomial(QtbError):
    """A generator that must be a nonzero binomial is zero."""


class ZeroCoefficient(QtbError):
    """Monomial arithmetic received a zero coefficient."""


class UnsupportedScalar(QtbError):
    """Scalar lacks the discrete exponent data required by the operation."""


class NotCocycle(QtbError):
    """A multiplication table violates the 2-cocycle identity."""


class DimensionTooLarge(QtbError):
    """Finite-dimensional oracle input exceeds the configured bound."""


class BoundExceeded(QtbError):
    """An iterative certification failed to stabilize within its bound."""


class IncompatibleCocycle(QtbError):
    """No ambient cocycle realizes the requested commutation scalars."""


class ParseError(QtbError):
    """Session text failed to parse; carries a list of diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))
