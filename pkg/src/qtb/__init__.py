"""qtb: exact binomial-ideal computations in quantum tori and affine spaces."""

from .errors import (
    BoundExceeded, DimensionMismatch, DimensionTooLarge, IncompatibleCocycle,
    MixedBackend, NotCentral, NotCocycle, NotInCenter, NotSublattice,
    ParseError, QtbError, RootUnavailable, UnsupportedScalar, ZeroBinomial,
    ZeroCoefficient, ZeroValue,
)
from .scalars import (
    CharZeroBackend, FieldElem, GFBackend, GFElem, ToricScalar, normalize,
    nth_roots, root_of_unity,
)

__version__ = "0.1.0"
