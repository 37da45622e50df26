"""Exception hierarchy shared by the library and the command-line front end."""

from __future__ import annotations


class LieJCDError(Exception):
    """Base class for all errors raised by :mod:`liejcd`."""


class ValidationError(LieJCDError, ValueError):
    """Malformed input: bad shapes, unparsable numbers, broken axioms."""


class LinearlyDependentBasis(ValidationError):
    pass


class NotClosed(LieJCDError):
    """The span of the given matrices is not closed under the commutator."""

    def __init__(self, pair: tuple[int, int], message: str | None = None):
        self.pair = pair
        super().__init__(message or f"bracket of basis pair {pair} leaves the span")


class NotInDerivedAlgebra(LieJCDError):
    """The element has no abstract Jordan-Chevalley decomposition.

    ``residue`` is the image of the element in ``g / [g, g]``, given in the
    non-pivot coordinates of the derived algebra; it is nonzero exactly when
    membership fails.
    """

    def __init__(self, element, residue, message: str | None = None):
        self.element = element
        self.residue = residue
        super().__init__(message or "element does not lie in the derived algebra [g, g]")


class NaturalRequiresMatrixMode(LieJCDError):
    pass


class InternalInvariantViolation(LieJCDError, AssertionError):
    """A step whose success is guaranteed in characteristic zero failed."""
