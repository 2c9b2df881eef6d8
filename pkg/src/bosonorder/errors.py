"""Exception hierarchy shared by all bosonorder modules."""


class BosonOrderError(Exception):
    """Base class for every error raised by the package."""


class DegreeOverflow(BosonOrderError):
    """A monomial would exceed the configured total-degree cap."""


class DimensionError(BosonOrderError):
    """A truncation dimension is too small or inconsistent with the operator."""


class TruncationError(BosonOrderError):
    """A truncated series or vector discards more mass than allowed."""


class QuadratureOrderError(BosonOrderError):
    """The quadrature grid is too coarse for the requested integrand."""


class SymbolError(BosonOrderError):
    """A symbol does not satisfy a required structural property (e.g. reality)."""


class BudgetError(BosonOrderError):
    """A multimode construction would exceed the dense-dimension budget."""


class ParseError(BosonOrderError):
    """Malformed expression text.

    Attributes
    ----------
    position : int
        Zero-based character offset where the problem was detected.
    """

    def __init__(self, message, position, source=""):
        self.position = position
        self.source = source
        super().__init__(f"{message} at position {position}")

    def pointer(self):
        """Return the source line with a caret under the offending character."""
        return f"{self.source}\n{' ' * self.position}^"
