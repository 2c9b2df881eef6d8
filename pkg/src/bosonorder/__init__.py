"""Normal, anti-normal and dilation-based orderings of bosonic operators.

Exact symbolic algebra for the canonical commutation relations, the
complex-wave (Bargmann-type) representation on the Gaussian space, a
truncated Fock-space numerical backend and multimode fields.
"""

from .ccr import (
    ANTIWICK,
    WEYL,
    WICK,
    DisplacementForm,
    OperatorPoly,
    anti_wick_direct,
    anti_wick_multimode,
    anti_wick_via_dilation,
    canonicalize,
    commutator,
    dilate,
    normal_symbol,
    partial_vacuum_expectation,
    quantize_displacement,
    reorder_antinormal,
    wick_quantize,
)
from .errors import (
    BosonOrderError,
    BudgetError,
    DegreeOverflow,
    DimensionError,
    ParseError,
    QuadratureOrderError,
    SymbolError,
    TruncationError,
)
from .fock import FockMatrix, FockVector, eval_poly, exponential_vector
from .gaussian_rational import GaussianRational
from .parsing import parse_function, parse_operator
from .polyfunc import PolyFunction
from .quadrature import QuadratureGrid, gauss_hermite_grid

__version__ = "0.1.0"

__all__ = [
    "ANTIWICK",
    "WEYL",
    "WICK",
    "BosonOrderError",
    "BudgetError",
    "DegreeOverflow",
    "DimensionError",
    "DisplacementForm",
    "FockMatrix",
    "FockVector",
    "GaussianRational",
    "OperatorPoly",
    "ParseError",
    "PolyFunction",
    "QuadratureGrid",
    "QuadratureOrderError",
    "SymbolError",
    "TruncationError",
    "anti_wick_direct",
    "anti_wick_multimode",
    "anti_wick_via_dilation",
    "canonicalize",
    "commutator",
    "dilate",
    "eval_poly",
    "exponential_vector",
    "gauss_hermite_grid",
    "normal_symbol",
    "parse_function",
    "parse_operator",
    "partial_vacuum_expectation",
    "quantize_displacement",
    "reorder_antinormal",
    "wick_quantize",
]
