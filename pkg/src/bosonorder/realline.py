"""Real-line Gaussian representation and its two-axis tensor product.

On ``L^2(R, gamma)`` with the standard normal weight the ladder operators are
``a = d/dx`` and ``a* = x - d/dx``; the vacuum is the constant 1. Coefficients
are sympy numbers so identities involving ``sqrt(2)`` are checked exactly.

The complex plane is split into quadratures through ``z = (x + i y)/sqrt(2)``;
:func:`quadrature_decomposition_check` confirms that the complex-wave operators
equal the corresponding combinations of the per-axis operators.
"""

from dataclasses import dataclass, field

import sympy

from .complexwave import apply_op
from .polyfunc import PolyFunction

SQRT2 = sympy.sqrt(2)
I = sympy.I


def _clean(d):
    out = {}
    for k, v in d.items():
        v = sympy.expand(v)
        if v != 0:
            out[k] = v
    return out


class RealPoly:
    """Polynomial ``sum_n c_n x^n`` with exact sympy coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _clean({int(n): sympy.sympify(c) for n, c in (coeffs or {}).items()})

    @classmethod
    def constant(cls, c=1):
        return cls({0: c})

    @classmethod
    def x(cls):
        return cls({1: 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return RealPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return RealPoly({n: v * c for n, v in self.coeffs.items()})

    def derivative(self):
        return RealPoly({n - 1: n * c for n, c in self.coeffs.items() if n})

    def times_x(self):
        return RealPoly({n + 1: c for n, c in self.coeffs.items()})

    def degree(self):
        return max(self.coeffs, default=0)

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        return sum(complex(c) * x**n for n, c in self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, RealPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        x = sympy.Symbol("x")
        return f"RealPoly({sympy.expand(sum(c * x**n for n, c in self.coeffs.items()))})"


def realline_apply(which, f):
    """Apply ``a``, ``a*``, ``q`` or ``p`` to a real-line polynomial.

    ``q = x/sqrt(2)`` and ``p = -i (sqrt(2) d/dx - x/sqrt(2))``.
    """
    if which == "a":
        return f.derivative()
    if which in ("a*", "adag"):
        return f.times_x() - f.derivative()
    if which == "q":
        return f.times_x().scale(1 / SQRT2)
    if which == "p":
        return (f.derivative().scale(SQRT2) - f.times_x().scale(1 / SQRT2)).scale(-I)
    if which == "N":
        return realline_apply("a*", realline_apply("a", f))
    raise ValueError(f"unknown real-line operator {which!r}")


def hermite_basis(n):
    """Normalised ``(a*)^n 1 / sqrt(n!)``: the n-th number eigenvector.

    >>> hermite_basis(2)
    RealPoly(sqrt(2)*x**2/2 - sqrt(2)/2)
    """
    f = RealPoly.constant(1)
    for _ in range(n):
        f = realline_apply("a*", f)
    return f.scale(1 / sympy.sqrt(sympy.factorial(n)))


# two real axes ------------------------------------------------------------------


class TensorPoly:
    """Polynomial ``sum c_{mn} x^m y^n`` on the product of two real lines."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _clean({(int(m), int(n)): sympy.sympify(c) for (m, n), c in (coeffs or {}).items()})

    @classmethod
    def from_function(cls, f):
        """Rewrite ``f(z*, z)`` with ``z = (x + i y)/sqrt(2)``."""
        x, y = sympy.symbols("x y")
        z = (x + I * y) / SQRT2
        zbar = (x - I * y) / SQRT2
        expr = sum(sympy.sympify(c) * zbar**j * z**k for ((j, k),), c in f.items())
        expr = sympy.expand(expr)
        if expr == 0:
            return cls({})
        return cls(sympy.Poly(expr, x, y).as_dict())

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TensorPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorPoly({k: v * c for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def apply(self, which, axis):
        """Apply a real-line operator on the ``x`` (axis 0) or ``y`` (axis 1) factor."""
        out = TensorPoly({})
        for (m, n), c in self.coeffs.items():
            if axis == 0:
                r = realline_apply(which, RealPoly({m: c}))
                out = out + TensorPoly({(p, n): v for p, v in r.coeffs.items()})
            else:
                r = realline_apply(which, RealPoly({n: c}))
                out = out + TensorPoly({(m, p): v for p, v in r.coeffs.items()})
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (self - other).is_zero()


def _combo(terms):
    """Build ``F -> sum coeff * op_axis F`` from ``[(coeff, op, axis), ...]``."""

    def act(F):
        out = TensorPoly({})
        for coeff, op, axis in terms:
            out = out + F.apply(op, axis).scale(coeff)
        return out

    return act


_h = 1 / SQRT2

TENSOR_REALIZATIONS = {
    "A": _combo([(_h, "a", 0), (I * _h, "a", 1)]),
    "A*": _combo([(_h, "a*", 0), (-I * _h, "a*", 1)]),
    "B": _combo([(_h, "a", 0), (-I * _h, "a", 1)]),
    "B*": _combo([(_h, "a*", 0), (I * _h, "a*", 1)]),
    "C": _combo([(1, "q", 0), (I, "q", 1)]),
    "C*": _combo([(1, "q", 0), (-I, "q", 1)]),
}

# quadratures of A and B in the per-axis q/p operators
QUADRATURE_SPLITTINGS = {
    "X_A": (("A", "A*", _h, _h), _combo([(_h, "q", 0), (-_h, "p", 1)])),
    "Y_A": (("A", "A*", _h / I, -_h / I), _combo([(_h, "p", 0), (_h, "q", 1)])),
    "X_B": (("B", "B*", _h, _h), _combo([(_h, "q", 0), (_h, "p", 1)])),
    "Y_B": (("B", "B*", _h / I, -_h / I), _combo([(_h, "p", 0), (-_h, "q", 1)])),
}


@dataclass
class DecompositionReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


def _monomials(max_degree):
    for d in range(max_degree + 1):
        for j in range(d + 1):
            yield PolyFunction({(j, d - j): 1}, 1)


def quadrature_decomposition_check(max_degree=6):
    """Compare complex-wave operators with their two-axis realizations.

    Every monomial ``(z*)^j z^k`` with ``j + k <= max_degree`` is pushed through
    both paths; results must agree exactly.
    """
    report = DecompositionReport()
    for f in _monomials(max_degree):
        F = TensorPoly.from_function(f)
        for name, realization in TENSOR_REALIZATIONS.items():
            direct = TensorPoly.from_function(apply_op(name, f))
            report.checked += 1
            if not direct == realization(F):
                report.failures.append((name, f.to_text()))
        for name, ((p, q, cp, cq), realization) in QUADRATURE_SPLITTINGS.items():
            lhs = TensorPoly.from_function(apply_op(p, f)).scale(cp) + TensorPoly.from_function(
                apply_op(q, f)
            ).scale(cq)
            report.checked += 1
            if not lhs == realization(F):
                report.failures.append((name, f.to_text()))
    return report
