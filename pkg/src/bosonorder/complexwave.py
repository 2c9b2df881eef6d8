"""Polynomial functions on the complex plane with the Gaussian inner product.

Functions are :class:`~bosonorder.polyfunc.PolyFunction` values in one
variable (aliased here as :data:`BivariatePoly`): the key ``(j, k)`` is the
power of ``z*`` and ``z``. On this space the two commuting boson pairs act as
differential operators

======  ===========================
``A``   ``d/dz*``
``A*``  ``z* - d/dz``
``B``   ``d/dz``
``B*``  ``z - d/dz*``
======  ===========================

and ``C = A + B*`` is multiplication by ``z``.
"""

import cmath
from dataclasses import dataclass, field
from math import comb, factorial, sqrt

import numpy as np

from .errors import QuadratureOrderError
from .gaussian_rational import GaussianRational
from .polyfunc import PolyFunction
from .quadrature import exact_moment

BivariatePoly = PolyFunction

OPERATORS = ("A", "A*", "B", "B*", "C", "C*")


def gaussian_moment(n, m):
    """Exact ``int (z*)^n z^m P[dz]``.

    >>> gaussian_moment(3, 3), gaussian_moment(2, 1)
    (6, 0)
    """
    return exact_moment(n, m)


def inner_product(f, g):
    """``<f|g> = int conj(f) g dP``, evaluated term by term from the moments.

    Exact whenever the coefficients are exact.
    """
    total = 0
    for ((j1, k1),), c1 in f.items():
        cc = c1.conjugate()
        for ((j2, k2),), c2 in g.items():
            # conj((z*)^j1 z^k1) = z^j1 (z*)^k1
            n = k1 + j2
            m = j1 + k2
            if n == m:
                total = total + cc * c2 * factorial(n)
    if isinstance(total, int):
        return GaussianRational(total)
    return total


def project_antiholomorphic(f):
    """Orthogonal projection onto polynomials in ``z*`` alone.

    ``(z*)^n z^m -> n!/(n-m)! (z*)^(n-m)`` for ``n >= m`` and 0 otherwise.
    """
    out = {}
    for ((n, m),), c in f.items():
        if n >= m:
            key = (n - m, 0)
            w = factorial(n) // factorial(n - m)
            out[key] = out[key] + c * w if key in out else c * w
    return PolyFunction(out, 1)


def _shift(f, dj, dk, weight):
    out = {}
    for ((j, k),), c in f.items():
        w = weight(j, k)
        if w == 0:
            continue
        key = (j + dj, k + dk)
        out[key] = out[key] + c * w if key in out else c * w
    return PolyFunction(out, 1)


def d_dzbar(f):
    return _shift(f, -1, 0, lambda j, k: j)


def d_dz(f):
    return _shift(f, 0, -1, lambda j, k: k)


def times_zbar(f):
    return _shift(f, 1, 0, lambda j, k: 1)


def times_z(f):
    return _shift(f, 0, 1, lambda j, k: 1)


def apply_op(which, f):
    """Apply one of ``A, A*, B, B*, C, C*`` to a polynomial."""
    if which == "A":
        return d_dzbar(f)
    if which == "A*":
        return times_zbar(f) - d_dz(f)
    if which == "B":
        return d_dz(f)
    if which == "B*":
        return times_z(f) - d_dzbar(f)
    if which == "C":
        return apply_op("A", f) + apply_op("B*", f)
    if which == "C*":
        return apply_op("A*", f) + apply_op("B", f)
    raise ValueError(f"unknown operator {which!r}; expected one of {OPERATORS}")


def apply_word(word, f):
    """Apply operators right to left, as in the product ``word[0] word[1] ... f``."""
    for op in reversed(word):
        f = apply_op(op, f)
    return f


def apply_commutator(x, y, f):
    return apply_op(x, apply_op(y, f)) - apply_op(y, apply_op(x, f))


_EXPECTED_COMMUTATORS = {
    ("A", "A*"): 1,
    ("B", "B*"): 1,
    ("A", "B"): 0,
    ("A", "B*"): 0,
    ("A*", "B"): 0,
    ("A*", "B*"): 0,
    ("C", "C*"): 0,
}


@dataclass
class CCRReport:
    """Outcome of :func:`ccr_check`; every entry is an exact comparison."""

    commutators: dict = field(default_factory=dict)
    adjointness: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.commutators.values()) and all(l == r for l, r in self.adjointness.values())


def ccr_check(f, g=None, pairs=None):
    """Check the commutation relations on ``f`` and adjointness against ``g``.

    For every pair ``(X, Y)`` the residual ``[X, Y] f - c f`` must vanish
    exactly, with ``c`` the expected commutator constant. If ``g`` is given,
    ``<X f|g> == <f|X* g>`` is evaluated for ``X`` in ``A, B`` (both sides are
    stored so callers can inspect them).
    """
    report = CCRReport()
    for pair in pairs or _EXPECTED_COMMUTATORS:
        expected = _EXPECTED_COMMUTATORS[pair]
        residual = apply_commutator(pair[0], pair[1], f) - f * expected
        report.commutators[pair] = residual.is_zero()
    if g is not None:
        for x, xstar in (("A", "A*"), ("B", "B*")):
            lhs = inner_product(apply_op(x, f), g)
            rhs = inner_product(f, apply_op(xstar, g))
            report.adjointness[x] = (lhs, rhs)
    return report


# reproducing kernel -------------------------------------------------------------

DEFAULT_TRUNCATION = 40


def kernel_eval(alpha, beta):
    """``K(alpha*, beta) = exp(conj(alpha) beta)``."""
    return cmath.exp(complex(alpha).conjugate() * complex(beta))


def _exact_scalar(x):
    return isinstance(x, (int, GaussianRational)) or hasattr(x, "denominator")


def representer(beta, order=DEFAULT_TRUNCATION):
    """Truncated kernel section ``sum_{n<=order} beta^n (z*)^n / n!``.

    Exact coefficients when ``beta`` is an int, Fraction or GaussianRational.
    """
    b = GaussianRational.coerce(beta) if _exact_scalar(beta) else complex(beta)
    terms = {}
    power = GaussianRational(1) if isinstance(b, GaussianRational) else 1.0 + 0j
    for n in range(order + 1):
        if n:
            power = power * b
        terms[(n, 0)] = power / factorial(n)
    return PolyFunction(terms, 1)


def conjugate_representer(beta, order=DEFAULT_TRUNCATION):
    """Section of the conjugate kernel: ``sum (conj(beta) z)^n / n!`` (holomorphic)."""
    return representer(beta, order).conjugate()


# Bargmann-Segal map -------------------------------------------------------------


def bargmann_map(state, exact=None):
    """Send Fock coefficients ``<n|psi>`` to ``sum_n <n|psi> (z*)^n / sqrt(n!)``.

    Parameters
    ----------
    state : sequence
        Finite coefficient vector.
    exact : bool, optional
        Use sympy square roots so inner products can be compared exactly.
        Defaults to True when every entry is an int/Fraction/GaussianRational.
    """
    state = list(state)
    if exact is None:
        exact = all(_exact_scalar(c) for c in state)
    terms = {}
    if exact:
        import sympy

        for n, c in enumerate(state):
            terms[(n, 0)] = sympy.sympify(GaussianRational.coerce(c)) / sympy.sqrt(factorial(n))
    else:
        for n, c in enumerate(state):
            terms[(n, 0)] = complex(c) / sqrt(factorial(n))
    return PolyFunction(terms, 1)


def inverse_bargmann(f, dim=None):
    """Fock coefficients of an anti-holomorphic polynomial (inverse of :func:`bargmann_map`)."""
    if not f.is_antiholomorphic():
        raise ValueError("inverse_bargmann expects an anti-holomorphic polynomial")
    top = max((j for ((j, _),) in f), default=0)
    dim = top + 1 if dim is None else dim
    out = np.zeros(dim, dtype=complex)
    for ((j, _),), c in f.items():
        out[j] = complex(c) * sqrt(factorial(j))
    return out


# symplectic Fourier pair ----------------------------------------------------------


@dataclass(frozen=True)
class GaussianTimesPoly:
    """``polynomial(z*, z) * exp(exponent * |z|^2)``."""

    polynomial: PolyFunction
    exponent: int = -1

    def __call__(self, points):
        pts = np.asarray(points, dtype=complex)
        vals = np.zeros(pts.shape, dtype=complex)
        for ((j, k),), c in self.polynomial.items():
            vals = vals + complex(c) * np.conj(pts) ** j * pts**k
        return vals * np.exp(self.exponent * np.abs(pts) ** 2)


def fourier_transform_analytic(f):
    """Closed form of ``int f(b*, b) exp(z* b - b* z) P[db]``.

    Uses ``int (b*)^j b^k exp(u b* + v b) dP = d_u^j d_v^k exp(uv)`` at
    ``u = -z``, ``v = z*``; the result is a polynomial times ``exp(-|z|^2)``.
    """
    out = {}
    for ((j, k),), c in f.items():
        for i in range(min(j, k) + 1):
            w = comb(j, i) * comb(k, i) * factorial(i) * (-1) ** (k - i)
            key = (j - i, k - i)
            out[key] = out[key] + c * w if key in out else c * w
    return GaussianTimesPoly(PolyFunction(out, 1), -1)


def _check_order(grid, deg):
    need = 2 * deg + 8
    if grid.order < need:
        raise QuadratureOrderError(f"grid order {grid.order} < required {need}")


def _varpi(points, nodes):
    # exp(z* b - b* z) for every (point, node) pair
    z = np.asarray(points, dtype=complex)[:, None]
    b = nodes[None, :]
    return np.exp(np.conj(z) * b - np.conj(b) * z)


def fourier_transform(f, grid, points):
    """Quadrature samples of the transform of ``f`` at ``points``."""
    _check_order(grid, f.degree())
    fb = f.to_complex()
    samples = GaussianTimesPoly(fb, 0)(grid.nodes)
    pts = np.atleast_1d(np.asarray(points, dtype=complex))
    return _varpi(pts, grid.nodes) @ (grid.weights * samples)


def inverse_fourier_transform(record, grid, points):
    """Recover ``f`` at ``points`` from a transformed record by quadrature.

    For a record ``P * exp(-|b|^2)`` the inverse is
    ``exp(|z|^2) * int P(b*, b) exp(z* b - b* z) P[db]``.
    """
    if record.exponent != -1:
        raise ValueError("inverse transform expects a polynomial * exp(-|z|^2) record")
    poly = record.polynomial
    _check_order(grid, poly.degree())
    samples = GaussianTimesPoly(poly.to_complex(), 0)(grid.nodes)
    pts = np.atleast_1d(np.asarray(points, dtype=complex))
    return np.exp(np.abs(pts) ** 2) * (_varpi(pts, grid.nodes) @ (grid.weights * samples))
