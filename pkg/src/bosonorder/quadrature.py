"""Gauss-Hermite product rule for the Gaussian probability measure on the complex plane.

The measure is ``exp(-|z|^2) d^2z / pi``. Writing ``z = (x + iy)/sqrt(2)``
makes ``x`` and ``y`` independent standard normals, so a tensor product of
one-dimensional Gauss-Hermite rules integrates polynomials in ``z, z*`` of
per-axis degree below ``2*order`` exactly (up to rounding).
"""

from dataclasses import dataclass
from math import factorial

import numpy as np

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class QuadratureGrid:
    """Nodes ``z_i`` and positive weights ``w_i`` with ``sum(w_i) == 1``."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, values):
        """Weighted sum of samples taken at :attr:`nodes` (last axis is the node axis)."""
        return np.asarray(values) @ self.weights

    def integrate_function(self, fn):
        return self.integrate(fn(self.nodes))

    def moment(self, n, m):
        """Quadrature estimate of the mixed moment of ``(z*)^n z^m``."""
        z = self.nodes
        return complex(self.integrate(np.conj(z) ** n * z**m))

    def to_json(self):
        return {
            "order": self.order,
            "nodes_re": self.nodes.real.tolist(),
            "nodes_im": self.nodes.imag.tolist(),
            "weights": self.weights.tolist(),
        }

    @classmethod
    def from_json(cls, obj):
        nodes = np.asarray(obj["nodes_re"]) + 1j * np.asarray(obj["nodes_im"])
        return cls(nodes, np.asarray(obj["weights"], dtype=float), int(obj["order"]))


def gauss_hermite_grid(order=DEFAULT_ORDER):
    """Product grid with ``order`` Gauss-Hermite points per real axis.

    ``hermgauss`` integrates against ``exp(-t^2)``; with ``x = sqrt(2) t`` the
    per-axis weight becomes ``w / sqrt(pi)`` for the standard normal, and
    ``z = (x + iy)/sqrt(2) = t_x + i t_y``.
    """
    if order < 1:
        raise ValueError("order must be positive")
    t, w = np.polynomial.hermite.hermgauss(order)
    w = w / np.sqrt(np.pi)
    tx, ty = np.meshgrid(t, t, indexing="ij")
    wx, wy = np.meshgrid(w, w, indexing="ij")
    nodes = (tx + 1j * ty).ravel()
    weights = (wx * wy).ravel()
    return QuadratureGrid(nodes, weights, order)


def exact_moment(n, m):
    """``int (z*)^n z^m dP`` = ``n!`` if ``n == m`` else 0."""
    return factorial(n) if n == m else 0
