"""Dense truncated Fock-space matrices for checking operator identities numerically.

A truncated representation keeps levels ``0 .. dim-1`` of every mode. A
polynomial identity of degree ``D`` survives truncation on the *safe block*:
matrix elements whose every mode index is at most ``dim - 1 - D``. All
comparisons in this module are restricted to that block.

Multimode matrices use ``np.kron`` ordering, so mode 0 is the most
significant tensor factor.
"""

import json
from dataclasses import dataclass
from functools import reduce
from math import lgamma, log

import numpy as np
import scipy.linalg

from .ccr import ANTIWICK, WEYL, WICK, anti_wick_direct, normal_symbol, wick_quantize
from .errors import DimensionError, QuadratureOrderError, SymbolError, TruncationError

DEFAULT_DIM = 40
TAIL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class FockMatrix:
    """Operator matrix on a truncated (multi)mode Fock space."""

    entries: np.ndarray
    dims: tuple
    safe_degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        size = int(np.prod(self.dims))
        if self.entries.shape != (size, size):
            raise DimensionError(f"entries shape {self.entries.shape} does not match dims {self.dims}")

    def safe_indices(self, safe_degree=None):
        """Flat indices whose per-mode occupations are all ``<= dim - 1 - safe_degree``."""
        s = self.safe_degree if safe_degree is None else safe_degree
        return safe_indices(self.dims, s)

    def safe_block(self, safe_degree=None):
        idx = self.safe_indices(safe_degree)
        return self.entries[np.ix_(idx, idx)]

    def __matmul__(self, other):
        _same_dims(self, other)
        return FockMatrix(self.entries @ other.entries, self.dims, self.safe_degree + other.safe_degree)

    def __add__(self, other):
        _same_dims(self, other)
        return FockMatrix(self.entries + other.entries, self.dims, max(self.safe_degree, other.safe_degree))

    def __sub__(self, other):
        _same_dims(self, other)
        return FockMatrix(self.entries - other.entries, self.dims, max(self.safe_degree, other.safe_degree))

    def scale(self, c):
        return FockMatrix(self.entries * c, self.dims, self.safe_degree)

    def adjoint(self):
        return FockMatrix(self.entries.conj().T, self.dims, self.safe_degree)

    def to_json(self):
        return {
            "dims": list(self.dims),
            "safe_degree": self.safe_degree,
            "entries": [[[v.real, v.imag] for v in row] for row in self.entries.astype(complex)],
        }

    @classmethod
    def from_json(cls, obj):
        arr = np.array(obj["entries"], dtype=float)
        return cls(arr[..., 0] + 1j * arr[..., 1], tuple(obj["dims"]), obj.get("safe_degree", 0))

    def to_text(self, precision=6):
        rows = []
        for row in self.entries.astype(complex):
            rows.append("  ".join(_entry_text(v, precision) for v in row))
        return "\n".join(rows)


def _entry_text(v, precision):
    re = 0.0 if abs(v.real) < 10 ** -(precision + 2) else v.real
    im = 0.0 if abs(v.imag) < 10 ** -(precision + 2) else v.imag
    return f"{re:.{precision}f}{im:+.{precision}f}i"


@dataclass(frozen=True)
class FockVector:
    entries: np.ndarray
    dims: tuple

    def norm(self):
        return float(np.linalg.norm(self.entries))


def _same_dims(a, b):
    if a.dims != b.dims:
        raise DimensionError(f"dims differ: {a.dims} vs {b.dims}")


def safe_indices(dims, safe_degree):
    limit = np.array(dims) - 1 - safe_degree
    occ = np.indices(dims).reshape(len(dims), -1)
    mask = np.all(occ <= limit[:, None], axis=0)
    return np.flatnonzero(mask)


def safe_max_error(x, y, safe_degree=None):
    """Largest entrywise difference between two matrices on their common safe block."""
    s = max(x.safe_degree, y.safe_degree) if safe_degree is None else safe_degree
    _same_dims(x, y)
    idx = safe_indices(x.dims, s)
    if idx.size == 0:
        raise DimensionError(f"empty safe block for dims {x.dims} at degree {s}")
    return float(np.max(np.abs(x.entries[np.ix_(idx, idx)] - y.entries[np.ix_(idx, idx)])))


def ladder(dim):
    """Annihilator and creator on levels ``0 .. dim-1``."""
    if dim < 2:
        raise DimensionError("dim must be at least 2")
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)
    return FockMatrix(a, (dim,), 1), FockMatrix(a.conj().T.copy(), (dim,), 1)


def _embed(single, mode, dims):
    mats = [np.eye(d, dtype=complex) for d in dims]
    mats[mode] = single
    return reduce(np.kron, mats)


def mode_operator(mode, kind, dims):
    """``a_mode`` (``kind='a'``) or ``a_mode+`` (``kind='adag'``) on a multimode space."""
    a, ad = ladder(dims[mode])
    m = a.entries if kind == "a" else ad.entries
    return FockMatrix(_embed(m, mode, dims), dims, 1)


def eval_poly(p, dims, safe_degree=None):
    """Substitute truncated ladder matrices into a normal-ordered polynomial.

    Because every monomial is normal-ordered, each term is the exact
    compression of the corresponding infinite matrix.
    """
    dims = tuple(dims) if not isinstance(dims, int) else (dims,) * p.mode_count
    if len(dims) != p.mode_count:
        raise DimensionError(f"{len(dims)} dims given for {p.mode_count} modes")
    for d in dims:
        if d < 2:
            raise DimensionError("every dim must be at least 2")
    size = int(np.prod(dims))
    out = np.zeros((size, size), dtype=complex)
    ladders = [ladder(d) for d in dims]
    for key, c in p.items():
        mats = [np.eye(d, dtype=complex) for d in dims]
        for m, j, k in key:
            a, ad = ladders[m]
            mats[m] = np.linalg.matrix_power(ad.entries, j) @ np.linalg.matrix_power(a.entries, k)
        out += complex(c) * reduce(np.kron, mats)
    s = p.degree() if safe_degree is None else safe_degree
    return FockMatrix(out, dims, s)


# exponential vectors ---------------------------------------------------------


def tail_mass(beta, dim):
    """Upper bound on ``sum_{n >= dim} |beta|^(2n)/n!`` (discarded squared norm)."""
    r2 = abs(complex(beta)) ** 2
    if r2 == 0:
        return 0.0
    ratio = r2 / (dim + 1)
    if ratio >= 1:
        return float("inf")
    log_first = dim * log(r2) - lgamma(dim + 1)
    return float(np.exp(log_first) / (1 - ratio))


def exponential_vector(beta, dim):
    """``sum_n beta^n / sqrt(n!) |n>`` truncated to ``dim`` levels.

    Raises
    ------
    TruncationError
        If the discarded squared norm exceeds ``1e-12``.
    """
    if dim < 1:
        raise DimensionError("dim must be positive")
    mass = tail_mass(beta, dim)
    if mass > TAIL_TOLERANCE:
        raise TruncationError(f"tail mass {mass:.3e} for |beta|={abs(beta):.3g} at dim {dim}")
    beta = complex(beta)
    v = np.empty(dim, dtype=complex)
    v[0] = 1.0
    for n in range(1, dim):
        v[n] = v[n - 1] * beta / np.sqrt(n)
    return FockVector(v, (dim,))


def multimode_exponential_vector(phi, dims):
    """Tensor product of single-mode exponential vectors, one per component of ``phi``."""
    phi = np.asarray(phi, dtype=complex)
    dims = (dims,) * len(phi) if isinstance(dims, int) else tuple(dims)
    parts = [exponential_vector(b, d).entries for b, d in zip(phi, dims)]
    return FockVector(reduce(np.kron, parts), dims)


def coherent_ratio(f, alpha, beta, dim=DEFAULT_DIM, rule="antiwick"):
    """Coherent matrix element ``<exp(alpha)| Q(f) |exp(beta)> / <exp(alpha)|exp(beta)>``.

    Parameters
    ----------
    f : PolyFunction
        Single-variable symbol.
    alpha, beta : complex
        Labels of the exponential vectors, ``|.| <= 1.5`` for the default ``dim``.
    dim : int
        Fock cutoff.
    rule : {"antiwick", "wick"}
        Quantization ``Q``. Under ``"wick"`` the ratio is ``f(conj(alpha), beta)``.
        Under ``"antiwick"`` it is ``normal_symbol(anti_wick_direct(f))`` at the
        same point, see :func:`coherent_ratio_exact`.
    """
    if rule == "antiwick":
        op = anti_wick_direct(f)
    elif rule == "wick":
        op = wick_quantize(f)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    m = eval_poly(op, (dim,))
    va = exponential_vector(alpha, dim).entries
    vb = exponential_vector(beta, dim).entries
    return complex(np.vdot(va, m.entries @ vb) / np.vdot(va, vb))


def coherent_ratio_exact(f, alpha, beta, rule="antiwick"):
    """Closed form of :func:`coherent_ratio` from the normal-ordered operator."""
    op = anti_wick_direct(f) if rule == "antiwick" else wick_quantize(f)
    return complex(normal_symbol(op).evaluate(complex(alpha).conjugate(), complex(beta)))


def anti_wick_integral(f, grid, dim):
    """Anti-Wick operator as the quadrature sum ``sum_i w_i f(z_i) |exp z_i><exp z_i|``."""
    need = 2 * f.degree() + 16
    if grid.order < need:
        raise QuadratureOrderError(f"grid order {grid.order} < required {need}")
    if dim < 2:
        raise DimensionError("dim must be at least 2")
    z = grid.nodes
    # v[i, k] = z_i^k / sqrt(k!)
    v = np.empty((z.size, dim), dtype=complex)
    v[:, 0] = 1.0
    for k in range(1, dim):
        v[:, k] = v[:, k - 1] * z / np.sqrt(k)
    fvals = np.zeros(z.shape, dtype=complex)
    for ((j, k),), c in f.items():
        fvals += complex(c) * np.conj(z) ** j * z**k
    w = grid.weights * fvals
    m = (v * w[:, None]).T @ v.conj()
    return FockMatrix(m, (dim,), f.degree())


# positivity --------------------------------------------------------------------


def positivity_check(f, dim=30):
    """Smallest eigenvalue of the anti-Wick operator of a real symbol on its safe block."""
    if not f.is_real():
        raise SymbolError("symbol is not real-valued (f_jk != conj(f_kj))")
    m = eval_poly(anti_wick_direct(f), (dim,))
    block = m.safe_block()
    if block.size == 0:
        raise DimensionError("empty safe block")
    block = 0.5 * (block + block.conj().T)
    return float(np.linalg.eigvalsh(block)[0])


# displacement operators ----------------------------------------------------------


def displacement_matrix(beta, rule, dim=DEFAULT_DIM, safe_degree=None):
    """Truncated matrix of the Weyl, Wick or anti-Wick displacement exponential.

    ``safe_degree`` defaults to ``3*dim//4``, leaving the lowest quarter of levels,
    where truncation of the exponential series is negligible for ``|beta| <= 1.5``.
    """
    beta = complex(beta)
    if abs(beta) > 1.5:
        raise TruncationError("displacement matrices are only supported for |beta| <= 1.5")
    a, ad = ladder(dim)
    a, ad = a.entries, ad.entries
    if rule == WEYL:
        m = scipy.linalg.expm(beta * ad - np.conj(beta) * a)
    elif rule == WICK:
        m = scipy.linalg.expm(beta * ad) @ scipy.linalg.expm(-np.conj(beta) * a)
    elif rule == ANTIWICK:
        m = scipy.linalg.expm(-np.conj(beta) * a) @ scipy.linalg.expm(beta * ad)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    s = 3 * dim // 4 if safe_degree is None else safe_degree
    return FockMatrix(m, (dim,), s)


def vacuum_characteristic(phi_norm, u, dim=DEFAULT_DIM, quadrature="Q"):
    """``<0| exp(i u Q) |0>`` for the field quadrature ``Q = A(phi) + A*(phi)``.

    Only ``|phi|`` matters (a phase of ``phi`` is a unitary relabelling), so a
    single mode with ``Q = |phi| (a + a+)`` is used; ``quadrature='P'`` takes
    ``P = |phi| (a - a+)/i`` instead.
    """
    if abs(u) * phi_norm > 2:
        raise TruncationError("|u| * |phi| must be at most 2")
    a, ad = ladder(dim)
    if quadrature == "Q":
        q = phi_norm * (a.entries + ad.entries)
    elif quadrature == "P":
        q = phi_norm * (a.entries - ad.entries) / 1j
    else:
        raise ValueError("quadrature must be 'Q' or 'P'")
    return complex(scipy.linalg.expm(1j * u * q)[0, 0])


# reports -----------------------------------------------------------------------


@dataclass
class Report:
    """One verification outcome, serialisable as ``{check, params, observed, bound, pass}``."""

    check: str
    params: dict
    observed: float
    bound: float
    passed: bool

    def to_dict(self):
        return {
            "check": self.check,
            "params": self.params,
            "observed": self.observed,
            "bound": self.bound,
            "pass": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, default=str)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.check}: observed={self.observed:.3e} bound={self.bound:.1e}"


def make_report(check, observed, bound, params=None, lower=False):
    """Build a :class:`Report`; ``lower=True`` means ``observed >= bound`` passes."""
    ok = observed >= bound if lower else observed <= bound
    return Report(check, dict(params or {}), float(observed), float(bound), bool(ok))

