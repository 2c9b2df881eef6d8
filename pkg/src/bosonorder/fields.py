"""Smeared boson fields over a finite one-particle space ``h = C^d``.

Two copies of the truncated Fock space are used: the A-space on modes
``0..d-1`` and the B-space on modes ``d..2d-1`` of the doubled space. The
involution ``J`` is componentwise complex conjugation, so

    Z(phi) = A(phi) + B(J phi)* = sum_i conj(phi_i) (a_i + b_i+)

and the vacuum contraction over the B-space turns any product of ``Z`` and
``Z*`` fields into the anti-Wick ordered product of ``A`` and ``A*`` fields.
"""

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce

import numpy as np

from .ccr import ANTIWICK, WEYL, WICK, anti_wick_direct, anti_wick_multimode
from .errors import BudgetError, DimensionError, SymbolError
from .fock import FockMatrix, eval_poly, ladder, multimode_exponential_vector, safe_indices
from .gaussian_rational import GaussianRational
from .polyfunc import PolyFunction

DEFAULT_CUTOFF = 4
DIMENSION_BUDGET = 65536

MultimodeOperator = FockMatrix


def _vec(phi):
    v = np.atleast_1d(np.asarray(phi, dtype=complex))
    if v.ndim != 1 or v.size < 1:
        raise ValueError("one-particle vectors must be non-empty 1-d arrays")
    if not np.all(np.isfinite(v)):
        raise ValueError("one-particle vectors must be finite")
    return v


def J(phi):
    """The involution: componentwise conjugation."""
    return np.conj(_vec(phi))


def _check_budget(modes, cutoff, budget):
    total = cutoff**modes
    if total > budget:
        raise BudgetError(f"{modes} modes at cutoff {cutoff} give dimension {total} > {budget}")
    if cutoff < 2:
        raise DimensionError("cutoff must be at least 2")


def _mode_mats(modes, cutoff):
    a, ad = ladder(cutoff)
    eye = np.eye(cutoff, dtype=complex)
    ann, cre = [], []
    for i in range(modes):
        left = [eye] * i
        right = [eye] * (modes - i - 1)
        ann.append(reduce(np.kron, left + [a.entries] + right))
        cre.append(reduce(np.kron, left + [ad.entries] + right))
    return ann, cre


def field(kind, phi, cutoff=DEFAULT_CUTOFF, budget=DIMENSION_BUDGET):
    """``A(phi)``, ``A*(phi)`` (or the same for ``B``) on ``d`` truncated modes.

    ``A(phi) = sum_i conj(phi_i) a_i`` is anti-linear in ``phi``;
    ``A*(phi) = sum_i phi_i a_i+`` is linear. ``B`` fields are built the same
    way on their own copy of the space.
    """
    phi = _vec(phi)
    d = phi.size
    _check_budget(d, cutoff, budget)
    ann, cre = _mode_mats(d, cutoff)
    if kind in ("A", "B"):
        m = sum(np.conj(c) * x for c, x in zip(phi, ann))
    elif kind in ("A*", "B*"):
        m = sum(c * x for c, x in zip(phi, cre))
    else:
        raise ValueError(f"unknown field kind {kind!r}")
    return FockMatrix(m, (cutoff,) * d, 1)


def doubled_field(kind, phi, cutoff=DEFAULT_CUTOFF, budget=DIMENSION_BUDGET):
    """``A``/``B`` fields embedded in the doubled space (A-modes first)."""
    phi = _vec(phi)
    d = phi.size
    _check_budget(2 * d, cutoff, budget)
    ann, cre = _mode_mats(2 * d, cutoff)
    offset = 0 if kind.startswith("A") else d
    if kind in ("A", "B"):
        m = sum(np.conj(c) * ann[offset + i] for i, c in enumerate(phi))
    elif kind in ("A*", "B*"):
        m = sum(c * cre[offset + i] for i, c in enumerate(phi))
    else:
        raise ValueError(f"unknown field kind {kind!r}")
    return FockMatrix(m, (cutoff,) * (2 * d), 1)


def z_field(phi, cutoff=DEFAULT_CUTOFF, budget=DIMENSION_BUDGET):
    """``Z(phi) = A(phi) (x) I + I (x) B(J phi)*`` on the doubled space."""
    phi = _vec(phi)
    a = doubled_field("A", phi, cutoff, budget)
    bstar = doubled_field("B*", J(phi), cutoff, budget)
    return a + bstar


def z_field_adjoint(phi, cutoff=DEFAULT_CUTOFF, budget=DIMENSION_BUDGET):
    return z_field(phi, cutoff, budget).adjoint()


def quadratures(kind, phi, cutoff=DEFAULT_CUTOFF, budget=DIMENSION_BUDGET):
    """``(Q, P)`` with ``Q = X + X*`` and ``P = (X - X*)/i`` for ``X`` in ``A`` or ``Z``."""
    if kind == "A":
        x = field("A", phi, cutoff, budget)
    elif kind == "Z":
        x = z_field(phi, cutoff, budget)
    else:
        raise ValueError("kind must be 'A' or 'Z'")
    xs = x.adjoint()
    return x + xs, (x - xs).scale(-1j)


def _split(x):
    dims = x.dims
    if len(dims) % 2:
        raise DimensionError("doubled-space operator must have an even number of modes")
    d = len(dims) // 2
    da = int(np.prod(dims[:d]))
    db = int(np.prod(dims[d:]))
    return d, da, db


def partial_vacuum_B(x):
    """Contract the B-factor against its vacuum, leaving an operator on the A-space."""
    d, da, db = _split(x)
    t = x.entries.reshape(da, db, da, db)
    return FockMatrix(t[:, 0, :, 0].copy(), x.dims[:d], x.safe_degree)


def partial_vacuum_A(x):
    """Contract the A-factor against its vacuum, leaving an operator on the B-space."""
    d, da, db = _split(x)
    t = x.entries.reshape(da, db, da, db)
    return FockMatrix(t[0, :, 0, :].copy(), x.dims[d:], x.safe_degree)


def _product(mats, size):
    out = np.eye(size, dtype=complex)
    for m in mats:
        out = out @ m
    return out


def _max_safe(x, y, degree):
    idx = safe_indices(x.dims, degree)
    if idx.size == 0:
        raise DimensionError("empty safe block")
    return float(np.max(np.abs(x.entries[np.ix_(idx, idx)] - y.entries[np.ix_(idx, idx)])))


@dataclass
class FieldReport:
    """``{check, d, cutoff, params, max_residual, bound, pass}``."""

    check: str
    d: int
    cutoff: int
    max_residual: float
    bound: float
    params: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return self.max_residual <= self.bound

    def to_dict(self):
        return {
            "check": self.check,
            "d": self.d,
            "cutoff": self.cutoff,
            "params": self.params,
            "max_residual": self.max_residual,
            "bound": self.bound,
            "pass": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, default=str)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.check}: max_residual={self.max_residual:.3e} bound={self.bound:.1e}"


def z_commutator_residual(phi, psi, cutoff=DEFAULT_CUTOFF):
    """Safe-block norms of ``[Z(phi), Z(psi)]`` and ``[Z(phi), Z(psi)*]``."""
    zp = z_field(phi, cutoff)
    zq = z_field(psi, cutoff)
    zqs = zq.adjoint()
    c1 = (zp @ zq) - (zq @ zp)
    c2 = (zp @ zqs) - (zqs @ zp)
    zero = FockMatrix(np.zeros_like(c1.entries), c1.dims)
    return _max_safe(c1, zero, 2), _max_safe(c2, zero, 2)


def anti_wick_fields_check(phis, psis, cutoff=DEFAULT_CUTOFF, bound=1e-9, permutations=True):
    """Compare the B-vacuum contraction of ``prod Z(phi_j) prod Z(psi_k)*`` with anti-Wick A-fields.

    The comparison uses the A-space safe block at degree ``n + m``. With
    ``permutations`` every ordering of the (commuting) Z-word is contracted and
    compared as well; the symmetric B-space statement is included.
    """
    phis = [_vec(p) for p in phis]
    psis = [_vec(p) for p in psis]
    vecs = phis + psis
    if not vecs:
        raise ValueError("need at least one field")
    d = vecs[0].size
    n, m = len(phis), len(psis)
    deg = n + m
    if deg > cutoff - 1:
        raise DimensionError("word longer than the B-space cutoff allows")
    zs = [z_field(p, cutoff) for p in phis]
    zstars = [z_field(p, cutoff).adjoint() for p in psis]
    size = zs[0].entries.shape[0] if zs else zstars[0].entries.shape[0]
    dims2 = (cutoff,) * (2 * d)

    factors = [z.entries for z in zs] + [z.entries for z in zstars]
    x = FockMatrix(_product(factors, size), dims2, deg)
    ea = partial_vacuum_B(x)
    eb = partial_vacuum_A(x)

    a_side = [field("A", p, cutoff).entries for p in phis] + [field("A*", p, cutoff).entries for p in psis]
    expected_a = FockMatrix(_product(a_side, cutoff**d), (cutoff,) * d, deg)
    b_side = [field("B", J(p), cutoff).entries for p in psis] + [
        field("B*", J(p), cutoff).entries for p in phis
    ]
    expected_b = FockMatrix(_product(b_side, cutoff**d), (cutoff,) * d, deg)

    residual = max(_max_safe(ea, expected_a, deg), _max_safe(eb, expected_b, deg))
    orderings = 1
    if permutations:
        for order in itertools.permutations(range(deg)):
            if list(order) == list(range(deg)):
                continue
            xp = FockMatrix(_product([factors[i] for i in order], size), dims2, deg)
            residual = max(residual, _max_safe(partial_vacuum_B(xp), expected_a, deg))
            orderings += 1
    return FieldReport(
        "anti_wick_fields",
        d,
        cutoff,
        residual,
        bound,
        {"n": n, "m": m, "orderings": orderings},
    )


def exp_vector_overlap(phi, psi, cutoff=20):
    """``<exp(phi)|exp(psi)>`` computed from truncated multimode exponential vectors."""
    phi, psi = _vec(phi), _vec(psi)
    if phi.size != psi.size:
        raise ValueError("vectors must have equal length")
    _check_budget(phi.size, cutoff, DIMENSION_BUDGET)
    u = multimode_exponential_vector(phi, cutoff).entries
    v = multimode_exponential_vector(psi, cutoff).entries
    return complex(np.vdot(u, v))


def kernel(phi, psi):
    """``exp(<phi, psi>)`` with the inner product conjugate-linear in ``phi``."""
    return complex(np.exp(np.vdot(_vec(phi), _vec(psi))))


# Cohen multipliers -------------------------------------------------------------


@dataclass(frozen=True)
class GaussianScalar:
    """``exp(exponent)``, kept symbolic so products can be compared exactly."""

    exponent: object

    def __mul__(self, other):
        return GaussianScalar(self.exponent + other.exponent)

    def value(self):
        return float(np.exp(float(self.exponent)))


def norm_squared(phi):
    """``<phi|phi>``, exact when the components are exact (ints, Fractions, GaussianRationals)."""
    total = 0
    for c in phi:
        if isinstance(c, (complex, float, np.number)):
            total = total + abs(complex(c)) ** 2
        else:
            total = total + GaussianRational.coerce(c).abs2()
    return total


def cohen_multiplier(phi, rule=ANTIWICK):
    """Multiplier relating a rule to Weyl on displacements: anti-Wick gives ``exp(-|phi|^2/2)``."""
    coefficient = {ANTIWICK: Fraction(-1, 2), WEYL: Fraction(0), WICK: Fraction(1, 2)}[rule]
    return GaussianScalar(coefficient * norm_squared(phi))


def direct_sum(phi1, phi2):
    return list(phi1) + list(phi2)


@dataclass
class CohenReport:
    symbolic_factor: bool
    multiplier_split: bool
    matrix_residual: float
    bound: float

    @property
    def passed(self):
        return self.symbolic_factor and self.multiplier_split and self.matrix_residual <= self.bound


def cohen_factorization_check(f1, f2, cutoff=8, phi1=(1,), phi2=(1,), bound=1e-10):
    """Factor property of the anti-Wick rule for a product symbol ``f1(z_1) f2(z_2)``.

    Three parts: the two-variable anti-Wick polynomial equals the tensor
    product of the one-variable results (exact); the multiplier of a direct sum
    splits into the product of multipliers (exact exponents); and the two
    sides agree as truncated matrices on the safe block.
    """
    joint = f1.embed(0, 2) * f2.embed(1, 2)
    lhs = anti_wick_multimode(joint)
    rhs = anti_wick_direct(f1).tensor(anti_wick_direct(f2))
    symbolic = lhs == rhs

    split = cohen_multiplier(direct_sum(phi1, phi2)) == cohen_multiplier(phi1) * cohen_multiplier(phi2)

    deg = max(f1.degree(), f2.degree())
    m_joint = eval_poly(lhs, (cutoff, cutoff), deg)
    m1 = eval_poly(anti_wick_direct(f1), (cutoff,)).entries
    m2 = eval_poly(anti_wick_direct(f2), (cutoff,)).entries
    m_tensor = FockMatrix(np.kron(m1, m2), (cutoff, cutoff), deg)
    residual = _max_safe(m_joint, m_tensor, deg)
    return CohenReport(symbolic, split, residual, bound)


# complete positivity -----------------------------------------------------------


def cp_block_check(symbol_matrix, dim=20):
    """Smallest eigenvalue of the block operator ``[A(f_ij)]`` restricted to safe blocks.

    ``symbol_matrix`` is a 2x2 nested list of one-variable polynomials that
    must be Hermitian as a matrix of functions (``f_ji = conj(f_ij)``).
    """
    if len(symbol_matrix) != 2 or any(len(row) != 2 for row in symbol_matrix):
        raise SymbolError("expected a 2x2 symbol matrix")
    for i in range(2):
        for j in range(2):
            if symbol_matrix[i][j] != symbol_matrix[j][i].conjugate():
                raise SymbolError(f"symbol matrix is not Hermitian at ({i}, {j})")
    deg = max(f.degree() for row in symbol_matrix for f in row)
    idx = safe_indices((dim,), deg)
    if idx.size == 0:
        raise DimensionError("empty safe block")
    blocks = [
        [eval_poly(anti_wick_direct(f), (dim,)).entries[np.ix_(idx, idx)] for f in row]
        for row in symbol_matrix
    ]
    big = np.block(blocks)
    big = 0.5 * (big + big.conj().T)
    return float(np.linalg.eigvalsh(big)[0])


def rank_one_symbol_matrix(g):
    """``[[1, g], [conj(g), |g|^2]]``, pointwise positive semidefinite for any ``g``."""
    one = PolyFunction.constant(1, g.variable_count)
    gc = g.conjugate()
    return [[one, g], [gc, gc * g]]
