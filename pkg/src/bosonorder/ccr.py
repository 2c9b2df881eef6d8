"""Exact normal-ordered algebra of multimode boson creation/annihilation operators.

Every :class:`OperatorPoly` is stored in canonical (normal) order: within each
mode all creators stand to the left of all annihilators, and distinct modes
commute. A monomial key is a tuple of ``(mode, create_power,
annihilate_power)`` triples sorted by mode, with all-zero modes omitted.

Besides the ring operations this module holds the three quantization rules
for polynomial symbols (Wick, anti-Wick, and anti-Wick obtained by dilation
to two commuting modes followed by a vacuum contraction) and the
exponential-level rules for displacement symbols.
"""

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DegreeOverflow
from .gaussian_rational import GaussianRational
from .polyfunc import PolyFunction, _pair_text, coeff_from_json, coeff_to_json, format_terms

CREATE = "create"
ANNIHILATE = "annihilate"

DEFAULT_MAX_DEGREE = 32


def max_degree():
    """Degree cap, overridable through ``BOSONORDER_MAX_DEGREE``."""
    raw = os.environ.get("BOSONORDER_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    value = int(raw)
    if value < 0:
        raise ValueError("BOSONORDER_MAX_DEGREE must be non-negative")
    return value


def _key_degree(key):
    return sum(j + k for _, j, k in key)


@lru_cache(maxsize=65536)
def _mode_product(j1, k1, j2, k2):
    """(a+)^j1 a^k1 (a+)^j2 a^k2 as a list of (weight, j, k) in normal order."""
    return tuple(
        (comb(k1, i) * comb(j2, i) * factorial(i), j1 + j2 - i, k1 + k2 - i)
        for i in range(min(k1, j2) + 1)
    )


@lru_cache(maxsize=65536)
def _monomial_product(m1, m2):
    p1 = {mode: (j, k) for mode, j, k in m1}
    p2 = {mode: (j, k) for mode, j, k in m2}
    result = {(): 1}
    for mode in sorted(p1.keys() | p2.keys()):
        j1, k1 = p1.get(mode, (0, 0))
        j2, k2 = p2.get(mode, (0, 0))
        options = _mode_product(j1, k1, j2, k2)
        nxt = {}
        for key, w in result.items():
            for weight, j, k in options:
                nk = key + ((mode, j, k),) if (j or k) else key
                nxt[nk] = nxt.get(nk, 0) + w * weight
        result = nxt
    return tuple(result.items())


class OperatorPoly:
    """Normal-ordered polynomial in ``a_i``, ``a_i+`` with exact coefficients.

    Parameters
    ----------
    terms : dict
        Map from monomial key to coefficient. Keys may also be given as
        ``{mode: (create, annihilate)}`` dicts.
    mode_count : int
        Number of modes the polynomial lives on.
    max_degree : int, optional
        Cap on the total degree of any monomial; defaults to :func:`max_degree`.
    """

    __slots__ = ("_terms", "_modes")

    def __init__(self, terms=None, mode_count=1, max_degree=None):
        if mode_count < 1:
            raise ValueError("mode_count must be positive")
        cap = _cap(max_degree)
        store = {}
        for key, c in (terms or {}).items():
            key = _normalize_key(key, mode_count)
            if _key_degree(key) > cap:
                raise DegreeOverflow(f"monomial degree {_key_degree(key)} exceeds cap {cap}")
            c = GaussianRational.coerce(c)
            store[key] = store[key] + c if key in store else c
        self._terms = {k: c for k, c in store.items() if c}
        self._modes = mode_count

    @classmethod
    def _raw(cls, terms, mode_count):
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c}
        obj._modes = mode_count
        return obj

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, mode_count=1):
        return cls._raw({}, mode_count)

    @classmethod
    def identity(cls, mode_count=1):
        return cls.constant(1, mode_count)

    @classmethod
    def constant(cls, c, mode_count=1):
        return cls._raw({(): GaussianRational.coerce(c)}, mode_count)

    @classmethod
    def create(cls, mode=0, mode_count=1):
        return cls({((mode, 1, 0),): 1}, mode_count)

    @classmethod
    def annihilate(cls, mode=0, mode_count=1):
        return cls({((mode, 0, 1),): 1}, mode_count)

    @classmethod
    def generator(cls, mode, kind, mode_count=1):
        if kind == CREATE:
            return cls.create(mode, mode_count)
        if kind == ANNIHILATE:
            return cls.annihilate(mode, mode_count)
        raise ValueError(f"unknown generator kind {kind!r}")

    @classmethod
    def normal_monomial(cls, powers, coeff=1, mode_count=1):
        """``coeff * prod_mode (a_mode+)^j a_mode^k`` from ``{mode: (j, k)}``."""
        return cls({_normalize_key(powers, mode_count): coeff}, mode_count)

    # accessors ------------------------------------------------------------

    @property
    def mode_count(self):
        return self._modes

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def coeff(self, key):
        return self._terms.get(_normalize_key(key, self._modes), GaussianRational(0))

    def degree(self):
        return max((_key_degree(k) for k in self._terms), default=0)

    def is_zero(self):
        return not self._terms

    def used_modes(self):
        return sorted({m for key in self._terms for m, _, _ in key})

    # algebra --------------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, OperatorPoly):
            return OperatorPoly.constant(other, self._modes)
        if other._modes != self._modes:
            raise ValueError(f"mode counts differ: {self._modes} vs {other._modes}")
        return other

    def __add__(self, other):
        other = self._same(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return OperatorPoly._raw(out, self._modes)

    __radd__ = __add__

    def __neg__(self):
        return OperatorPoly._raw({k: -c for k, c in self._terms.items()}, self._modes)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def scale(self, c):
        c = GaussianRational.coerce(c)
        return OperatorPoly._raw({k: v * c for k, v in self._terms.items()}, self._modes)

    def __mul__(self, other):
        if not isinstance(other, OperatorPoly):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = OperatorPoly.identity(self._modes)
        for _ in range(n):
            result = mul(result, self)
        return result

    def adjoint(self):
        return adjoint(self)

    def tensor(self, other):
        """Place ``other`` on fresh modes after this polynomial's modes."""
        shift = self._modes
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = k1 + tuple((m + shift, j, k) for m, j, k in k2)
                out[key] = out[key] + c1 * c2 if key in out else c1 * c2
        return OperatorPoly._raw(out, self._modes + other._modes)

    def with_modes(self, mode_count):
        """Same polynomial viewed on a larger (or equal) number of modes."""
        if any(m >= mode_count for m in self.used_modes()):
            raise ValueError("polynomial uses modes beyond the requested count")
        return OperatorPoly._raw(self._terms, mode_count)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, OperatorPoly):
            if isinstance(other, (int, Fraction, GaussianRational, complex)):
                other = OperatorPoly.constant(other, self._modes)
            else:
                return NotImplemented
        return self._modes == other._modes and self._terms == other._terms

    def __hash__(self):
        return hash((self._modes, frozenset(self._terms.items())))

    # text / json ----------------------------------------------------------

    def dense_powers(self, key):
        flat = [0] * (2 * self._modes)
        for m, j, k in key:
            flat[2 * m] = j
            flat[2 * m + 1] = k
        return tuple(flat)

    def sorted_terms(self):
        """Canonical order: descending total degree, then descending per-mode powers."""

        def order(item):
            flat = self.dense_powers(item[0])
            return (-sum(flat), tuple(-x for x in flat))

        return sorted(self._terms.items(), key=order)

    def mode_names(self):
        return mode_names(self._modes)

    def monomial_text(self, key):
        names = self.mode_names()
        return " ".join(_pair_text(names[m] + "*", j, names[m], k) for m, j, k in key)

    def to_text(self):
        return format_terms((c, self.monomial_text(k)) for k, c in self.sorted_terms())

    __str__ = to_text

    def __repr__(self):
        return f"OperatorPoly({self.to_text()!r}, mode_count={self._modes})"

    def to_json(self):
        return {
            "modes": self._modes,
            "terms": [
                {
                    "coeff": coeff_to_json(c),
                    "powers": [{"mode": m, "create": j, "annihilate": k} for m, j, k in key],
                }
                for key, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        terms = {}
        for t in obj["terms"]:
            key = tuple((p["mode"], p["create"], p["annihilate"]) for p in t["powers"])
            terms[key] = coeff_from_json(t["coeff"])
        return cls(terms, obj["modes"])


def mode_names(mode_count):
    """Printed generator names: ``A``/``B`` for up to two modes, else ``A1``, ``A2``, ..."""
    if mode_count <= 2:
        return ["A", "B"][:mode_count]
    return [f"A{i + 1}" for i in range(mode_count)]


def _cap(value):
    return max_degree() if value is None else value


def _normalize_key(key, mode_count):
    if isinstance(key, dict):
        items = [(m, j, k) for m, (j, k) in key.items()]
    else:
        items = list(key)
    seen = set()
    out = []
    for m, j, k in sorted(items):
        if m in seen:
            raise ValueError(f"mode {m} listed twice in monomial key")
        seen.add(m)
        if not 0 <= m < mode_count:
            raise ValueError(f"mode {m} out of range for {mode_count} modes")
        if j < 0 or k < 0:
            raise ValueError("powers must be non-negative")
        if j or k:
            out.append((int(m), int(j), int(k)))
    return tuple(out)


# operations -----------------------------------------------------------------


def mul(p, q, max_degree=None):
    """Canonical product ``p q``.

    Raises
    ------
    DegreeOverflow
        If any product monomial exceeds the degree cap.
    """
    if p.mode_count != q.mode_count:
        raise ValueError(f"mode counts differ: {p.mode_count} vs {q.mode_count}")
    cap = _cap(max_degree)
    out = {}
    for k1, c1 in p.items():
        d1 = _key_degree(k1)
        for k2, c2 in q.items():
            if d1 + _key_degree(k2) > cap:
                raise DegreeOverflow(
                    f"product degree {d1 + _key_degree(k2)} exceeds cap {cap}"
                )
            c = c1 * c2
            for key, w in _monomial_product(k1, k2):
                term = c * w
                out[key] = out[key] + term if key in out else term
    return OperatorPoly._raw(out, p.mode_count)


def canonicalize(word, mode_count=None, max_degree=None):
    """Normal-ordered polynomial equal to a product of generators.

    Parameters
    ----------
    word : sequence of (mode, kind)
        Generators from left to right; ``kind`` is ``"create"`` or
        ``"annihilate"``.
    mode_count : int, optional
        Defaults to one more than the largest mode in the word.

    Examples
    --------
    >>> str(canonicalize([(0, "annihilate"), (0, "create")]))
    'A*A + 1'
    """
    word = list(word)
    if mode_count is None:
        mode_count = max((m for m, _ in word), default=0) + 1
    cap = _cap(max_degree)
    if len(word) > cap:
        raise DegreeOverflow(f"word length {len(word)} exceeds cap {cap}")
    result = OperatorPoly.identity(mode_count)
    for mode, kind in word:
        if not 0 <= mode < mode_count:
            raise ValueError(f"mode {mode} out of range for {mode_count} modes")
        result = mul(result, OperatorPoly.generator(mode, kind, mode_count), cap)
    return result


def adjoint(p):
    """Hermitian adjoint. Normal order is preserved because ``((a+)^j a^k)+ = (a+)^k a^j``."""
    out = {}
    for key, c in p.items():
        out[tuple((m, k, j) for m, j, k in key)] = c.conjugate()
    return OperatorPoly._raw(out, p.mode_count)


def commutator(p, q, max_degree=None):
    return mul(p, q, max_degree) - mul(q, p, max_degree)


def reorder_antinormal(k, j):
    """``a^k (a+)^j`` in normal order, as ``{(j - i, k - i): C(k,i) C(j,i) i!}``."""
    return {(jj, kk): w for w, jj, kk in _mode_product(0, k, j, 0)}


# quantization rules -----------------------------------------------------------


def _single(f):
    if f.variable_count != 1:
        raise ValueError("expected a one-variable symbol")


def wick_quantize(f):
    """Normal-order rule: ``(z_i*)^j z_i^k -> (a_i+)^j a_i^k`` in every variable."""
    return OperatorPoly(
        {tuple((i, j, k) for i, (j, k) in enumerate(key)): c for key, c in f.items()},
        f.variable_count,
    )


def normal_symbol(op):
    """Inverse of :func:`wick_quantize`: read a normal-ordered operator back as a symbol.

    Its value at ``(conj(alpha), beta)`` is the coherent-state ratio
    ``<exp alpha| op |exp beta> / <exp alpha|exp beta>``.
    """
    d = op.mode_count
    terms = {}
    for key, c in op.items():
        slots = [(0, 0)] * d
        for mode, j, k in key:
            slots[mode] = (j, k)
        terms[tuple(slots)] = c
    return PolyFunction(terms, d)


def anti_wick_direct(f, max_degree=None):
    """Anti-normal rule ``(z*)^n z^m -> a^m (a+)^n``, brought to normal order."""
    _single(f)
    out = {}
    for ((n, m),), c in f.items():
        for (j, k), w in reorder_antinormal(m, n).items():
            key = ((0, j, k),) if (j or k) else ()
            out[key] = out[key] + c * w if key in out else c * w
    return OperatorPoly(out, 1, max_degree)


def anti_wick_multimode(f, max_degree=None):
    """Anti-normal ordering applied independently in every mode of a d-variable symbol."""
    d = f.variable_count
    out = {}
    for key, c in f.items():
        parts = {(): 1}
        for mode, (n, m) in enumerate(key):
            nxt = {}
            for pk, pw in parts.items():
                for (j, k), w in reorder_antinormal(m, n).items():
                    nk = pk + ((mode, j, k),) if (j or k) else pk
                    nxt[nk] = nxt.get(nk, 0) + pw * w
            parts = nxt
        for pk, w in parts.items():
            out[pk] = out[pk] + c * w if pk in out else c * w
    return OperatorPoly(out, d, max_degree)


def dilation_generators(variable=0, variable_count=1):
    """The commuting pair ``(C, C+)`` with ``C = a + b+``.

    A-modes occupy ``0..d-1`` and B-modes ``d..2d-1``; for one variable this is
    mode 0 = A and mode 1 = B.
    """
    d = variable_count
    a = OperatorPoly.annihilate(variable, 2 * d)
    ad = OperatorPoly.create(variable, 2 * d)
    b = OperatorPoly.annihilate(d + variable, 2 * d)
    bd = OperatorPoly.create(d + variable, 2 * d)
    return a + bd, ad + b


def dilate_word(word, max_degree=None):
    """Product of ``C``/``C*`` factors in the given order (tokens ``"C"``, ``"C*"``)."""
    c, cstar = dilation_generators()
    result = OperatorPoly.identity(2)
    for tok in word:
        if tok == "C":
            result = mul(result, c, max_degree)
        elif tok == "C*":
            result = mul(result, cstar, max_degree)
        else:
            raise ValueError(f"unknown dilation factor {tok!r}")
    return result


def dilate(f, max_degree=None):
    """Substitute ``z -> a + b+`` and ``z* -> a+ + b`` and normal-order.

    The two substitutes commute, so the order in which factors are multiplied
    does not matter; ``(C*)^n C^m`` is used. A d-variable symbol is dilated
    onto ``2d`` modes, one (A, B) pair per variable.
    """
    d = f.variable_count
    gens = [dilation_generators(i, d) for i in range(d)]
    cpow = [[OperatorPoly.identity(2 * d)] for _ in range(d)]
    spow = [[OperatorPoly.identity(2 * d)] for _ in range(d)]
    result = OperatorPoly.zero(2 * d)
    for key, coeff in f.sorted_terms():
        term = OperatorPoly.constant(coeff, 2 * d)
        for i, (n, m) in enumerate(key):
            c, cstar = gens[i]
            while len(cpow[i]) <= m:
                cpow[i].append(mul(cpow[i][-1], c, max_degree))
            while len(spow[i]) <= n:
                spow[i].append(mul(spow[i][-1], cstar, max_degree))
            term = mul(term, mul(spow[i][n], cpow[i][m], max_degree), max_degree)
        result = result + term
    return result


def partial_vacuum_expectation(x, traced_mode):
    """Contract the traced mode(s) against the Fock vacuum.

    On a normal-ordered polynomial ``<0| (b+)^j b^k |0>`` is 1 when
    ``j = k = 0`` and 0 otherwise, so the contraction keeps exactly the terms
    free of the traced mode. The remaining modes are renumbered consecutively.

    Parameters
    ----------
    x : OperatorPoly
    traced_mode : int or iterable of int
    """
    traced = {traced_mode} if isinstance(traced_mode, int) else set(traced_mode)
    if not traced:
        return x
    if any(not 0 <= t < x.mode_count for t in traced):
        raise ValueError("traced mode out of range")
    if len(traced) >= x.mode_count:
        raise ValueError("cannot trace out every mode")
    kept = [m for m in range(x.mode_count) if m not in traced]
    renumber = {m: i for i, m in enumerate(kept)}
    out = {}
    for key, c in x.items():
        if any(m in traced for m, _, _ in key):
            continue
        out[tuple((renumber[m], j, k) for m, j, k in key)] = c
    return OperatorPoly._raw(out, len(kept))


def anti_wick_via_dilation(f, max_degree=None):
    """Anti-Wick quantization computed as vacuum contraction of the dilated symbol."""
    d = f.variable_count
    return partial_vacuum_expectation(dilate(f, max_degree), range(d, 2 * d))


# displacement exponentials ------------------------------------------------------

WEYL = "weyl"
WICK = "wick"
ANTIWICK = "antiwick"

_PREFACTOR_EXPONENT = {
    WICK: Fraction(0),
    WEYL: Fraction(-1, 2),
    ANTIWICK: Fraction(-1),
}


@dataclass(frozen=True)
class DisplacementForm:
    """``exp(c |beta|^2) * exp(beta a+) exp(-conj(beta) a)`` with exact rational ``c``.

    Every quantized displacement symbol is stored in this Wick-ordered shape
    so that different rules differ only in the scalar exponent ``c``.
    """

    exponent: Fraction
    beta: complex
    rule: str

    def prefactor(self):
        return _exp_abs2(self.exponent, self.beta)

    def multiplier_exponent(self, reference=WEYL):
        """Exact ``c`` relative to another rule (the Cohen multiplier is ``exp(. |beta|^2)``)."""
        return self.exponent - _PREFACTOR_EXPONENT[reference]

    def multiplier(self, reference=WEYL):
        return _exp_abs2(self.multiplier_exponent(reference), self.beta)


def _exp_abs2(c, beta):
    return math.exp(float(c) * abs(complex(beta)) ** 2)


def quantize_displacement(beta, rule):
    """Quantize ``exp(z* beta - conj(beta) z)`` under the Weyl, Wick or anti-Wick rule."""
    if rule not in _PREFACTOR_EXPONENT:
        raise ValueError(f"unknown rule {rule!r}")
    return DisplacementForm(_PREFACTOR_EXPONENT[rule], beta, rule)
