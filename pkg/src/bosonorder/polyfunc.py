"""Commutative polynomial symbols f(z*, z) in one or more complex variables.

A :class:`PolyFunction` maps a key ``((j_1, k_1), ..., (j_d, k_d))`` to the
coefficient of ``prod_i (z_i*)^{j_i} z_i^{k_i}``. Coefficients given as ints,
Fractions or :class:`GaussianRational` are stored exactly; ``complex`` floats
and sympy numbers are stored as given, so the same class also carries the
floating and symbolic-irrational polynomials used by the complex-wave code.
"""

import numbers
from fractions import Fraction

from .gaussian_rational import GaussianRational, format_coefficient


def _coerce(c):
    if isinstance(c, GaussianRational):
        return c
    if isinstance(c, numbers.Rational):
        return GaussianRational(c)
    return c


def _conj(c):
    return c.conjugate()


def _is_exact(c):
    return isinstance(c, GaussianRational)


class PolyFunction:
    """Finite sum of monomials in ``z_i*`` and ``z_i`` treated as independent variables."""

    __slots__ = ("_terms", "_nvars")

    def __init__(self, terms=None, variable_count=1):
        if variable_count < 1:
            raise ValueError("variable_count must be positive")
        store = {}
        for key, c in (terms or {}).items():
            key = self._normalize_key(key, variable_count)
            c = _coerce(c)
            if key in store:
                c = store[key] + c
            store[key] = c
        self._terms = {k: v for k, v in store.items() if v != 0}
        self._nvars = variable_count

    @staticmethod
    def _normalize_key(key, nvars):
        if len(key) == 2 and all(isinstance(x, numbers.Integral) for x in key):
            if nvars != 1:
                raise ValueError("flat (j, k) keys are only allowed for one variable")
            key = (key,)
        key = tuple((int(j), int(k)) for j, k in key)
        if len(key) != nvars:
            raise ValueError(f"key {key!r} does not have {nvars} variable slots")
        if any(j < 0 or k < 0 for j, k in key):
            raise ValueError("powers must be non-negative")
        return key

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c, variable_count=1):
        return cls({((0, 0),) * variable_count: c}, variable_count)

    @classmethod
    def monomial(cls, conj_power, power, coeff=1, variable=0, variable_count=1):
        """``coeff * (z_variable*)^conj_power * z_variable^power``."""
        key = [(0, 0)] * variable_count
        key[variable] = (conj_power, power)
        return cls({tuple(key): coeff}, variable_count)

    @classmethod
    def z(cls, variable=0, variable_count=1):
        return cls.monomial(0, 1, 1, variable, variable_count)

    @classmethod
    def zbar(cls, variable=0, variable_count=1):
        return cls.monomial(1, 0, 1, variable, variable_count)

    # accessors ------------------------------------------------------------

    @property
    def variable_count(self):
        return self._nvars

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, *key):
        if len(key) == 2 and self._nvars == 1 and isinstance(key[0], numbers.Integral):
            key = ((key[0], key[1]),)
        elif len(key) == 1:
            key = key[0]
        key = self._normalize_key(key, self._nvars)
        return self._terms.get(key, GaussianRational(0))

    def degree(self):
        return max((sum(j + k for j, k in key) for key in self._terms), default=0)

    def is_zero(self):
        return not self._terms

    def is_exact(self):
        return all(_is_exact(c) for c in self._terms.values())

    def is_antiholomorphic(self):
        """True if no term contains a plain (unconjugated) variable."""
        return all(k == 0 for key in self._terms for _, k in key)

    def is_holomorphic(self):
        return all(j == 0 for key in self._terms for j, _ in key)

    def is_real(self):
        """True if ``f == f.conjugate()`` (the symbol is real-valued on the diagonal)."""
        return self == self.conjugate()

    # algebra --------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, PolyFunction):
            return PolyFunction.constant(other, self._nvars)
        if other._nvars != self._nvars:
            raise ValueError("variable counts differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return PolyFunction(out, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return PolyFunction({k: -c for k, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, PolyFunction):
            c = _coerce(other)
            return PolyFunction({k: v * c for k, v in self._terms.items()}, self._nvars)
        other = self._check(other)
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple((a + c, b + d) for (a, b), (c, d) in zip(k1, k2))
                prod = c1 * c2
                out[key] = out[key] + prod if key in out else prod
        return PolyFunction(out, self._nvars)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = PolyFunction.constant(1, self._nvars)
        for _ in range(n):
            result = result * self
        return result

    def conjugate(self):
        """Pointwise complex conjugate: swaps the roles of ``z*`` and ``z``."""
        return PolyFunction(
            {tuple((k, j) for j, k in key): _conj(c) for key, c in self._terms.items()},
            self._nvars,
        )

    def map_coefficients(self, fn):
        return PolyFunction({k: fn(c) for k, c in self._terms.items()}, self._nvars)

    def to_complex(self):
        """Copy with every coefficient converted to a Python ``complex``."""
        return self.map_coefficients(complex)

    def embed(self, variable, variable_count):
        """Place a one-variable polynomial at slot ``variable`` of a larger set."""
        if self._nvars != 1:
            raise ValueError("embed expects a one-variable polynomial")
        out = {}
        for ((j, k),), c in self._terms.items():
            key = [(0, 0)] * variable_count
            key[variable] = (j, k)
            out[tuple(key)] = c
        return PolyFunction(out, variable_count)

    def evaluate(self, conj_values, values):
        """Evaluate with ``z_i* -> conj_values[i]`` and ``z_i -> values[i]`` independently.

        For a single variable scalars are accepted.
        """
        if not isinstance(conj_values, (list, tuple)):
            conj_values = [conj_values]
        if not isinstance(values, (list, tuple)):
            values = [values]
        total = 0
        for key, c in self._terms.items():
            term = c
            for (j, k), u, v in zip(key, conj_values, values):
                if j:
                    term = term * u**j
                if k:
                    term = term * v**k
            total = total + term
        return total

    def __call__(self, z):
        """Evaluate on the diagonal ``z* = conj(z)``."""
        zs = z if isinstance(z, (list, tuple)) else [z]
        return self.evaluate([complex(x).conjugate() for x in zs], [complex(x) for x in zs])

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PolyFunction):
            if isinstance(other, (numbers.Number, GaussianRational)):
                other = PolyFunction.constant(other, self._nvars)
            else:
                return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self._nvars, frozenset(self._terms.items())))

    # text / json ----------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: descending total degree, then descending powers."""

        def order(item):
            key = item[0]
            flat = tuple(x for pair in key for x in pair)
            return (-sum(flat), tuple(-x for x in flat))

        return sorted(self._terms.items(), key=order)

    def variable_names(self):
        if self._nvars == 1:
            return ["z"]
        return [f"z{i + 1}" for i in range(self._nvars)]

    def monomial_text(self, key):
        parts = []
        for name, (j, k) in zip(self.variable_names(), key):
            parts.append(_pair_text(name + "*", j, name, k))
        return " ".join(p for p in parts if p)

    def to_text(self):
        return format_terms(
            ((c, self.monomial_text(k)) for k, c in self.sorted_terms())
        )

    __str__ = to_text

    def __repr__(self):
        return f"PolyFunction({self.to_text()!r}, variable_count={self._nvars})"

    def to_json(self):
        terms = []
        for key, c in self.sorted_terms():
            terms.append({"coeff": coeff_to_json(c), "powers": [list(p) for p in key]})
        return {"variables": self._nvars, "terms": terms}

    @classmethod
    def from_json(cls, obj):
        terms = {}
        for t in obj["terms"]:
            terms[tuple(tuple(p) for p in t["powers"])] = coeff_from_json(t["coeff"])
        return cls(terms, obj["variables"])


def _pair_text(star_name, j, name, k):
    """``z*^2 z``-style text for one variable (or one mode)."""
    left = "" if j == 0 else (star_name if j == 1 else f"{star_name}^{j}")
    right = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
    if left and right:
        sep = "" if j == 1 else " "
        return left + sep + right
    return left or right


def coeff_to_json(c):
    if isinstance(c, GaussianRational):
        return c.to_json()
    c = complex(c)
    return {"re": c.real, "im": c.imag}


def coeff_from_json(obj):
    if isinstance(obj["re"], list):
        return GaussianRational(Fraction(*obj["re"]), Fraction(*obj["im"]))
    return complex(obj["re"], obj["im"])


def _float_text(c):
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    return f"({c.real!r}{c.imag:+}i)"


def format_terms(pairs):
    """Join ``(coefficient, monomial_text)`` pairs into ``c m + c m - ...`` text.

    An empty monomial text means the constant term. Exact coefficients use
    :func:`format_coefficient`; complex coefficients with both parts nonzero
    are parenthesised so the text parses back unambiguously.
    """
    out = []
    for c, mono in pairs:
        exact = isinstance(c, GaussianRational)
        if exact and c.is_real():
            neg = c.re < 0
            mag = format_coefficient(-c if neg else c)
        elif exact and c.re == 0:
            neg = c.im < 0
            mag = format_coefficient(-c if neg else c)
        elif exact:
            neg = False
            mag = f"({format_coefficient(c)})"
        else:
            neg = False
            mag = _float_text(c)
        if mono:
            body = mono if mag == "1" else f"{mag} {mono}"
        else:
            body = mag
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"
