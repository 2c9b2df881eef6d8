"""Exact complex numbers with rational real and imaginary parts."""

from fractions import Fraction
import numbers


class GaussianRational:
    """Complex number ``re + im*i`` with :class:`fractions.Fraction` parts.

    Instances are immutable and hashable. Arithmetic with ``int``,
    ``Fraction`` and other ``GaussianRational`` values stays exact; mixing in a
    Python ``float``/``complex`` degrades to ``complex``.

    >>> z = GaussianRational(1, 2)
    >>> z * z.conjugate()
    GaussianRational(5)
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            re, im = re._re, re._im
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    real = re
    imag = im

    @classmethod
    def coerce(cls, value):
        """Convert ``value`` to a GaussianRational, exactly.

        Accepts ints, Fractions, GaussianRationals, and ``complex`` values whose
        parts are exactly representable (floats go through
        ``Fraction(float)``, which is exact for binary floats).
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, numbers.Rational):
            return cls(value)
        if isinstance(value, (float, complex, numbers.Complex)):
            c = complex(value)
            return cls(Fraction(c.real), Fraction(c.imag))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # arithmetic -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, numbers.Rational):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) + other
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) - other
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return other - complex(self)
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) * other
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) / other
            return NotImplemented
        n = o._re * o._re + o._im * o._im
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return other / complex(self)
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return complex(self) ** n
        if n < 0:
            return GaussianRational(1) / (self ** -n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self._re, -self._im)

    def abs2(self):
        """Exact squared modulus."""
        return self._re * self._re + self._im * self._im

    # comparison / conversion ---------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def is_real(self):
        return self._im == 0

    def _sympy_(self):
        import sympy

        return sympy.Rational(self._re.numerator, self._re.denominator) + sympy.I * sympy.Rational(
            self._im.numerator, self._im.denominator
        )

    def __repr__(self):
        if self._im == 0:
            return f"GaussianRational({_frac(self._re)})"
        return f"GaussianRational({_frac(self._re)}, {_frac(self._im)})"

    def __str__(self):
        return format_coefficient(self)

    def to_json(self):
        return {
            "re": [self._re.numerator, self._re.denominator],
            "im": [self._im.numerator, self._im.denominator],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(Fraction(*obj["re"]), Fraction(*obj["im"]))


def _frac(q):
    return str(q.numerator) if q.denominator == 1 else f"Fraction({q.numerator}, {q.denominator})"


def _rat(q):
    return str(q)


def format_coefficient(c):
    """Text form ``p/q + (r/s)i`` used by the printers and accepted by the parser."""
    c = GaussianRational.coerce(c)
    re, im = c.re, c.im
    if im == 0:
        return _rat(re)
    if im.denominator == 1:
        mag = "" if abs(im) == 1 else str(abs(im))
    else:
        mag = f"({abs(im)})"
    imag = f"{mag}i"
    if re == 0:
        return imag if im > 0 else f"-{imag}"
    return f"{_rat(re)} {'+' if im > 0 else '-'} {imag}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
