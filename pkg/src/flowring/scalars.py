"""Exact coefficient scalars: rationals, Gaussian rationals, binomials.

Plain rationals are stdlib ``fractions.Fraction`` values, which already
keep the canonical form relied on everywhere else (reduced fraction,
positive denominator, arbitrary precision integers).  ``GaussianRational``
adds the degree-two extension by the imaginary unit.  The textual scalar
encoding used by the CLI and the JSON formats also lives here.
"""

from __future__ import annotations

import math
import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from .errors import DomainMismatchError, DomainRequiredError, OutOfRangeError

Rational = Fraction


class GaussianRational:
    """A value re + im*i with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, _RationalABC):
            return GaussianRational(value, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        conj = other.conjugate()
        prod = self * conj
        return GaussianRational(prod.re / n, prod.im / n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise OutOfRangeError("Gaussian rational powers need a non-negative integer exponent")
        result = GaussianRational(1, 0)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """The field norm re**2 + im**2, an exact Fraction."""
        return self.re * self.re + self.im * self.im


I = GaussianRational(0, 1)


class Domain(Enum):
    """Tag selecting the coefficient field of a computation."""

    RATIONAL = "rational"
    GAUSSIAN = "gaussian"

    def zero(self):
        return Fraction(0) if self is Domain.RATIONAL else GaussianRational(0)

    def one(self):
        return Fraction(1) if self is Domain.RATIONAL else GaussianRational(1)

    def coerce(self, value):
        """Convert ``value`` into this domain, or raise DomainMismatchError."""
        if self is Domain.RATIONAL:
            if isinstance(value, GaussianRational):
                raise DomainMismatchError("Gaussian scalar used in a rational computation")
            return Fraction(value)
        g = GaussianRational._coerce(value)
        if g is None:
            raise DomainMismatchError(f"cannot coerce {value!r} into {self.value}")
        return g

    @staticmethod
    def of(value):
        if isinstance(value, GaussianRational):
            return Domain.GAUSSIAN
        if isinstance(value, _RationalABC):
            return Domain.RATIONAL
        raise DomainMismatchError(f"{value!r} is not an exact scalar")


@lru_cache(maxsize=None)
def binomial(n, k):
    """Exact C(n, k); cached, valid for 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        raise OutOfRangeError(f"binomial({n}, {k}) is out of range")
    return math.comb(n, k)


def to_complex(value):
    """Double-precision complex view of an exact scalar."""
    if isinstance(value, GaussianRational):
        return complex(value)
    return complex(float(value), 0.0)


_RAT = r"-?\d+(?:/\d+)?"
_PURE_REAL_RE = re.compile(rf"^({_RAT})$")
_PURE_IMAG_RE = re.compile(r"^(-?)(\d+(?:/\d+)?)?i$")
_COMBO_RE = re.compile(rf"^({_RAT})([+-])(\d+(?:/\d+)?)?i$")


def format_scalar(value):
    """Canonical text for a scalar: "p/q", "p/q+r/si", "i", "-i", ...

    parse_scalar round-trips this output bit exactly.
    """
    if not isinstance(value, GaussianRational):
        return str(Fraction(value))
    if value.im == 0:
        return str(value.re)
    mag = abs(value.im)
    imag = "i" if mag == 1 else f"{mag}i"
    if value.re == 0:
        sign = "-" if value.im < 0 else ""
        return sign + imag
    sign = "+" if value.im > 0 else "-"
    return f"{value.re}{sign}{imag}"


def parse_scalar(text, domain=None):
    """Parse a scalar string; with a domain, coerce (or reject) accordingly."""
    compact = "".join(text.split())
    value = None
    m = _PURE_IMAG_RE.match(compact)
    if m:
        mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        value = GaussianRational(0, -mag if m.group(1) else mag)
    else:
        m = _COMBO_RE.match(compact)
        if m:
            mag = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            im = -mag if m.group(2) == "-" else mag
            value = GaussianRational(Fraction(m.group(1)), im)
        else:
            m = _PURE_REAL_RE.match(compact)
            if m:
                value = Fraction(compact)
    if value is None:
        raise ValueError(f"not a scalar literal: {text!r}")
    if domain is None:
        return value
    if domain is Domain.RATIONAL and isinstance(value, GaussianRational):
        raise DomainRequiredError(f"{text!r} needs the gaussian domain")
    return domain.coerce(value)
