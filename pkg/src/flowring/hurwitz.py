"""Truncated Hurwitz series: coefficient vectors of sum a_n x^n / n!.

A series here is a vector (a_0 .. a_N) of exact scalars.  The vector is
simultaneously the sequence view and the series view: index n holds the
n-th derivative at 0.  Coefficients beyond the truncation order N are
unknown rather than zero, so binary operations insist on equal orders,
differentiation shortens the result by one index, and nothing ever pads
with fabricated zeros.  Use ``truncate`` to trim deliberately and the
``*_truncating`` helpers to combine series of different honest lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DomainMismatchError,
    NotAUnitError,
    OrderExhaustedError,
    OrderMismatchError,
    OutOfRangeError,
)
from .scalars import Domain, GaussianRational, format_scalar, parse_scalar


def _saturating_float(value):
    try:
        return float(value)
    except OverflowError:
        return math.inf if value > 0 else -math.inf


class HurwitzSeries:
    """Truncated exponential generating function over an exact domain.

    Addition is componentwise.  ``*`` is the binomial convolution

        (a * b)_n = sum_{k=0..n} C(n, k) a_k b_{n-k},

    the sequence image of multiplying the series views.  ``hadamard`` is
    the componentwise product, with unit (1, 1, 1, ...).  The unit of
    ``*`` is the constant series e = (1, 0, 0, ...).

    Values are immutable after construction; every operation returns a
    new series, so instances are safe to share across threads.
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs, domain):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise OutOfRangeError("a series needs at least one coefficient")
        self.coeffs = coeffs
        self.domain = domain

    # -- constructors -------------------------------------------------

    @classmethod
    def make(cls, values, domain=Domain.RATIONAL):
        """Build a series, coercing each entry into ``domain``."""
        return cls([domain.coerce(v) for v in values], domain)

    @classmethod
    def zeros(cls, order, domain=Domain.RATIONAL):
        zero = domain.zero()
        return cls([zero] * (order + 1), domain)

    @classmethod
    def constant(cls, value, order, domain=Domain.RATIONAL):
        coeffs = [domain.coerce(value)] + [domain.zero()] * order
        return cls(coeffs, domain)

    @classmethod
    def x(cls, order, domain=Domain.RATIONAL):
        """The identity series x, coefficients (0, 1, 0, ...)."""
        if order < 1:
            raise OutOfRangeError("the series x needs order >= 1")
        coeffs = [domain.zero()] * (order + 1)
        coeffs[1] = domain.one()
        return cls(coeffs, domain)

    @classmethod
    def ones(cls, order, domain=Domain.RATIONAL):
        """Unit of the Hadamard product, (1, 1, 1, ...)."""
        return cls([domain.one()] * (order + 1), domain)

    @classmethod
    def exp(cls, base, order, domain=None):
        """Geometric sequence (1, a, a^2, ...): the series of e**(a x)."""
        if domain is None:
            domain = Domain.of(base)
        base = domain.coerce(base)
        coeffs = [domain.one()]
        for _ in range(order):
            coeffs.append(coeffs[-1] * base)
        return cls(coeffs, domain)

    @classmethod
    def from_polynomial(cls, ordinary, order, domain=Domain.RATIONAL):
        """Series of a polynomial given by ordinary coefficients c_k x^k."""
        coeffs = [domain.zero()] * (order + 1)
        fact = 1
        for k, c in enumerate(ordinary):
            if k > 0:
                fact *= k
            if k > order:
                break
            coeffs[k] = domain.coerce(c) * fact
        return cls(coeffs, domain)

    # -- basic views ---------------------------------------------------

    @property
    def order(self):
        return len(self.coeffs) - 1

    def to_polynomial(self):
        """Ordinary coefficients a_k / k! of the truncated series."""
        out = []
        fact = 1
        for k, c in enumerate(self.coeffs):
            if k > 0:
                fact *= k
            out.append(c / fact)
        return out

    def is_zero(self):
        return all(not c for c in self.coeffs)

    def __repr__(self):
        shown = " ".join(format_scalar(c) for c in self.coeffs[:8])
        if len(self.coeffs) > 8:
            shown += " ..."
        return f"HurwitzSeries[{self.domain.value}, N={self.order}]({shown})"

    def __eq__(self, other):
        if not isinstance(other, HurwitzSeries):
            return NotImplemented
        return self.domain is other.domain and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.domain))

    def _check(self, other):
        if not isinstance(other, HurwitzSeries):
            raise TypeError(f"expected a HurwitzSeries, got {other!r}")
        if self.domain is not other.domain:
            raise DomainMismatchError(
                f"domains differ: {self.domain.value} vs {other.domain.value}"
            )
        if len(self.coeffs) != len(other.coeffs):
            raise OrderMismatchError(
                f"orders differ: {self.order} vs {other.order}"
            )

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        self._check(other)
        return HurwitzSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.domain
        )

    def __sub__(self, other):
        self._check(other)
        return HurwitzSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.domain
        )

    def __neg__(self):
        return HurwitzSeries([-a for a in self.coeffs], self.domain)

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        comb = math.comb
        out = []
        for n in range(len(a)):
            acc = a[0] * b[n]
            for k in range(1, n + 1):
                acc = acc + comb(n, k) * (a[k] * b[n - k])
            out.append(acc)
        return HurwitzSeries(out, self.domain)

    def hadamard(self, other):
        self._check(other)
        return HurwitzSeries(
            [a * b for a, b in zip(self.coeffs, other.coeffs)], self.domain
        )

    def scale(self, value):
        value = self.domain.coerce(value)
        return HurwitzSeries([value * a for a in self.coeffs], self.domain)

    def inverse(self):
        """Inverse under ``*``: b_0 = 1/a_0, b_n = -(1/a_0) sum C(n,h) a_h b_{n-h}."""
        a = self.coeffs
        if not a[0]:
            raise NotAUnitError("leading coefficient is zero; no inverse under *")
        comb = math.comb
        inv0 = self.domain.one() / a[0]
        b = [inv0]
        for n in range(1, len(a)):
            acc = None
            for h in range(1, n + 1):
                term = comb(n, h) * (a[h] * b[n - h])
                acc = term if acc is None else acc + term
            b.append(-inv0 * acc)
        return HurwitzSeries(b, self.domain)

    def derivative(self):
        """Left shift (a_{n+1}); the order shrinks by one."""
        if self.order == 0:
            raise OrderExhaustedError("cannot differentiate an order-0 series")
        return HurwitzSeries(self.coeffs[1:], self.domain)

    def truncate(self, order):
        """Drop coefficients above ``order``; never extends."""
        if order > self.order:
            raise OrderExhaustedError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        if order == self.order:
            return self
        if order < 0:
            raise OutOfRangeError("truncation order must be >= 0")
        return HurwitzSeries(self.coeffs[: order + 1], self.domain)

    def agrees_with(self, other):
        """Equality over the indices both sides honestly know."""
        if self.domain is not other.domain:
            return False
        m = min(len(self.coeffs), len(other.coeffs))
        return self.coeffs[:m] == other.coeffs[:m]

    def to_domain(self, domain):
        """Move between domains; dropping to rational requires real entries."""
        if domain is self.domain:
            return self
        if domain is Domain.GAUSSIAN:
            return HurwitzSeries([GaussianRational(c, 0) for c in self.coeffs], domain)
        out = []
        for c in self.coeffs:
            if isinstance(c, GaussianRational):
                if c.im != 0:
                    raise DomainMismatchError(f"coefficient {format_scalar(c)} is not real")
                c = c.re
            out.append(c)
        return HurwitzSeries(out, domain)

    # -- evaluation ----------------------------------------------------

    def eval_at(self, point):
        """Floating-point value of the truncated series at ``point``.

        Sums a_n point^n / n! Horner style; rational series at a real
        point yield a float, anything else a complex.  Values beyond
        double range become IEEE infinities rather than raising.
        """
        fact = 1
        terms = []
        for k, c in enumerate(self.coeffs):
            if k > 0:
                fact *= k
            exact = c / fact
            if isinstance(exact, GaussianRational):
                terms.append(complex(_saturating_float(exact.re), _saturating_float(exact.im)))
            else:
                terms.append(_saturating_float(exact))
        acc = terms[-1]
        for b in reversed(terms[:-1]):
            acc = acc * point + b
        return acc

    def eval_exact(self, point):
        """Exact value sum a_n point^n / n! of the truncated polynomial."""
        point = self.domain.coerce(point)
        acc = self.domain.zero()
        power = self.domain.one()
        fact = 1
        for k, c in enumerate(self.coeffs):
            if k > 0:
                power = power * point
                fact *= k
            acc = acc + c * power / fact
        return acc

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        return {
            "domain": self.domain.value,
            "orderX": self.order,
            "coeffs": [format_scalar(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, payload):
        domain = Domain(payload["domain"])
        coeffs = [parse_scalar(c, domain) for c in payload["coeffs"]]
        series = cls(coeffs, domain)
        if series.order != payload["orderX"]:
            raise OrderMismatchError(
                f"orderX {payload['orderX']} does not match {series.order} coefficients"
            )
        return series


@dataclass(frozen=True)
class ExpSequence:
    """A geometric sequence together with the base that generated it."""

    base: object
    series: HurwitzSeries


def exp_sequence(base, order, domain=None):
    series = HurwitzSeries.exp(base, order, domain)
    return ExpSequence(series.coeffs[1] if order >= 1 else base, series)


def mul_truncating(a, b):
    """Product after trimming both factors to the shorter honest order."""
    m = min(a.order, b.order)
    return a.truncate(m) * b.truncate(m)


def add_truncating(a, b):
    m = min(a.order, b.order)
    return a.truncate(m) + b.truncate(m)


def power_truncating(series, exponent):
    """exponent-fold truncating product; exponent 0 gives the unit e."""
    if exponent < 0:
        raise OutOfRangeError("series powers need a non-negative exponent")
    if exponent == 0:
        return HurwitzSeries.constant(1, series.order, series.domain)
    acc = series
    for _ in range(exponent - 1):
        acc = mul_truncating(acc, series)
    return acc
