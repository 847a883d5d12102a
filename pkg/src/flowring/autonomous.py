"""Flow coefficient sequences of y' = f(y) and their ring operations.

For a field f the sequence (A_0, A_1, A_2, ...) holds the coefficients of
t^n/n! in the truncated series solution: A_0 = x, A_1 = f, and

    A_{n+1} = f * d(A_n)

with d the series derivative.  Each derivative costs one honest x-order,
so term n is known to order N - (n - 1) and the bookkeeping below never
claims more.  The same sequence has a second, independent computation
path through Bell polynomials: A_{n+1} = Y_n(A_1..A_n; f', .., f^(n)).

Sums and products of sequences pull back to the generating fields:
box_plus(f, g) is the sequence of f + g and box_dot(f, g) the sequence
of f * g.  The interaction terms H_n measure how far term n of a sum is
from being additive: A_n(f+g) = A_n(f) + A_n(g) + H_n(f, g), with H_1 = 0
(the first term of a sum field carries no interaction) and

    H_{n+1} = f d(A_n(g)) + g d(A_n(f)) + (f + g) d(H_n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bell import iter_partitions, partition_weight
from .errors import (
    DomainMismatchError,
    OrderExhaustedError,
    OrderMismatchError,
    OutOfRangeError,
)
from .hurwitz import HurwitzSeries, add_truncating, mul_truncating


class AutonomousSequence:
    """The truncated sequence (A_0 .. A_M) generated by a field."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        terms = tuple(terms)
        if len(terms) < 2:
            raise OutOfRangeError("a sequence needs at least terms A_0 and A_1")
        self.field = field
        self.terms = terms

    @property
    def order_t(self):
        return len(self.terms) - 1

    @property
    def domain(self):
        return self.field.domain

    def __eq__(self, other):
        if not isinstance(other, AutonomousSequence):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.terms))

    def __repr__(self):
        return f"AutonomousSequence[M={self.order_t}, field order {self.field.order}]"

    def is_zero(self):
        """True when every term past A_0 vanishes (the sequence of f = 0)."""
        return all(t.is_zero() for t in self.terms[1:])

    def to_json_dict(self):
        return {
            "field": self.field.to_json_dict(),
            "orderT": self.order_t,
            "terms": [t.to_json_dict() for t in self.terms],
        }

    @classmethod
    def from_json_dict(cls, payload):
        field = HurwitzSeries.from_json_dict(payload["field"])
        terms = [HurwitzSeries.from_json_dict(t) for t in payload["terms"]]
        seq = cls(field, terms)
        if seq.order_t != payload["orderT"]:
            raise OrderMismatchError("orderT does not match the number of terms")
        return seq


def autonomous_sequence(f, order_t):
    """Terms A_0 .. A_M via the product recursion A_{n+1} = f * d(A_n)."""
    _check_depth(f, order_t)
    terms = [HurwitzSeries.x(f.order, f.domain), f]
    for _ in range(order_t - 1):
        terms.append(mul_truncating(f, terms[-1].derivative()))
    return AutonomousSequence(f, terms)


def autonomous_sequence_bell(f, order_t):
    """The same terms through partitions and Bell polynomial evaluation.

    Term n+1 collects, over every partition of n, the integer partition
    weight times the product of earlier terms A_m (one factor per part of
    size m) times the k-th derivative of f, k the partition length.  The
    factors carry different honest orders, so products trim pairwise and
    the final sum trims to the common order N - n.
    """
    _check_depth(f, order_t)
    derivs = [f]
    for _ in range(order_t - 1):
        derivs.append(derivs[-1].derivative())
    terms = [HurwitzSeries.x(f.order, f.domain), f]
    for n in range(1, order_t):
        monomials = []
        for j in iter_partitions(n):
            k = sum(j)
            factors = [derivs[k]]
            for m, jm in enumerate(j, start=1):
                factors.extend([terms[m]] * jm)
            factors.sort(key=lambda s: s.order)
            prod = factors[0]
            for factor in factors[1:]:
                prod = mul_truncating(prod, factor)
            monomials.append(prod.scale(partition_weight(j)))
        order = min(m.order for m in monomials)
        acc = HurwitzSeries.zeros(order, f.domain)
        for m in monomials:
            acc = acc + m.truncate(order)
        terms.append(acc)
    return AutonomousSequence(f, terms)


def box_plus(a, b):
    """Sum in the sequence ring: the sequence of the field a.field + b.field."""
    _check_match(a, b)
    return autonomous_sequence(a.field + b.field, a.order_t)


def box_dot(a, b):
    """Product in the sequence ring: the sequence of a.field * b.field."""
    _check_match(a, b)
    return autonomous_sequence(a.field * b.field, a.order_t)


def scalar_action(value, seq):
    """Scale term n by value**n; equals the sequence of the scaled field."""
    domain = seq.domain
    value = domain.coerce(value)
    terms = [seq.terms[0]]
    power = domain.one()
    for term in seq.terms[1:]:
        power = power * value
        terms.append(term.scale(power))
    return AutonomousSequence(seq.field.scale(value), terms)


@dataclass(frozen=True)
class InteractionTerm:
    """H_n together with its index; satisfies A_n(f+g) - A_n(f) - A_n(g) = H_n."""

    index: int
    series: HurwitzSeries


def sum_interaction_terms(f, g, order_t):
    """H_1 .. H_M from the recurrence, for fields of equal order and domain."""
    if f.domain is not g.domain:
        raise DomainMismatchError("interaction terms need one domain")
    if f.order != g.order:
        raise OrderMismatchError("interaction terms need equal field orders")
    if order_t < 2:
        raise OutOfRangeError("interaction terms are defined for order_t >= 2")
    _check_depth(f, order_t)
    seq_f = autonomous_sequence(f, order_t)
    seq_g = autonomous_sequence(g, order_t)
    total = f + g
    h = [None, HurwitzSeries.zeros(f.order, f.domain)]
    for n in range(1, order_t):
        t1 = mul_truncating(f, seq_g.terms[n].derivative())
        t2 = mul_truncating(g, seq_f.terms[n].derivative())
        t3 = mul_truncating(total, h[n].derivative())
        h.append(add_truncating(add_truncating(t1, t2), t3))
    return [InteractionTerm(n, h[n]) for n in range(1, order_t + 1)]


def _check_depth(f, order_t):
    if order_t < 1:
        raise OutOfRangeError("order_t must be at least 1")
    if f.order < order_t:
        raise OrderExhaustedError(
            f"field order {f.order} cannot support {order_t} sequence terms"
        )


def _check_match(a, b):
    if a.domain is not b.domain:
        raise DomainMismatchError("sequence operands come from different domains")
    if a.order_t != b.order_t or a.field.order != b.field.order:
        raise OrderMismatchError("sequence operands have different truncation orders")
