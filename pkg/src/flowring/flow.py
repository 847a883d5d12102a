"""Truncated flow series of y' = f(y), their ring, and closed forms.

A flow series wraps the coefficient sequence of a field: the value at
time t is sum A_n(x) t^n/n! with A_0 = x, so every flow fixes x at t = 0.
Flows add and multiply through their generating fields, with units x
(field 0) and x + t (field 1).

The semigroup and derivation checks expand both sides of the respective
identities as truncated bivariate series whose coefficients are x-series.
Substituting one flow into another is a Horner loop over the outer
series; a composition coefficient at outer degree p is honest only to
x-order K - p when the outer series is truncated at K (each degree in
the new variable consumes one x-order of the outer series), and the code
clamps to that bound.  Comparisons run over indices both sides honestly
know, never over fabricated tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .autonomous import (
    AutonomousSequence,
    autonomous_sequence,
    box_dot,
    box_plus,
    scalar_action,
)
from .errors import (
    ClosedFormDomainError,
    OrderExhaustedError,
    OutOfRangeError,
)
from .expr import Exp, polynomial_coefficients
from .hurwitz import HurwitzSeries, add_truncating, mul_truncating
from .scalars import GaussianRational, format_scalar, parse_scalar


class FlowSeries:
    """Truncated series solution of y' = f(y), y(0) = x."""

    __slots__ = ("source",)

    def __init__(self, source):
        self.source = source

    @property
    def field(self):
        return self.source.field

    @property
    def tcoeffs(self):
        return self.source.terms

    @property
    def order_t(self):
        return self.source.order_t

    @property
    def domain(self):
        return self.source.domain

    def __eq__(self, other):
        if not isinstance(other, FlowSeries):
            return NotImplemented
        return self.source == other.source

    def __hash__(self):
        return hash(self.source)

    def __repr__(self):
        return f"FlowSeries[M={self.order_t}, field order {self.field.order}]"

    def eval_at(self, t, x):
        """Numeric sum of A_n(x) t^n/n! over the known t-orders."""
        acc = 0.0
        tpow = 1.0
        fact = 1
        for n, term in enumerate(self.tcoeffs):
            if n > 0:
                tpow *= t
                fact *= n
            acc = acc + term.eval_at(x) * (tpow / fact)
        return acc

    def to_json_dict(self):
        return {
            "field": self.field.to_json_dict(),
            "orderT": self.order_t,
            "tcoeffs": [t.to_json_dict() for t in self.tcoeffs],
        }

    @classmethod
    def from_json_dict(cls, payload):
        field = HurwitzSeries.from_json_dict(payload["field"])
        terms = [HurwitzSeries.from_json_dict(t) for t in payload["tcoeffs"]]
        seq = AutonomousSequence(field, terms)
        if seq.order_t != payload["orderT"]:
            raise OutOfRangeError("orderT does not match the number of tcoeffs")
        return cls(seq)


def flow_series(field, order_t):
    """The flow of a field, to t-order M (needs field order >= M)."""
    return FlowSeries(autonomous_sequence(field, order_t))


def flow_boxplus(a, b):
    """Flow of the sum field; unit is the flow of 0, which is x."""
    return FlowSeries(box_plus(a.source, b.source))


def flow_boxdot(a, b):
    """Flow of the product field; unit is the flow of 1, which is x + t."""
    return FlowSeries(box_dot(a.source, b.source))


def time_scale(flow, value):
    """Flow of the scaled field: t-coefficient n picks up value**n."""
    return FlowSeries(scalar_action(value, flow.source))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an identity check: a verdict plus the first failing index."""

    passed: bool
    first_failure: object = None
    detail: str = ""

    def __bool__(self):
        return self.passed


def _mul_bivar(u, v, cap):
    """Binomial convolution of coefficient lists in the outer variable.

    Coefficients are x-series of possibly different honest orders;
    pairwise products trim to the shorter operand.
    """
    comb = math.comb
    out = []
    top = min(len(u) + len(v) - 2, cap)
    for p in range(top + 1):
        acc = None
        for p1 in range(max(0, p - len(v) + 1), min(p, len(u) - 1) + 1):
            term = mul_truncating(u[p1], v[p - p1])
            c = comb(p, p1)
            if c != 1:
                term = term.scale(c)
            acc = term if acc is None else add_truncating(acc, term)
        out.append(acc)
    return out


def _compose(outer, inner, cap):
    """Substitute the flow-like series ``inner`` into the x-series ``outer``.

    ``inner`` is a list of x-series, the coefficients of t^p/p!.  The
    result is the same kind of list, of length cap + 1.  Horner over the
    ordinary coefficients of ``outer``; degree p of the result is
    clamped to x-order outer.order - p, applied early so intermediate
    products stay small (the clamp is provably lossless for lower
    indices).
    """
    domain = outer.domain
    budget = inner[0].order
    k_top = outer.order
    ordinary = outer.to_polynomial()
    result = [HurwitzSeries.constant(ordinary[k_top], budget, domain)]
    for j in range(k_top - 1, -1, -1):
        result = _mul_bivar(result, inner, cap)
        result[0] = add_truncating(
            result[0], HurwitzSeries.constant(ordinary[j], budget, domain)
        )
        result = [
            s.truncate(min(s.order, k_top - p)) for p, s in enumerate(result)
        ]
    return result


def semigroup_check(field, order_t):
    """Exact truncated check that flowing for s then t equals flowing for s + t.

    Both sides expand as series in (s, t) with x-series coefficients.
    The right side has A_{p+q} at s^p t^q/(p! q!); the left substitutes
    the time-s flow into each A_q.  Returns the first failing (p, q), if
    any, over all honestly known coefficients with p + q <= order_t.
    """
    if field.order < 2 * order_t:
        raise OrderExhaustedError(
            f"semigroup check at order {order_t} needs field order >= {2 * order_t}"
        )
    seq = autonomous_sequence(field, order_t)
    inner = list(seq.terms)
    for q in range(order_t + 1):
        comp = _compose(seq.terms[q], inner, order_t - q)
        for p in range(order_t - q + 1):
            lhs = comp[p]
            rhs = seq.terms[p + q]
            m = min(lhs.order, rhs.order)
            if lhs.truncate(m) != rhs.truncate(m):
                return CheckReport(False, (p, q), f"mismatch at s^{p} t^{q}")
    return CheckReport(True)


def derivation_identity_check(field, order_t):
    """Check f * dPhi/dx = dPhi/dt = f(Phi), exactly on the truncations.

    The first equality is the term recursion lifted to the flow; the
    second compares the t-shifted coefficients against the composition
    of the field with the flow.
    """
    if field.order < order_t + 1:
        raise OrderExhaustedError(
            f"derivation check at order {order_t} needs field order >= {order_t + 1}"
        )
    seq = autonomous_sequence(field, order_t)
    for n in range(order_t):
        lhs = mul_truncating(field, seq.terms[n].derivative())
        rhs = seq.terms[n + 1]
        m = min(lhs.order, rhs.order)
        if lhs.truncate(m) != rhs.truncate(m):
            return CheckReport(False, (n, "x-derivative"), f"f*d(A_{n}) != A_{n + 1}")
    comp = _compose(field, list(seq.terms), order_t - 1)
    for n in range(order_t):
        lhs = comp[n]
        rhs = seq.terms[n + 1]
        m = min(lhs.order, rhs.order)
        if lhs.truncate(m) != rhs.truncate(m):
            return CheckReport(False, (n, "composition"), f"(f o Phi)_{n} != A_{n + 1}")
    return CheckReport(True)


def flow_combination_check(f, g, order_t, mode):
    """Composing the combined flow in time equals combining at the shifted time.

    With h the sum (or product) of the fields, the time composition
    Phi_t o Phi_s of the flow of h must equal the flow of h at time
    s + t, and the combined flow must be the box sum (or box product)
    of the component flows.  Both facts are checked exactly.
    """
    if mode not in ("sum", "product"):
        raise OutOfRangeError(f"unknown combination mode {mode!r}")
    F = flow_series(f, order_t)
    G = flow_series(g, order_t)
    combined = flow_boxplus(F, G) if mode == "sum" else flow_boxdot(F, G)
    h = f + g if mode == "sum" else f * g
    if combined != flow_series(h, order_t):
        return CheckReport(False, mode, "combined flow differs from the direct flow")
    return semigroup_check(h, order_t)


class FlowKind(Enum):
    AFFINE = "affine"
    EXPONENTIAL = "exponential"
    POWER = "power"
    EXPFIELD = "expfield"
    IRREDUCIBLE_QUADRATIC = "irreducible_quadratic"


@dataclass(frozen=True)
class ClosedFormFlow:
    """A catalog entry with an explicit formula for the flow.

    kind and params:
      AFFINE (a,):                 field a,            flow x + a t
      EXPONENTIAL (a, r):          field a (x - r),    flow (x - r) e^(a t) + r
      POWER (a, k), k >= 2:        field a x^k,        flow x / (1 - a (k-1) x^(k-1) t)^(1/(k-1))
      EXPFIELD (a,), a != 0:       field e^(a x),      flow x + (1/a) ln(1 / (1 - a t e^(a x)))
      IRREDUCIBLE_QUADRATIC (b, c) with 4c - b^2 > 0:  field x^2 - b x + c,
          flow sqrt(d) (x - b/2 + sqrt(d) tan(sqrt(d) t)) / (sqrt(d) - (x - b/2) tan(sqrt(d) t)) + b/2,
          d = (4c - b^2) / 4
    """

    kind: FlowKind
    params: tuple

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(Fraction(p) for p in self.params))
        kind, params = self.kind, self.params
        sizes = {
            FlowKind.AFFINE: 1,
            FlowKind.EXPONENTIAL: 2,
            FlowKind.POWER: 2,
            FlowKind.EXPFIELD: 1,
            FlowKind.IRREDUCIBLE_QUADRATIC: 2,
        }
        if len(params) != sizes[kind]:
            raise OutOfRangeError(f"{kind.value} takes {sizes[kind]} parameter(s)")
        if kind is FlowKind.POWER:
            if params[1].denominator != 1 or params[1] < 2:
                raise OutOfRangeError("power flows need an integer exponent k >= 2")
        if kind is FlowKind.EXPFIELD and params[0] == 0:
            raise OutOfRangeError("exponential fields need a nonzero scale")
        if kind is FlowKind.IRREDUCIBLE_QUADRATIC:
            b, c = params
            if 4 * c - b * b <= 0:
                raise OutOfRangeError(
                    "quadratic catalog entries need 4c - b^2 > 0; factor reducible ones first"
                )

    def field_text(self):
        a = self.params[0]
        if self.kind is FlowKind.AFFINE:
            return format_scalar(a)
        if self.kind is FlowKind.EXPONENTIAL:
            r = self.params[1]
            return f"{format_scalar(a)}*(x-{format_scalar(r)})" if r else f"{format_scalar(a)}*x"
        if self.kind is FlowKind.POWER:
            return f"{format_scalar(a)}*x^{self.params[1]}"
        if self.kind is FlowKind.EXPFIELD:
            return f"exp({format_scalar(a)}*x)"
        b, c = self.params
        if b == 0:
            return f"x^2+{format_scalar(c)}"
        return f"x^2-{format_scalar(b)}*x+{format_scalar(c)}"

    def to_json_dict(self):
        return {"kind": self.kind.value, "params": [format_scalar(p) for p in self.params]}

    @classmethod
    def from_json_dict(cls, payload):
        params = tuple(parse_scalar(p) for p in payload["params"])
        return cls(FlowKind(payload["kind"]), params)


def closed_form_eval(cf, t, x):
    """IEEE double value of the closed form at (t, x), inside its domain."""
    kind = cf.kind
    if kind is FlowKind.AFFINE:
        return x + float(cf.params[0]) * t
    if kind is FlowKind.EXPONENTIAL:
        a, r = (float(p) for p in cf.params)
        return (x - r) * math.exp(a * t) + r
    if kind is FlowKind.POWER:
        a = float(cf.params[0])
        k = int(cf.params[1])
        radicand = 1.0 - a * (k - 1) * x ** (k - 1) * t
        if radicand <= 0.0:
            raise ClosedFormDomainError(
                f"1 - a(k-1)x^(k-1)t = {radicand:g} is not positive"
            )
        return x / radicand ** (1.0 / (k - 1))
    if kind is FlowKind.EXPFIELD:
        a = float(cf.params[0])
        u = 1.0 - a * t * math.exp(a * x)
        if u <= 0.0:
            raise ClosedFormDomainError(f"1 - a t e^(a x) = {u:g} is not positive")
        return x + math.log(1.0 / u) / a
    b, c = (float(p) for p in cf.params)
    d = (4.0 * c - b * b) / 4.0
    root = math.sqrt(d)
    if abs(root * t) >= math.pi / 2:
        raise ClosedFormDomainError(f"|sqrt(d) t| = {abs(root * t):g} leaves the tangent branch")
    tan = math.tan(root * t)
    denom = root - (x - b / 2.0) * tan
    if denom == 0.0:
        raise ClosedFormDomainError("sqrt(d) - (x - b/2) tan(sqrt(d) t) vanishes")
    return root * (x - b / 2.0 + root * tan) / denom + b / 2.0


def match_closed_form(node):
    """Catalog entry for an expression, or None.

    Matches constants, affine fields, single monomials a x^k, exp(a x)
    with rational a, and monic quadratics with no real roots.
    """
    coeffs = polynomial_coefficients(node)
    if coeffs is None:
        if isinstance(node, Exp) and not isinstance(node.scale, GaussianRational) \
                and node.scale != 0:
            return ClosedFormFlow(FlowKind.EXPFIELD, (node.scale,))
        return None
    if any(isinstance(c, GaussianRational) and c.im != 0 for c in coeffs):
        return None
    coeffs = [c.re if isinstance(c, GaussianRational) else c for c in coeffs]
    degree = len(coeffs) - 1
    if degree == 0:
        return ClosedFormFlow(FlowKind.AFFINE, (coeffs[0],))
    if degree == 1:
        a = coeffs[1]
        return ClosedFormFlow(FlowKind.EXPONENTIAL, (a, -coeffs[0] / a))
    if all(c == 0 for c in coeffs[:-1]):
        return ClosedFormFlow(FlowKind.POWER, (coeffs[-1], degree))
    if degree == 2 and coeffs[2] == 1:
        b, c = -coeffs[1], coeffs[0]
        if 4 * c - b * b > 0:
            return ClosedFormFlow(FlowKind.IRREDUCIBLE_QUADRATIC, (b, c))
    return None


EQUILIBRIUM_TOLERANCE = 1e-12


class PointKind(Enum):
    EQUILIBRIUM = "equilibrium"
    REGULAR = "regular"


@dataclass(frozen=True)
class OrbitPoint:
    """Classification of a basepoint: the orbit through an equilibrium is constant."""

    basepoint: object
    kind: PointKind
    exact: bool


def classify_point(field, x0):
    """Equilibrium iff the field vanishes at x0.

    Series and polynomial expressions are evaluated exactly; expressions
    with exp/sin/cos fall back to a numeric test at tolerance 1e-12 and
    are flagged as such.
    """
    from .oracle import eval_field  # local import keeps the oracle independent

    if isinstance(field, HurwitzSeries):
        value = field.eval_exact(x0)
        kind = PointKind.EQUILIBRIUM if not value else PointKind.REGULAR
        return OrbitPoint(x0, kind, True)
    coeffs = polynomial_coefficients(field)
    if coeffs is not None:
        acc = Fraction(0)
        point = Fraction(x0) if not isinstance(x0, GaussianRational) else x0
        power = Fraction(1)
        for c in coeffs:
            acc = acc + c * power
            power = power * point
        kind = PointKind.EQUILIBRIUM if not acc else PointKind.REGULAR
        return OrbitPoint(x0, kind, True)
    value = eval_field(field, float(x0))
    kind = PointKind.EQUILIBRIUM if abs(value) <= EQUILIBRIUM_TOLERANCE else PointKind.REGULAR
    return OrbitPoint(x0, kind, False)


@dataclass(frozen=True)
class DecompositionResult:
    combined: FlowSeries
    components: tuple
    matches_direct: bool


def decompose_flow(parts, mode, order_t):
    """Flow of a sum or product of fields, assembled from component flows.

    Returns the combined flow, the component flows, and whether the
    combination equals the directly computed flow of the folded field
    (it must; the flag makes the CLI verdict explicit).
    """
    if mode not in ("sum", "product"):
        raise OutOfRangeError(f"unknown decomposition mode {mode!r}")
    if not parts:
        raise OutOfRangeError("decompose needs at least one part")
    components = tuple(flow_series(p, order_t) for p in parts)
    combined = components[0]
    folded = parts[0]
    for part, component in zip(parts[1:], components[1:]):
        if mode == "sum":
            combined = flow_boxplus(combined, component)
            folded = folded + part
        else:
            combined = flow_boxdot(combined, component)
            folded = folded * part
    direct = flow_series(folded, order_t)
    return DecompositionResult(combined, components, combined == direct)
