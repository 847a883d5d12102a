import json
import math
import random
from fractions import Fraction

import pytest

from flowring.errors import (
    DomainMismatchError,
    NotAUnitError,
    OrderExhaustedError,
    OrderMismatchError,
)
from flowring.hurwitz import (
    ExpSequence,
    HurwitzSeries,
    add_truncating,
    exp_sequence,
    mul_truncating,
    power_truncating,
)
from flowring.scalars import Domain, GaussianRational
from flowring.verify import random_series, random_unit_series


def S(*values):
    return HurwitzSeries.make(values)


def test_addition_examples():
    assert S(1, 1, 1) + S(0, 0, 0) == S(1, 1, 1)
    assert S(1, 2, 4) + S(1, -2, -4) == S(2, 0, 0)
    cosh2 = HurwitzSeries.exp(1, 3) + HurwitzSeries.exp(-1, 3)
    assert cosh2 == S(2, 0, 2, 0)


def test_product_examples():
    e1 = HurwitzSeries.exp(1, 6)
    assert e1 * e1 == HurwitzSeries.exp(2, 6)
    e = HurwitzSeries.constant(1, 4)
    a = S(3, -1, 2, 0, 7)
    assert e * a == a
    x = S(0, 1, 0, 0)
    assert x * x == S(0, 0, 2, 0)


def test_hadamard_examples():
    a = S(5, -2, 7)
    assert a.hadamard(HurwitzSeries.ones(2)) == a
    assert HurwitzSeries.exp(2, 5).hadamard(HurwitzSeries.exp(3, 5)) == HurwitzSeries.exp(6, 5)
    assert S(1, 2, 3).hadamard(S(0, 0, 0)) == S(0, 0, 0)


def test_inverse_examples():
    assert HurwitzSeries.exp(1, 6).inverse() == HurwitzSeries.exp(-1, 6)
    e = HurwitzSeries.constant(1, 5)
    assert e.inverse() == e
    a = S(1, 1, 0, 0)
    inv = a.inverse()
    assert inv == S(1, -1, 2, -6)
    assert [inv.coeffs[n] for n in range(4)] == [(-1) ** n * math.factorial(n) for n in range(4)]
    assert a * inv == HurwitzSeries.constant(1, 3)
    with pytest.raises(NotAUnitError):
        S(0, 1, 2).inverse()


def test_inverse_cancels_for_random_units():
    rng = random.Random(5)
    for _ in range(20):
        a = random_unit_series(rng, 12)
        assert a * a.inverse() == HurwitzSeries.constant(1, 12)


def test_derivative_examples():
    e3 = HurwitzSeries.exp(3, 6)
    assert e3.derivative() == e3.scale(3).truncate(5)
    assert HurwitzSeries.constant(9, 4).derivative() == HurwitzSeries.zeros(3)
    assert S(0, 1, 0, -1, 0).derivative() == S(1, 0, -1, 0)
    with pytest.raises(OrderExhaustedError):
        S(1).derivative()


def test_derivative_shrinks_order():
    a = S(1, 2, 3, 4)
    assert a.derivative().order == a.order - 1


def test_leibniz_rule():
    rng = random.Random(11)
    for _ in range(10):
        a = random_series(rng, 10)
        b = random_series(rng, 10)
        lhs = (a * b).derivative()
        rhs = mul_truncating(a.derivative(), b) + mul_truncating(a, b.derivative())
        assert lhs == rhs


def test_eval_examples():
    e1 = HurwitzSeries.exp(1, 20)
    assert abs(e1.eval_at(1.0) - math.e) < 1e-12
    sin = S(0, 1, 0, -1, 0, 1)
    assert sin.eval_at(0.0) == 0.0
    assert HurwitzSeries.constant(1, 6).eval_at(123.0) == 1.0


def test_eval_gaussian_is_complex():
    series = HurwitzSeries.exp(GaussianRational(0, 1), 24)
    value = series.eval_at(1.0)
    assert isinstance(value, complex)
    assert abs(value - complex(math.cos(1.0), math.sin(1.0))) < 1e-12


def test_eval_exact():
    a = S(1, 0, 2)  # 1 + x^2
    assert a.eval_exact(Fraction(1, 2)) == Fraction(5, 4)


def test_eval_overflow_saturates_to_infinity():
    huge = S(Fraction(10) ** 400, 0)
    assert huge.eval_at(1.0) == math.inf
    assert S(-(Fraction(10) ** 400), 0).eval_at(1.0) == -math.inf


def test_mismatch_errors():
    with pytest.raises(OrderMismatchError):
        S(1, 2) + S(1, 2, 3)
    with pytest.raises(OrderMismatchError):
        S(1, 2) * S(1, 2, 3)
    g = HurwitzSeries.make([1, 2], Domain.GAUSSIAN)
    with pytest.raises(DomainMismatchError):
        S(1, 2) + g


def test_truncate_never_extends():
    a = S(1, 2, 3)
    assert a.truncate(1).coeffs == (1, 2)
    assert a.truncate(2) is a
    with pytest.raises(OrderExhaustedError):
        a.truncate(5)


def test_truncating_helpers():
    a = S(1, 2, 3, 4)
    b = S(5, 6)
    assert mul_truncating(a, b).order == 1
    assert add_truncating(a, b) == S(6, 8)
    assert power_truncating(b, 0) == HurwitzSeries.constant(1, 1)
    assert power_truncating(a, 2) == a * a


def test_exp_sequence_wrapper():
    pair = exp_sequence(Fraction(2), 4)
    assert isinstance(pair, ExpSequence)
    assert pair.base == 2
    assert pair.series == HurwitzSeries.exp(2, 4)
    assert HurwitzSeries.exp(0, 3) == S(1, 0, 0, 0)


def test_to_domain_round_trip():
    a = S(1, -2, Fraction(7, 3))
    lifted = a.to_domain(Domain.GAUSSIAN)
    assert lifted.domain is Domain.GAUSSIAN
    assert lifted.to_domain(Domain.RATIONAL) == a
    bad = HurwitzSeries.make([GaussianRational(0, 1)], Domain.GAUSSIAN)
    with pytest.raises(DomainMismatchError):
        bad.to_domain(Domain.RATIONAL)


def test_json_round_trip():
    rng = random.Random(3)
    a = random_series(rng, 9)
    payload = json.loads(json.dumps(a.to_json_dict()))
    assert HurwitzSeries.from_json_dict(payload) == a
    g = random_series(rng, 7, Domain.GAUSSIAN)
    payload = json.loads(json.dumps(g.to_json_dict()))
    assert HurwitzSeries.from_json_dict(payload) == g
    assert payload["domain"] == "gaussian"
    assert payload["orderX"] == 7
