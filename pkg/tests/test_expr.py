import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flowring.errors import DomainRequiredError, ParseError, UnsupportedArgumentError
from flowring.expr import (
    Add,
    Const,
    Cos,
    Exp,
    Mul,
    Neg,
    Pow,
    Sin,
    Sub,
    Var,
    elaborate,
    format_expr,
    parse,
    polynomial_coefficients,
    series_from_text,
)
from flowring.hurwitz import HurwitzSeries
from flowring.scalars import Domain, GaussianRational
from flowring.verify import PARSER_CORPUS, random_series


def test_parse_examples():
    assert parse("x^2 + 1") == Add(Pow(Var(), 2), Const(Fraction(1)))
    assert parse("(1-x)*(x^2+1)") == Mul(
        Sub(Const(Fraction(1)), Var()), Add(Pow(Var(), 2), Const(Fraction(1)))
    )
    assert parse("exp(x) + sin(x)") == Add(Exp(Fraction(1)), Sin(Fraction(1)))


def test_parse_precedence_and_adjacency():
    assert parse("2x") == Mul(Const(Fraction(2)), Var())
    assert parse("2*x^3") == Mul(Const(Fraction(2)), Pow(Var(), 3))
    assert parse("-x^2") == Neg(Pow(Var(), 2))
    assert parse("1-x*x") == Sub(Const(Fraction(1)), Mul(Var(), Var()))
    assert parse("ix") == Mul(Const(GaussianRational(0, 1)), Var())
    assert parse("(x)(x)") == Mul(Var(), Var())


def test_parse_function_scales():
    assert parse("exp(2x)") == Exp(Fraction(2))
    assert parse("exp(-x)") == Exp(Fraction(-1))
    assert parse("exp(i*x)") == Exp(GaussianRational(0, 1))
    assert parse("sin(2x)") == Sin(Fraction(2))
    assert parse("cos(-1/2x)") == Cos(Fraction(-1, 2))
    assert parse("exp(0x)") == Exp(Fraction(0))


@pytest.mark.parametrize(
    "text, offset",
    [
        ("x^^2", 2),
        ("x +", 3),
        ("(x", 2),
        ("x)", 1),
        ("x^-1", 2),
        ("1/0", 0),
        ("x $ 1", 2),
        ("spam", 0),
        ("exp x", 4),
    ],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.offset == offset


def test_parse_error_expected_sets():
    with pytest.raises(ParseError) as exc:
        parse("x + *")
    assert "number" in exc.value.expected


@pytest.mark.parametrize("text", ["exp(x^2)", "sin(x+1)", "exp(exp(x))", "cos(x*x)"])
def test_nonlinear_function_arguments_rejected(text):
    with pytest.raises(UnsupportedArgumentError):
        parse(text)


def test_round_trip_corpus():
    assert len(PARSER_CORPUS) >= 50
    for text in PARSER_CORPUS:
        tree = parse(text)
        assert parse(format_expr(tree)) == tree


_scales = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=4
)
_leaves = st.one_of(
    st.builds(
        Const,
        st.fractions(min_value=Fraction(0), max_value=Fraction(9), max_denominator=9),
    ),
    st.just(Var()),
    st.just(Const(GaussianRational(0, 1))),
    st.builds(Exp, _scales),
    st.builds(Sin, _scales),
    st.builds(Cos, _scales),
)
_trees = st.recursive(
    _leaves,
    lambda inner: st.one_of(
        st.builds(Add, inner, inner),
        st.builds(Sub, inner, inner),
        st.builds(Mul, inner, inner),
        st.builds(Neg, inner),
        st.builds(Pow, inner, st.integers(min_value=0, max_value=3)),
    ),
    max_leaves=12,
)


@given(_trees)
def test_round_trip_generated_trees(tree):
    # parser-producible shapes: printing then parsing is structurally lossless
    assert parse(format_expr(tree)) == tree


def test_elaborate_anchors():
    assert series_from_text("x^2+1", 4) == HurwitzSeries.make([1, 0, 2, 0, 0])
    assert series_from_text("exp(2x)", 4) == HurwitzSeries.make([1, 2, 4, 8, 16])
    assert series_from_text("sin(x)", 5) == HurwitzSeries.make([0, 1, 0, -1, 0, 1])
    assert series_from_text("cos(x)", 4) == HurwitzSeries.make([1, 0, -1, 0, 1])


def test_elaborate_euler_identity():
    euler = series_from_text("-1/2*i*exp(i*x) + 1/2*i*exp(-i*x)", 9, Domain.GAUSSIAN)
    assert euler == series_from_text("sin(x)", 9, Domain.GAUSSIAN)


def test_elaborate_requires_gaussian_for_i():
    with pytest.raises(DomainRequiredError):
        series_from_text("i*x", 4)
    with pytest.raises(DomainRequiredError):
        series_from_text("exp(i*x)", 4)
    assert series_from_text("i*x", 4, Domain.GAUSSIAN).coeffs[1] == GaussianRational(0, 1)


def test_elaborate_is_a_homomorphism():
    rng = random.Random(23)
    for _ in range(10):
        a = random_series(rng, 8)
        b = random_series(rng, 8)
        expr_a = _series_to_expr(a)
        expr_b = _series_to_expr(b)
        assert elaborate(Add(expr_a, expr_b), 8) == a + b
        assert elaborate(Mul(expr_a, expr_b), 8) == a * b
        assert elaborate(Neg(expr_a), 8) == -a


def _series_to_expr(series):
    # polynomial expression with the same elaboration, built from the
    # ordinary coefficients
    node = None
    for k, c in enumerate(series.to_polynomial()):
        term = Mul(Const(c), Pow(Var(), k))
        node = term if node is None else Add(node, term)
    return node


def test_polynomial_coefficients():
    assert polynomial_coefficients(parse("1-x+x^2-x^3")) == [
        Fraction(1),
        Fraction(-1),
        Fraction(1),
        Fraction(-1),
    ]
    assert polynomial_coefficients(parse("(1-x)*(x^2+1)")) == [
        Fraction(1),
        Fraction(-1),
        Fraction(1),
        Fraction(-1),
    ]
    assert polynomial_coefficients(parse("sin(x)")) is None
    assert polynomial_coefficients(parse("0")) == [Fraction(0)]


def test_pow_zero_is_one():
    assert series_from_text("x^0", 3) == HurwitzSeries.make([1, 0, 0, 0])
