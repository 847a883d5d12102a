import math

import pytest

from flowring.errors import DomainMismatchError, NumericBlowupError, OutOfRangeError
from flowring.expr import parse, series_from_text
from flowring.flow import ClosedFormFlow, FlowKind, flow_series
from flowring.oracle import eval_field, fd_flow_derivative_check, rk4_solve


def test_eval_field_pointwise():
    assert eval_field(parse("x^2+1"), 2.0) == 5.0
    assert eval_field(parse("exp(2x)"), 0.5) == pytest.approx(math.e)
    assert eval_field(parse("sin(x)+cos(x)"), 0.0) == 1.0
    assert eval_field(parse("-x"), 3.0) == -3.0
    with pytest.raises(DomainMismatchError):
        eval_field(parse("i*x"), 1.0)


def test_rk4_exponential():
    trajectory = rk4_solve(parse("x"), 1.0, 0.5, 256)
    assert abs(trajectory.final - math.exp(0.5)) < 1e-9
    assert len(trajectory.ts) == 257
    assert trajectory.step == pytest.approx(0.5 / 256)


def test_rk4_constant_field_is_exact():
    trajectory = rk4_solve(parse("1"), 0.3, 0.7, 256)
    assert abs(trajectory.final - 1.0) < 1e-13


def test_rk4_square_field():
    trajectory = rk4_solve(parse("x^2"), 0.1, 0.5, 512)
    assert abs(trajectory.final - 0.1 / 0.95) < 1e-10


def test_rk4_convergence_ratio():
    exact = math.exp(0.5)
    err32 = abs(rk4_solve(parse("x"), 1.0, 0.5, 32).final - exact)
    err64 = abs(rk4_solve(parse("x"), 1.0, 0.5, 64).final - exact)
    assert 12.0 <= err32 / err64 <= 20.0


def test_rk4_blowup_detection():
    with pytest.raises(NumericBlowupError):
        rk4_solve(parse("x^2"), 3.0, 2.0, 64)


def test_rk4_step_floor():
    with pytest.raises(OutOfRangeError):
        rk4_solve(parse("x"), 1.0, 0.5, 8)


def test_fd_residual_for_series_flows():
    linear = flow_series(series_from_text("x", 24), 16)
    assert fd_flow_derivative_check(linear, parse("x"), 0.2, 0.1, 1e-4) < 1e-8
    constant = flow_series(series_from_text("1", 12), 6)
    assert fd_flow_derivative_check(constant, parse("1"), 0.3, 0.4, 1e-4) < 1e-11


def test_fd_residual_for_closed_forms():
    quad = ClosedFormFlow(FlowKind.IRREDUCIBLE_QUADRATIC, (0, 1))
    assert fd_flow_derivative_check(quad, parse("1+x^2"), 0.2, 0.1, 1e-4) < 1e-7
    expfield = ClosedFormFlow(FlowKind.EXPFIELD, (1,))
    assert fd_flow_derivative_check(expfield, parse("exp(x)"), 0.1, 0.05, 1e-4) < 1e-8


def test_fd_step_bounds():
    linear = flow_series(series_from_text("x", 12), 6)
    with pytest.raises(OutOfRangeError):
        fd_flow_derivative_check(linear, parse("x"), 0.1, 0.1, 1e-2)
    with pytest.raises(OutOfRangeError):
        fd_flow_derivative_check(linear, parse("x"), 0.1, 0.1, 1e-7)
