import io
import json
import math

from flowring.cli import main
from flowring.expr import series_from_text
from flowring.flow import FlowSeries, flow_series


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_series_text_output():
    code, out, err = run_cli("series", "--field", "x^2", "--order-t", "4")
    assert code == 0 and not err
    lines = out.splitlines()
    assert lines[0].startswith("field:")
    assert lines[1].startswith("A[0]: 0 1 0")
    assert lines[3].split()[:5] == ["A[2]:", "0", "0", "0", "12"]
    assert len(lines) == 6


def test_flow_rows_match_monomial_coefficients():
    code, out, _ = run_cli("flow", "--field", "x^2", "--order-t", "4", "--order-x", "8")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("t[")]
    # A_n(x^2) = n! x^(n+1): EGF entry n!*(n+1)! at index n+1
    for n, row in enumerate(rows[1:], start=1):
        values = row.split()[1:]
        assert values[n + 1] == str(math.factorial(n) * math.factorial(n + 1))


def test_flow_json_round_trips_bit_exactly():
    code, out, _ = run_cli(
        "flow", "--field", "exp(i*x)", "--domain", "gaussian",
        "--order-x", "8", "--order-t", "4", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    from flowring.scalars import Domain

    reference = flow_series(series_from_text("exp(i*x)", 8, Domain.GAUSSIAN), 4)
    assert FlowSeries.from_json_dict(payload) == reference


def test_eval_reports_closed_form_and_rk4():
    code, out, _ = run_cli("eval", "--field", "x^2+1", "--x", "0", "--t", "0.3")
    assert code == 0
    lines = dict(
        line.split(" = ", 1) for line in out.splitlines() if " = " in line
    )
    series_value = float(lines["series"])
    closed_value = float(lines["closed_form"].split()[0])
    rk4_value = float(lines["rk4"])
    assert abs(series_value - math.tan(0.3)) < 1e-7
    assert abs(closed_value - math.tan(0.3)) < 1e-12
    assert abs(rk4_value - math.tan(0.3)) < 1e-9


def test_eval_json_format():
    code, out, _ = run_cli(
        "eval", "--field", "x^2", "--x", "0.1", "--t", "0.5", "--format", "json",
        "--order-x", "41", "--order-t", "16",
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["series"] - 0.1 / 0.95) < 1e-10
    assert abs(payload["closed_form"] - 0.1 / 0.95) < 1e-12
    assert payload["closed_form_kind"]["kind"] == "power"


def test_decompose_text_verdict():
    code, out, _ = run_cli(
        "decompose", "--mode", "sum",
        "--part", "1", "--part=-x", "--part", "x^2", "--part=-x^3",
        "--order-t", "6",
    )
    assert code == 0
    assert "combined equals the direct flow: PASS" in out
    assert "component[3]:" in out


def test_decompose_product_json():
    code, out, _ = run_cli(
        "decompose", "--mode", "product", "--part", "1-x", "--part", "x^2+1",
        "--order-t", "5", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["matches_direct"] is True
    assert len(payload["components"]) == 2


def test_bell_debug():
    code, out, _ = run_cli("bell-debug", "--n", "3", "--b", "1,1,1", "--a", "1,1,1")
    assert code == 0
    assert out.strip() == "Y_3 = 5"


def test_rk4_debug_hidden_command():
    code, out, _ = run_cli("rk4-debug", "--field", "x", "--x", "1", "--t", "0.5")
    assert code == 0
    assert "y(0.5)" in out


def test_exit_code_parse_error():
    code, _, err = run_cli("series", "--field", "x^^2")
    assert code == 1
    assert "parse error" in err


def test_exit_code_domain_errors():
    code, _, err = run_cli("series", "--field", "i*x")
    assert code == 2 and "domain error" in err
    code, _, err = run_cli("series", "--field", "exp(x^2)")
    assert code == 2
    code, _, err = run_cli("series", "--field", "x", "--order-x", "4", "--order-t", "4")
    assert code == 0
    code, _, err = run_cli("flow", "--field", "x", "--order-x", "2", "--order-t", "2")
    assert code == 0


def test_exit_code_usage_errors():
    code, _, err = run_cli("series", "--field", "x", "--order-x", "99")
    assert code == 3 and "usage error" in err
    code, _, err = run_cli("series", "--field", "x", "--order-t", "20", "--order-x", "16")
    assert code == 3
    code, _, err = run_cli("series", "--field", "x", "--bogus-flag", "1")
    assert code == 3
    code, _, err = run_cli("bogus-command")
    assert code == 3
    code, _, err = run_cli("bell-debug", "--n", "70", "--b", "1", "--a", "1")
    assert code == 3


def test_verify_command_passes():
    code, out, _ = run_cli("verify", "--seed", "7")
    assert code == 0
    assert "RESULT:" in out
    assert "FAIL" not in out


def test_verify_json_format(monkeypatch):
    from flowring import cli
    from flowring.verify import CheckOutcome

    monkeypatch.setattr(
        cli, "run_suite", lambda seed: [CheckOutcome("demo", True, "ok")]
    )
    code, out, _ = run_cli("verify", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == [{"name": "demo", "passed": True, "detail": "ok"}]


def test_verify_failure_exit_code(monkeypatch):
    from flowring import cli
    from flowring.verify import CheckOutcome

    monkeypatch.setattr(
        cli, "run_suite", lambda seed: [CheckOutcome("demo", False, "broken")]
    )
    code, out, _ = run_cli("verify")
    assert code == 4
    assert "FAIL demo" in out
