import json
import subprocess
import sys
from pathlib import Path

import pytest

from bosonorder.cli import main

FIXTURES = Path(__file__).parent / "fixtures"
CASES = json.loads((FIXTURES / "cases.json").read_text())


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(capsys, case):
    ext = "json" if "--format" in case["args"] else "txt"
    code, out, _ = run(capsys, *case["args"])
    assert code == 0
    assert out == (FIXTURES / f"{case['name']}.{ext}").read_text()


@pytest.mark.parametrize(
    "args, text",
    [
        (["quantize", "--rule", "antiwick", "z* z"], "A*A + 1\n"),
        (["quantize", "--rule", "antiwick-dilation", "z*^2 z^2"], "A*^2 A^2 + 4 A*A + 2\n"),
        (["project", "z*^2 z"], "2 z*\n"),
    ],
)
def test_documented_examples(capsys, args, text):
    assert run(capsys, *args)[1] == text


@pytest.mark.parametrize(
    "expr", ["z* z", "z*^3 z^2 - (1/2)i z", "z1* z2 + z2*^2 z1", "(1+i) z*^4 z^4 + 7", "z^5 - z*^5"]
)
def test_antiwick_routes_byte_identical(capsys, expr):
    _, direct, _ = run(capsys, "quantize", "--rule", "antiwick", expr)
    _, dilation, _ = run(capsys, "quantize", "--rule", "antiwick-dilation", expr)
    assert direct == dilation


def test_output_deterministic(capsys):
    outs = {run(capsys, "--format", "json", "dilate", "z*^2 z - 3 z*")[1] for _ in range(3)}
    assert len(outs) == 1


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "quantize", "--rule", "wick", "z^-1")
    assert code == 1
    assert "position 1" in err


def test_config_errors_exit_3(capsys):
    assert run(capsys, "matrix", "--dim", "1", "A")[0] == 3
    with pytest.raises(SystemExit) as info:
        main(["quantize", "z"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "nope"])
    assert info.value.code == 3
    assert run(capsys, "verify", "--dim", "4")[0] == 3


def test_degree_cap_is_config_error(capsys, monkeypatch):
    monkeypatch.setenv("BOSONORDER_MAX_DEGREE", "3")
    code, _, err = run(capsys, "quantize", "--rule", "antiwick", "z*^2 z^2")
    assert code == 3
    assert "degree" in err


def test_verify_failure_exit_2(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "complex-wave", "--tol", "0")
    assert code == 2
    assert "[FAIL]" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--suite", "symbolic")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"]
    assert {c["check"] for c in payload["checks"]} >= {"dilation_theorem", "reordering_formula"}
    assert set(payload["checks"][0]) == {"check", "params", "observed", "bound", "pass"}


def test_fourier_quadrature_flag(capsys):
    _, exact, _ = run(capsys, "--format", "json", "fourier", "--points", "1/2, -i", "z*^2 z")
    _, quad, _ = run(capsys, "--format", "json", "fourier", "--quadrature", "--points", "1/2, -i", "z*^2 z")
    a, b = json.loads(exact)["values"], json.loads(quad)["values"]
    assert max(abs(complex(*x) - complex(*y)) for x, y in zip(a, b)) < 1e-8


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "bosonorder", "normal-order", "A A*"], capture_output=True, text=True, check=True
    )
    assert out.stdout == "A*A + 1\n"
