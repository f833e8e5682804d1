from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from hyperzeta.cli import run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_reproduce_1_5_d():
    code, text = _run("reproduce", "1.5.d")
    assert code == 0
    assert "PASS  L: 1+3t+5t^2" in text
    assert "PASS  r1: 1" in text and "PASS  s1: 4" in text and "PASS  i1: 1" in text
    for n, v in ((1, 9), (2, 27), (3, 108)):
        assert f"PASS  count_n{n}: {v}" in text
    assert "DISCREPANCY" in text and "tallies_F5^2" in text and "literal_S-_variant" in text


def test_reproduce_1_7_a():
    code, text = _run("reproduce", "1.7.a")
    assert code == 0
    assert "PASS  count_n2: 64" in text and "PASS  L: 1+7t^2" in text
    assert "PASS  r1: 4" in text and "PASS  s1: 2" in text and "PASS  i1: 2" in text


def test_verify_global_large_field():
    code, text = _run("verify-global", "--curve", "1.37.am", "--maxdeg", "3", "--variant", "corrected")
    assert code == 0 and "PASS  global_bijection" in text


def test_literal_variant_exits_zero_with_discrepancy():
    code, text = _run("verify-global", "--curve", "1.5.d", "--variant", "paper")
    assert code == 0 and "DISCREPANCY" in text and "[x] + [x+4]" in text


def test_json_deterministic():
    a = _run("--json", "reproduce", "1.5.ad")
    b = _run("--json", "reproduce", "1.5.ad")
    assert a == b
    data = json.loads(a[1])
    assert data["status"] == "pass"
    statuses = {c["status"] for c in data["checks"]}
    assert statuses == {"pass", "discrepancy"}


@pytest.mark.parametrize(
    "argv",
    [
        ["points", "--curve", "1.5.d", "--maxdeg", "2", "--csv"],
        ["zeta", "--curve", "1.5.d"],
        ["lpoly", "--p", "7", "--f", "x^5+x+3"],
        ["chi", "--curve", "1.5.d", "--exhaustive"],
        ["verify-local", "--curve", "1.7.a", "--emit-witness"],
        ["discrepancy", "--curve", "1.5.d", "--maxdeg", "3"],
        ["sym", "--curve", "1.7.a"],
        ["mobius", "--p", "5"],
        ["topo-euler"],
        ["topo-cover", "--emit-witness"],
        ["lrep", "--curve", "1.37.am"],
    ],
)
def test_commands_pass(argv):
    code, text = _run(*argv)
    assert code == 0, text
    assert "RESULT: PASS" in text


def test_emit_witness_json():
    code, text = _run("--json", "verify-global", "--curve", "1.5.d", "--maxdeg", "2", "--emit-witness")
    data = json.loads(text)
    assert code == 0 and data["payload"]["witness"]
    assert {"gamma", "source", "target", "provenance"} <= set(data["payload"]["witness"][0])


def test_points_csv_header():
    code, text = _run("--json", "points", "--curve", "1.5.d", "--csv")
    assert json.loads(text)["payload"]["csv"].startswith("id,kind,degree,minpoly,splitting,fiber_labels\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["reproduce", "nope"],
        ["zeta", "--curve", "nope"],
        ["zeta", "--p", "4", "--f", "x^3+1"],
        ["lpoly", "--p", "5", "--f", "x^4+x+1"],
        ["zeta", "--p", "5"],
        ["zeta"],
        ["topo-cover", "--cover", "nope"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert _run(*argv)[0] == 2


def test_parser_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        _run("frobnicate")
    assert e.value.code == 2


def test_bad_fixture_file_exit_2(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([{"name": "even", "p": 5, "f": "x^4+1"}]))
    assert _run("--fixtures", str(path), "reproduce", "all")[0] == 2
    path.write_text("[]")
    assert _run("--fixtures", str(path), "reproduce", "all")[0] == 0


def test_verification_failure_exits_1(tmp_path):
    path = tmp_path / "wrong.json"
    entry = {"name": "w", "p": 5, "f": "x^3+x+1", "expected": {"L": [1, 3, 7]}, "provenance": {"L": "deliberately wrong"}}
    path.write_text(json.dumps([entry]))
    code, text = _run("--fixtures", str(path), "reproduce", "w")
    assert code == 1 and "FAIL  L" in text


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "hyperzeta.cli", "lpoly", "--curve", "1.5.d"], capture_output=True, text=True)
    assert r.returncode == 0 and "1+3t+5t^2" in r.stdout
