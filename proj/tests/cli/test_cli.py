import csv
import io
import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("URBANIK_SF_CLI", "urbanik-sf")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def rows(text):
    lines = text.splitlines()
    assert lines[0] == "# urbanik-sf v1"
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_eval():
    p = run("eval", "--c", "1", "--t", "2")
    assert p.returncode == 0, p.stderr
    (row,) = rows(p.stdout)
    assert float(row["value"]) == pytest.approx(math.exp(-2.0), rel=1e-10)
    assert row["method"] == "Direct"


def test_eval_bessel_case():
    (row,) = rows(run("eval", "--c", "2", "--t", "1").stdout)
    assert float(row["value"]) == pytest.approx(0.22778774549906687, rel=1e-10)
    assert row["method"]


def test_table_is_exponential_for_c1():
    p = run("table", "--c", "1", "--t", "1:10:10", "--linear")
    assert p.returncode == 0, p.stderr
    table = rows(p.stdout)
    assert len(table) == 10
    for r in table:
        assert float(r["value"]) == pytest.approx(math.exp(-float(r["t"])), rel=1e-10)
    assert [float(r["t"]) for r in table] == list(range(1, 11))


def test_table_json_schema():
    p = run("table", "--c", "2", "--t", "1:5:3", "--linear", "--format", "json")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    assert doc["schema"] == 1
    assert [r["t"] for r in doc["records"]] == [1, 3, 5]


def test_krein():
    p = run("krein", "--c", "3", "--c", "1.5", "--format", "json")
    assert p.returncode == 0, p.stderr
    classes = {r["c"]: r["classification"] for r in json.loads(p.stdout)["records"]}
    assert classes == {3: "CONVERGENT", 1.5: "DIVERGENT"}


def test_moments_and_tolerance_failure():
    assert run("moments", "--c", "1.5", "--n", "2").returncode == 0
    p = run("moments", "--c", "1.5", "--n", "2", "--tol", "1e-30")
    assert p.returncode == 1
    assert rows(p.stdout)[0]["pass"] == "false"


def test_semigroup_and_asympt():
    assert run("semigroup", "--c", "1", "--d", "1", "--t", "2").returncode == 0
    p = run("asympt", "--c", "2", "--t", "1e2:1e4:3")
    assert p.returncode == 0, p.stderr
    assert all(r["mode"] == "large" for r in rows(p.stdout))
    p = run("asympt", "--c", "2", "--t", "1e-7:1e-3:3")
    assert all(r["mode"] == "small" for r in rows(p.stdout))


@pytest.mark.parametrize(
    "args",
    [
        ("eval", "--c", "1", "--t", "-1"),
        ("eval", "--c", "1", "--t", "abc"),
        ("table", "--c", "1", "--t", "1:2:1"),
        ("eval", "--c", "1", "--t", "1", "--rel-tol", "0"),
        ("bogus",),
    ],
)
def test_argument_errors(args):
    p = run(*args, "--format", "json") if args[0] != "bogus" else run(*args)
    assert p.returncode == 2
    assert p.stdout == ""
    if args[0] != "bogus":
        err = json.loads(p.stderr)
        assert err["schema"] == 1
        assert err["error"]["exit_code"] == 2


def test_domain_error_record_csv():
    p = run("eval", "--c", "1.5", "--t", "2", "--method", "closed")
    assert p.returncode == 2
    lines = p.stderr.splitlines()
    assert lines[0] == "# urbanik-sf v1"
    assert lines[2].startswith("domain,2,")


def test_numerical_error_exit_1():
    p = run("eval", "--c", "1", "--t", "100", "--method", "direct", "--format", "json")
    assert p.returncode == 1
    assert json.loads(p.stderr)["error"]["type"] == "numerical"


def test_deterministic_output():
    a = run("table", "--c", "0.5", "--t", "0.01:50:7", "--format", "json").stdout
    b = run("table", "--c", "0.5", "--t", "0.01:50:7", "--format", "json").stdout
    assert a == b


def test_out_file(tmp_path):
    out = tmp_path / "x.csv"
    p = run("eval", "--c", "1", "--t", "1", "--out", str(out))
    assert p.returncode == 0 and p.stdout == ""
    assert out.read_text().startswith("# urbanik-sf v1\n")


def test_verify_all():
    p = run("verify-all")
    assert p.returncode == 0, p.stdout
    table = rows(p.stdout)
    assert len(table) > 50
    assert all(r["pass"] == "true" for r in table)
