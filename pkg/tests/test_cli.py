import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from tamesym.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_invariants_json():
    r = run("invariants", "--family", "D1A1", "--params", "k=2", "--char", "2",
            "--format", "json")
    assert r.exit_code == 0, r.output
    data = json.loads(r.output)
    assert data["dim_Z"] == 5 and data["dim_Zpr"] == 0


def test_invariants_constraint_violation_exit2():
    r = run("invariants", "--family", "SD3K", "--params", "a=1,b=1,c=1", "--char", "2")
    assert r.exit_code == 2
    assert "a >= 2" in r.output


def test_compare_distinguished_exit0():
    r = run("compare", "--family-a", "D2B", "--params-a", "k=1,s=2,c=0",
            "--family-b", "D2B", "--params-b", "k=1,s=2,c=1", "--char", "2",
            "--no-strict")
    assert r.exit_code == 0, r.output
    assert json.loads(r.output)["invariant"] == "special_biserial"


def test_compare_scalar_separation_exit0():
    r = run("compare", "--family-a", "SD2B1", "--params-a", "k=1,t=3,c=0",
            "--family-b", "SD2B1", "--params-b", "k=1,t=3,c=1", "--char", "2")
    assert r.exit_code == 0
    assert json.loads(r.output)["invariant"] == "kuelshammer_n1"


def test_compare_open_case_exit3():
    r = run("compare", "--family-a", "D1A2", "--params-a", "k=2,d=0",
            "--family-b", "D1A2", "--params-b", "k=2,d=1", "--char", "2")
    assert r.exit_code == 3


def test_table_markdown_golden():
    r = run("table", "--section", "dihedral-1", "--char", "0", "--format", "md")
    assert r.exit_code == 0
    assert r.output == (GOLDEN / "dihedral1_char0.md").read_text()


def test_table_csv():
    r = run("table", "--section", "dihedral-1", "--char", "0", "--format", "csv")
    assert r.exit_code == 0
    assert r.output.splitlines()[0] == "algebra,dim_Z,dim_Zpr,dim_Zst,cartan,G0st"


def test_table_determinism_byte_identical():
    r1 = run("table", "--section", "blocks-quaternion", "--char", "2",
             "--defect", "3..4", "--format", "md")
    r2 = run("table", "--section", "blocks-quaternion", "--char", "2",
             "--defect", "3..4", "--format", "md")
    assert r1.output == r2.output


def test_blocks_command():
    r = run("blocks", "--rep-type", "semidihedral", "--defect", "4", "--format", "json")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert any(row["entry"] == "SD3K(a=4,b=2,c=1)" for row in data["rows"])


def test_parse_check_bad_file(tmp_path):
    f = tmp_path / "bad.dsl"
    f.write_text("field char=2\nvertices 1\narrow X 0 0\nrelation X^\n")
    r = run("parse-check", "--presentation-file", str(f))
    assert r.exit_code == 2
    assert json.loads(r.output)["errors"][0]["line"] == 4


def test_presentation_file_invariants(tmp_path):
    f = tmp_path / "c1.dsl"
    f.write_text(
        "field char=0\nvertices 1\narrow X 0 0\narrow Y 0 0\ncommutative\n"
        "relation X^2\nrelation Y^2\n"
    )
    r = run("invariants", "--presentation-file", str(f), "--char", "0")
    assert r.exit_code == 0
    assert json.loads(r.output)["dim_A"] == 4


def test_section7_tiny():
    r = run("section7", "--chars", "3", "--max-param", "2")
    assert r.exit_code == 0
    assert json.loads(r.output)["ok"]


def test_selftest_quick():
    r = run("selftest", "--quick")
    assert r.exit_code == 0, r.output


def test_server_url_routing(monkeypatch):
    """--server-url routes the same payload over HTTP (in-process ASGI)."""
    from fastapi.testclient import TestClient
    from tamesym.api import app
    import httpx

    tc = TestClient(app)

    def fake_post(url, json=None, timeout=None):
        path = url.replace("http://fake", "")
        return tc.post(path, json=json)

    monkeypatch.setattr(httpx, "post", fake_post)
    r = run("--server-url", "http://fake", "invariants", "--family", "C1", "--char", "0")
    assert r.exit_code == 0, r.output
    assert json.loads(r.output)["dim_Z"] == 4
    r = run("--server-url", "http://fake", "compare",
            "--family-a", "D1A2", "--params-a", "k=2,d=0",
            "--family-b", "D1A2", "--params-b", "k=2,d=1", "--char", "2")
    assert r.exit_code == 3
