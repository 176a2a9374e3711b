import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from tamesym.api import InvariantsResponse, CompareResponse, app
from tamesym.errors import TamesymError
from tamesym.service import (
    compare_report,
    families_report,
    invariants_report,
    parse_check_report,
    parse_params,
    table_report,
)

GOLDEN = Path(__file__).parent / "golden"
client = TestClient(app)


def test_parse_params():
    assert parse_params("k=2,s=3,c=1") == {"k": 2, "s": 3, "c": 1}
    assert parse_params("d=g") == {"d": "g"}
    assert parse_params("") == {}
    with pytest.raises(TamesymError):
        parse_params("k")


def test_invariants_report_spec_example():
    # invariants --family D1A1 --params k=2 --char 2: dim_Z=5, dim_Zpr=0, G0st=[8]
    data = invariants_report({"family": "D1A1", "params": "k=2", "char": 2})
    assert data["dim_Z"] == 5 and data["dim_Zpr"] == 0
    assert data["cartan_divisors"] == [8]
    assert data["schema_version"] == 1
    InvariantsResponse.model_validate(data)


def test_invariants_report_a1_char0():
    data = invariants_report({"family": "A1", "params": "m=3,n=2", "char": 0})
    assert data["dim_Z"] == 5 and data["dim_Zpr"] == 1


def test_invariants_report_q3a1_f4():
    data = invariants_report(
        {"family": "Q3A1", "params": "d=g", "char": 2, "field_order": 4}
    )
    assert data["dim_Z"] == 6


def test_invariants_from_presentation_text():
    text = "field char=0\nvertices 1\narrow X 0 0\narrow Y 0 0\ncommutative\nrelation X^2\nrelation Y^2\n"
    data = invariants_report({"presentation_text": text, "char": 0})
    assert data["dim_A"] == 4 and data["dim_Z"] == 4


def test_compare_report_validates():
    data = compare_report(
        {"family": "C1", "char": 0},
        {"family": "D1A1", "params": "k=2", "char": 0},
    )
    CompareResponse.model_validate(data)
    assert data["outcome"] == "distinguished"


def test_families_report():
    data = families_report()
    assert len(data["families"]) == 18


def test_table_determinism():
    a = table_report("dihedral-1", 0)
    b = table_report("dihedral-1", 0)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


@pytest.mark.parametrize(
    "section,char,defects,golden",
    [
        ("dihedral-1", 0, None, "dihedral1_char0.md"),
        ("dihedral-1", 2, None, "dihedral1_char2.md"),
        ("dihedral-1", 7, None, "dihedral1_char7.md"),
        ("blocks-semidihedral", 2, "4..5", "blocks_semidihedral_4_5.md"),
        ("blocks-dihedral", 2, "3..5", "blocks_dihedral_3_5.md"),
        ("blocks-quaternion", 2, "3..5", "blocks_quaternion_3_5.md"),
    ],
)
def test_table_golden(section, char, defects, golden):
    data = table_report(section, char, defects)
    assert data["markdown"] == (GOLDEN / golden).read_text()


def test_table_unknown_section():
    with pytest.raises(TamesymError):
        table_report("nope", 0)


def test_parse_check_reports_ok_and_errors():
    good = parse_check_report("field char=2\nvertices 1\narrow X 0 0\nrelation X^2\n")
    assert good["ok"] and good["summary"]["arrows"] == ["X"]
    bad = parse_check_report("field char=2\nvertices 1\narrow X 0 0\nrelation X^\n")
    assert not bad["ok"] and bad["errors"][0]["line"] == 4


# ---------------------------------------------------------------------------
# HTTP surface

def test_api_health_and_families():
    assert client.get("/health").json()["status"] == "ok"
    assert len(client.get("/families").json()["families"]) == 18


def test_api_invariants_roundtrip():
    r = client.post("/invariants", json={"family": "C1", "char": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["dim_Z"] == 4 and body["stable_grothendieck"] == "Z/4"


def test_api_validation_error_is_422():
    r = client.post("/invariants", json={"family": "SD3K", "params": "a=1,b=1,c=1", "char": 2})
    assert r.status_code == 422
    assert "SD3K" in r.json()["detail"]


def test_api_compare_exit_semantics():
    r = client.post(
        "/compare",
        json={
            "a": {"family": "D1A2", "params": "k=2,d=0", "char": 2},
            "b": {"family": "D1A2", "params": "k=2,d=1", "char": 2},
        },
    )
    body = r.json()
    assert body["outcome"] == "not_distinguished" and body["known_open"]


def test_api_table_markdown_matches_golden():
    r = client.post("/table", json={"section": "dihedral-1", "char": 0})
    assert r.json()["markdown"] == (GOLDEN / "dihedral1_char0.md").read_text()


def test_api_blocks():
    r = client.post("/blocks", json={"rep_type": "quaternion", "defects": "3"})
    rows = r.json()["rows"]
    assert {row["dim_Zst"] for row in rows} == {5, 6, 7}


def test_api_parse_check():
    r = client.post("/parse-check", json={"text": "field char=0\nvertices 1\narrow X 0 0\nrelation X^2\n"})
    assert r.json()["ok"]


def test_api_section7_tiny():
    r = client.post("/section7", json={"chars": [3], "max_param": 2})
    assert r.status_code == 200
    assert r.json()["ok"]
