import copy
import json

import pytest

from momentangle.cli import main
from momentangle.verify import FixtureError, load_fixture, verify_paper

from conftest import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_timing(report_json):
    for c in report_json["checks"]:
        c.pop("elapsed")
    return report_json


@pytest.fixture(scope="module")
def report():
    return verify_paper(load_fixture())


def test_default_run_passes(report):
    assert report.status == "pass"
    assert report.failures == []
    ids = [c.id for c in report.checks]
    assert len(ids) == len(set(ids))
    assert ids[:13] == [f"V{i}" for i in range(1, 14)]
    assert "V15" in ids


def test_loci_come_from_fixture(report, paper_fixture):
    for c in report.checks:
        assert c.locus == paper_fixture["loci"][c.id]


def test_report_is_deterministic(report):
    again = verify_paper(load_fixture(), jobs=2)
    assert strip_timing(again.to_json()) == strip_timing(report.to_json())


def test_budget_zero_is_qualified():
    rep = verify_paper(load_fixture(), budget=0)
    states = {c.id: c.status for c in rep.checks}
    assert {states["V4"], states["V5"], states["V6"]} == {"inconclusive"}
    assert all(s == "pass" for i, s in states.items() if i not in ("V4", "V5", "V6"))
    assert rep.status == "qualified-pass"


def corrupt(tmp_path, name, mutate):
    data = load_fixture()
    data = copy.deepcopy(data)
    mutate(data)
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def drop_facet(d):
    d["complex"]["facets"].remove("1245")


def perturb_missing(d):
    d["missing_faces"][d["missing_faces"].index("134")] = "124"


def wrong_polynomial(d):
    d["connected_sum"][1]["mult"] = 7


@pytest.mark.parametrize(
    "mutate, must_fail",
    [(drop_facet, "V2"), (perturb_missing, "V1"), (wrong_polynomial, "V15")],
)
def test_corrupted_fixtures_exit_1(tmp_path, capsys, mutate, must_fail):
    path = corrupt(tmp_path, mutate.__name__, mutate)
    code, out, _ = run(capsys, "verify-paper", "--fixture", str(path), "--json")
    assert code == 1
    rep = json.loads(out)
    assert rep["status"] == "fail"
    assert must_fail in {c["id"] for c in rep["checks"] if c["status"] == "fail"}


def test_verify_cli_exit_0(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "overall: pass (0 failures" in out


def test_verify_cli_json_schema(capsys):
    code, out, _ = run(capsys, "verify-paper", "--json", "--jobs", "1")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["failures"] == 0
    for c in rep["checks"]:
        assert set(c) == {"id", "locus", "claim", "expected", "computed", "status", "elapsed", "note"}


def test_missing_fixture(tmp_path, capsys):
    code, _, err = run(capsys, "verify-paper", "--fixture", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read fixture" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{}", encoding="utf-8")
    with pytest.raises(FixtureError):
        load_fixture(bad)


def test_scan_cli(capsys):
    code, out, _ = run(capsys, "scan", str(FIXTURES / "p8_28_minus_1.json"), "--card", "3")
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == ["235", "258", "346", "467"]


def test_hochster_cli(capsys):
    code, out, _ = run(capsys, "hochster", str(FIXTURES / "p8_28.json"), "--poincare")
    assert code == 0
    assert out.strip() == "1 + 2t^3 + 8t^5 + 18t^6 + 8t^7 + 2t^9 + t^12"
    code, out, _ = run(capsys, "hochster", str(FIXTURES / "p8_28.json"), "--table")
    rows = json.loads(out)
    assert rows[0] == {"I": [], "homology": {"-1": {"betti": 1, "torsion": []}}}
    total_rank = sum(g["betti"] for r in rows for g in r["homology"].values())
    assert total_rank == 1 + 2 + 8 + 18 + 8 + 2 + 1


def test_link_cli(capsys):
    code, out, _ = run(capsys, "link", str(FIXTURES / "p8_28.json"), "--simplex", "1,3")
    assert code == 0 and out.split() == ["57", "58", "67", "68"]


def test_info_homology_stacked_fillable_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "info", str(FIXTURES / "p8_28.json"))
    assert code == 0 and "f-vector: (8, 26, 36, 18)" in out
    assert "missing faces: 56 78 123 128 134 147 235 258 346 467" in out
    code, out, _ = run(capsys, "homology", str(FIXTURES / "p8_28.json"), "--subset", "2358", "--json")
    assert json.loads(out)["1"] == {"betti": 1, "torsion": []}
    link2 = tmp_path / "link2.json"
    link2.write_text(json.dumps({"facets": [[1, 4, 5], [1, 4, 6], [1, 5, 7], [1, 6, 7], [3, 4, 7], [3, 6, 7], [4, 5, 7], [3, 4, 8], [3, 6, 8], [4, 6, 8]]}))
    code, out, _ = run(capsys, "stacked", str(link2))
    assert code == 0 and json.loads(out) == {"k": 3, "ell": 3, "peel": [5, 1, 7]}
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps({"facets": [[1, 2], [1, 3], [2, 3]]}))
    code, out, _ = run(capsys, "fillable", str(tri))
    assert code == 0 and json.loads(out) == {"added": [[1, 2, 3]], "outcome": "fillable"}


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    code, _, err = run(capsys, "info", str(tmp_path / "missing.json"))
    assert code == 2
    ghost = tmp_path / "ghost.json"
    ghost.write_text(json.dumps({"vertices": [1, 2, 3], "facets": [[1, 2]]}))
    code, _, err = run(capsys, "info", str(ghost))
    assert code == 2 and "ghost" in err
