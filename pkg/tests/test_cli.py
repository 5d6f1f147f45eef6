import json

import pytest

from quasidouble import cli, document
from quasidouble.instances import (
    GroupPresentation,
    ThreeCocycle,
    function_algebra,
    group_algebra,
    sweedler_hopf,
)


@pytest.fixture()
def kz2_doc(tmp_path, kz2):
    path = tmp_path / "kz2.qha"
    document.save(document.AlgebraDocument(
        kz2, kz2.unit.tensor(kz2.unit), "kZ2"), path)
    return str(path)


@pytest.fixture()
def fz2w_doc(tmp_path, fz2_omega):
    path = tmp_path / "fz2w.qha"
    document.save(document.AlgebraDocument(fz2_omega, notes="fz2w"), path)
    return str(path)


def test_round_trip_byte_exact(kz2_doc):
    doc = document.load(kz2_doc)
    assert document.dumps(doc) == open(kz2_doc).read()


def test_phi_inverse_injected(tmp_path, kz2):
    data = document.to_dict(document.AlgebraDocument(kz2))
    del data["phi_inv"]
    path = tmp_path / "nophiinv.qha"
    path.write_text(json.dumps(data))
    doc = document.load(path)
    assert doc.H.phi_inv == kz2.phi_inv


def test_parse_errors(tmp_path):
    path = tmp_path / "bad.qha"
    path.write_text("{ not json")
    with pytest.raises(document.ParseError):
        document.load(path)
    path.write_text(json.dumps({"format_version": 99}))
    with pytest.raises(document.ParseError):
        document.load(path)
    with pytest.raises(document.ParseError):
        document.load(tmp_path / "missing.qha")


def test_validate_pass_and_exit_zero(kz2_doc, capsys):
    assert cli.main(["validate", kz2_doc]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_validate_detects_corruption(tmp_path, kz2, capsys):
    data = document.to_dict(document.AlgebraDocument(kz2))
    # Phi = 1 (x) 1 (x) g: breaks counit normalization of the reassociator
    data["phi"]["entries"] = [[0, 0, 1, "1"]]
    del data["phi_inv"]
    path = tmp_path / "badphi.qha"
    path.write_text(json.dumps(data))
    assert cli.main(["validate", str(path), "--format", "json"]) == 2
    report = json.loads(capsys.readouterr().out)
    failing = [c["label"] for s in report["stages"]
               for c in s["checks"] if not c["passed"]]
    assert "(q4)" in failing


def test_parse_error_exit_three(tmp_path, capsys):
    path = tmp_path / "trunc.qha"
    path.write_text('{"format_version":')
    assert cli.main(["validate", str(path)]) == 3


def test_derive_emits_elements(fz2w_doc, capsys):
    assert cli.main(["derive", fz2w_doc, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    for key in ("gamma", "delta", "f", "f_inv", "p_R", "q_R"):
        assert key in out
    assert out["passed"]


def test_double_writes_document(fz2w_doc, tmp_path, capsys):
    out_path = str(tmp_path / "double.qha")
    assert cli.main(["double", fz2w_doc, "-o", out_path]) == 0
    capsys.readouterr()
    doc = document.load(out_path)
    assert doc.H.dim == 4
    assert doc.R is not None
    assert cli.main(["validate", out_path]) == 0


def test_project_pipeline(kz2_doc, capsys):
    assert cli.main(["project", kz2_doc, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["passed"]
    stages = {s["stage"] for s in out["stages"]}
    assert "projection" in stages and "chi-isomorphism" in stages


def test_project_requires_r(fz2w_doc, capsys):
    assert cli.main(["project", fz2w_doc]) == 3


def test_braided_dual_reports_transport(tmp_path, sweedler, capsys):
    H, rm = sweedler
    path = tmp_path / "sw.qha"
    document.save(document.AlgebraDocument(H, rm.R), path)
    assert cli.main(["braided-dual", str(path), "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["passed"]
    assert any(s["stage"] == "mu-transport" for s in out["stages"])


def test_tower_cap(fz2w_doc, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.DIM_CAP_ENV, "4")
    assert cli.main(["tower", fz2w_doc, "-n", "2"]) == 3
    monkeypatch.delenv(cli.DIM_CAP_ENV)
    out_path = str(tmp_path / "tower.qha")
    assert cli.main(["tower", fz2w_doc, "-n", "2", "-o", out_path,
                     "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dims"] == [2, 4, 16]
    assert document.load(out_path).H.dim == 16


def test_deterministic_output(kz2_doc, capsys):
    cli.main(["report", kz2_doc, "--format", "json"])
    first = capsys.readouterr().out
    cli.main(["report", kz2_doc, "--format", "json"])
    second = capsys.readouterr().out
    assert first == second


def test_usage_error_exit_three(capsys):
    assert cli.main(["tower", "nosuchfile.qha"]) == 3
