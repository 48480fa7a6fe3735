import json

import pytest

from heckeduality.cli import main
from heckeduality.report import VerificationReport


def test_solomon_passes(capsys):
    assert main(["solomon", "--type", "B", "--rank", "2", "--quiet"]) == 0
    out = capsys.readouterr().out
    assert out.count("solomon: PASS") == 5


def test_kato_alias(capsys):
    assert main(["kato", "--type", "A", "--rank", "1", "--lattice", "weight", "--q", "4", "--bound", "4",
                 "--quiet"]) == 0


def test_complex_zero_sphere(capsys):
    assert main(["complex", "--type", "A", "--rank", "3", "--I0", "1,3", "--format", "json"]) == 0
    out = capsys.readouterr().out
    rep = json.loads(out[:out.rindex("overall:")])
    assert rep["pass"] and rep["notes"]["betti"] == [2]


def test_corrupt_sign_fails(capsys):
    assert main(["hl-char", "--type", "B", "--rank", "2", "--corrupt-sign", "--quiet"]) == 1
    assert "first discrepancy at" in capsys.readouterr().out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solomon", "--lattice", "mixed"])
    assert exc.value.code == 2
    assert main(["solomon", "--type", "E", "--rank", "6"]) == 2
    assert main(["complex", "--type", "A", "--rank", "2", "--I0", "1,2"]) == 2
    with pytest.raises(SystemExit):
        main(["complex", "--I0", "x"])


def test_hypothesis_failure_is_reported(capsys):
    assert main(["hl-analogue", "--type", "D", "--rank", "4", "--I0", "1,2", "--quiet"]) == 1


def test_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    args = ["hl-analogue", "--type", "A", "--rank", "3", "--I0", "1,3", "--format", "json", "--quiet"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    files = sorted(p.name for p in a.iterdir())
    assert files and files == sorted(p.name for p in b.iterdir())
    for name in files:
        ta, tb = (a / name).read_text(), (b / name).read_text()
        assert ta == tb
        rep = VerificationReport.from_json(ta)
        assert json.loads(rep.to_json()) == json.loads(ta)


def test_datum_file(tmp_path, capsys):
    f = tmp_path / "a1.json"
    f.write_text(json.dumps({"cartan_type": "A", "rank": 1, "lattice_kind": "root",
                             "lambda": {"1": 1}, "lambda_star": {"1": 2}}))
    assert main(["kato-affine", "--datum", str(f), "--q", "4", "--bound", "4", "--quiet"]) == 0
    f.write_text(json.dumps({"cartan_type": "A", "rank": 1, "lattice_kind": "weight",
                             "lambda": {"1": 1}, "lambda_star": {"1": 2}}))
    assert main(["kato-affine", "--datum", str(f), "--quiet"]) == 2
