import csv
import io
import json

import pytest

from ptspectrum.cli import main
from ptspectrum.matrix import SquareMatrix, pt_well
from ptspectrum.matrixfile import dump_matrix
from ptspectrum.report import CSV_COLUMNS, ReportDocument
from ptspectrum.scalars import I


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, M in {
        "zero3": SquareMatrix.zeros(3),
        "well1": pt_well(1),
        "diag_i0i": SquareMatrix.diag([I, 0, I]),
        "diag_i00": SquareMatrix.diag([I, 0, 0]),
        "herm": SquareMatrix([[1, 2 + I], [2 - I, -3]]),
    }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(dump_matrix(M))
        paths[name] = str(p)
    return paths


def test_analyze_unbroken(capsys):
    code, out, _ = run(capsys, "analyze", "--generator", "pt-well", "--xi", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["payload"]["broken"] is False
    assert doc["payload"]["real_inertia"] == {"nu": 0, "delta": 3, "pi": 0}


def test_analyze_broken(capsys):
    code, out, _ = run(capsys, "analyze", "--generator", "pt-well", "--xi", "2")
    assert code == 0
    assert "real inertia: {1,1,1}" in out and "broken PT-symmetry: yes" in out


def test_analyze_vanishing_minor(capsys, files):
    code, out, err = run(capsys, "analyze", "--input", files["zero3"], "--format", "json")
    doc = json.loads(out)
    assert code == 2
    assert doc["status"] == "vanishing-minor"
    assert doc["payload"]["index"] == 2 and doc["payload"]["repeated_root"] is True
    assert "d_2" in err


def test_analyze_not_real(capsys, files):
    code, out, _ = run(capsys, "analyze", "--input", files["diag_i00"], "--format", "json")
    assert code == 2 and json.loads(out)["status"] == "not-real-charpoly"


def test_analyze_float_near_degenerate(capsys):
    code, out, _ = run(capsys, "analyze", "--generator", "pt-well", "--xi", "1.41421356",
                       "--arith", "float", "--format", "json")
    assert code == 2 and json.loads(out)["status"] == "near-degenerate"


def test_io_errors_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", "--input", str(tmp_path / "missing.json"))
    assert code == 1 and "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"entries": [[1,]]}')
    code, _, err = run(capsys, "analyze", "--input", str(bad))
    assert code == 1 and "bad.json:1:" in err
    code, _, _ = run(capsys, "analyze")
    assert code == 1


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", "--input", files["well1"], "--format", "json")
    p = json.loads(out)["payload"]
    assert code == 0 and p["pt_symmetric"] is True and p["charpoly_real"] is True
    _, out, _ = run(capsys, "check", "--input", files["diag_i0i"], "--format", "json")
    assert json.loads(out)["payload"]["pt_symmetric"] is False
    _, out, _ = run(capsys, "check", "--input", files["herm"], "--format", "json")
    p = json.loads(out)["payload"]
    assert p["pt_symmetric"] is False and p["charpoly_real"] is True


def test_oracle_subcommand(capsys, files):
    code, out, _ = run(capsys, "oracle", "--generator", "pt-well", "--xi", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "match"
    assert doc["payload"]["oracle"] == {"nu": 1, "delta": 1, "pi": 1}
    code, out, _ = run(capsys, "oracle", "--input", files["zero3"])
    assert code == 2 and "inconclusive" in out


def test_sweep_csv_and_refine(capsys):
    code, out, _ = run(capsys, "sweep", "--generator", "pt-well", "--param-range", "-3:3:1/4",
                       "--refine", "1e-9", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    br = doc["payload"]["brackets"]
    assert len(br) == 2 and all(b["status"] == "refined" for b in br)
    assert br[0]["lo_float"] < -2 ** 0.5 < br[0]["hi_float"]
    assert br[1]["lo_float"] < 2 ** 0.5 < br[1]["hi_float"]

    code, out, _ = run(capsys, "sweep", "--generator", "pt-well-n", "--dim", "5",
                       "--param-range", "0:3:1/10", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 32
    broken = [r[4] for r in rows[1:] if r[5] == "ok"]
    assert broken == sorted(broken, key=lambda b: b == "true")  # false...false then true...true


def test_sweep_single_row(capsys):
    code, out, _ = run(capsys, "sweep", "--generator", "pt-well", "--param-range", "1:1:1", "--format", "csv")
    assert code == 0 and out.splitlines() == [",".join(CSV_COLUMNS), "1.0,0,3,0,false,ok"]


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--generator", "pt-well", "--param-range", "0:1"],
        ["sweep", "--generator", "pt-well", "--param-range", "1:0:1"],
        ["sweep", "--generator", "pt-well", "--param-range", "0:1:0"],
        ["sweep", "--param-range", "0:1:1"],
        ["sweep", "--generator", "pt-well-n", "--param-range", "0:1:1"],
        ["sweep", "--generator", "pt-well", "--param-range", "0:1:1", "--refine", "0"],
        ["analyze", "--generator", "pt-well", "--format", "csv", "--xi", "1"],
        ["frobnicate"],
    ],
)
def test_bad_flags_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 1


def test_affine_sweep(capsys, tmp_path):
    fam = tmp_path / "fam.json"
    fam.write_text(json.dumps({"base": [[0, 1, 0], [1, 0, 1], [0, 1, 0]],
                               "slope": [[[0, 1], 0, 0], [0, 0, 0], [0, 0, [0, -1]]]}))
    code, out, _ = run(capsys, "sweep", "--generator", "affine", "--input", str(fam),
                       "--param-range", "0:2:1/2", "--format", "json")
    assert code == 0 and len(json.loads(out)["payload"]["brackets"]) == 1


def test_machine_output_is_deterministic(capsys, tmp_path):
    argv = ["sweep", "--generator", "pt-well", "--param-range", "-3:3:1/4", "--refine", "1e-9", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--workers", "2")
    assert a == b
    _, c, _ = run(capsys, *argv)
    assert a == c


def test_report_round_trip(capsys, files):
    for argv in (
        ["analyze", "--generator", "pt-well", "--xi", "2"],
        ["analyze", "--input", files["zero3"]],
        ["check", "--input", files["herm"]],
        ["oracle", "--generator", "pt-well", "--xi", "1"],
        ["sweep", "--generator", "pt-well", "--param-range", "0:2:1/2", "--refine", "1/100"],
    ):
        _, out, _ = run(capsys, *argv, "--format", "json")
        doc = ReportDocument.from_json(out)
        assert doc.to_json() == out
        assert ReportDocument.from_json(doc.to_json()) == doc


def test_output_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "analyze", "--generator", "pt-well", "--xi", "1/2",
                       "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["payload"]["real_count"] == 3


def test_negative_xi(capsys):
    code, out, _ = run(capsys, "analyze", "--generator", "pt-well", "--xi", "-3/2")
    assert code == 0 and "{1,1,1}" in out
