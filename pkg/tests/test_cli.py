import csv
import io
import json
import math

import pytest

import starradii.cli as cli_mod
from starradii.cli import main
from starradii.errors import NoSignChangeError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_table_pi1_csv(capsys):
    code, out, _ = run(capsys, "table", "--class", "pi1", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert list(rows[0]) == list(cli_mod.TABLE_COLUMNS)
    assert len(rows) == 8
    lem = next(r for r in rows if r["target"] == "S_L")
    assert lem["closed_form"].startswith("0.067217")
    assert lem["sharp"] == "true"


def test_table_round_trip_reproduces_exit_status(capsys):
    code, out, _ = run(capsys, "table", "--class", "all", "--alpha", "0,0.25,0.5")
    rows = parse_csv(out)
    assert len(rows) == 20
    for row in rows:
        assert abs(float(row["closed_form"]) - float(row["solved"])) == pytest.approx(float(row["abs_diff"]), abs=1e-18)
    recheck = 0 if all(float(r["abs_diff"]) <= 1e-9 for r in rows) else 2
    assert recheck == code == 0


def test_table_pi2_alpha_zero(capsys):
    code, out, _ = run(capsys, "table", "--class", "pi2", "--alpha", "0")
    row = parse_csv(out)[0]
    assert row["alpha"] == "0"
    assert float(row["closed_form"]) == 0.2


def test_table_half_plane_half_matches_parabolic(capsys):
    _, out, _ = run(capsys, "table", "--class", "pi1", "--alpha", "0.5")
    rows = parse_csv(out)
    hp = next(r for r in rows if r["alpha"] == "0.5")
    par = next(r for r in rows if r["target"] == "S_P")
    assert float(hp["closed_form"]) == pytest.approx(float(par["closed_form"]), abs=1e-12)


def test_table_tight_tolerance_fails(capsys):
    code, out, _ = run(capsys, "table", "--class", "all", "--tol", "1e-20")
    assert code == 2
    assert parse_csv(out)


def test_table_json_and_md(capsys):
    code, out, _ = run(capsys, "table", "--class", "pi2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) == 8 and data["metadata"]["version"]
    code, out, _ = run(capsys, "table", "--class", "pi2", "--target", "lune", "--format", "md")
    assert code == 0 and out.startswith("| class |") and "S_lune" in out


def test_table_solver_failure(capsys, monkeypatch):
    def boom(*a, **k):
        raise NoSignChangeError("no change")

    monkeypatch.setattr(cli_mod, "radius_result", boom)
    code, _, err = run(capsys, "table")
    assert code == 2 and "solver failure" in err


def test_verify_exp(capsys):
    code, out, _ = run(capsys, "verify", "--class", "pi1", "--target", "exp")
    assert code == 0
    data = json.loads(out)
    (rep,) = data["reports"]
    w = complex(rep["touch_point"]["re"], rep["touch_point"]["im"])
    assert abs(abs(math.log(w.real)) - 1) <= 1e-6
    assert data["metadata"]["tolerances"]["tol_touch"] == 1e-6


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--seed", "7")
    assert code == 0
    data = json.loads(out)
    assert data["metadata"]["seed"] == 7
    reports = data["reports"]
    assert len(reports) == 16
    assert sum("check_sharpness" in r["checks"] for r in reports) == 14
    lower = [(r["cls"], r["region"]["kind"]) for r in reports if "check_sharpness" not in r["checks"]]
    assert sorted(lower) == [("pi2", "lemniscate"), ("pi2", "sine")]


def test_verify_pi2_lune(capsys):
    code, out, _ = run(capsys, "verify", "--class", "pi2", "--target", "lune")
    assert code == 0
    w = json.loads(out)["reports"][0]["touch_point"]["re"]
    assert abs(abs(w * w - 1) - 2 * abs(w)) <= 1e-6
    assert w == pytest.approx(math.sqrt(2) - 1, abs=1e-6)


def test_verify_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--class", "pi1", "--target", "rational")
    _, b, _ = run(capsys, "verify", "--class", "pi1", "--target", "rational")
    assert a == b


def test_verify_failure_gives_partial_report(capsys, monkeypatch):
    calls = []

    def fake(cls, region, **kw):
        calls.append(region)
        if len(calls) == 2:
            raise RuntimeError("broken")
        return real(cls, region, **kw)

    real = cli_mod.cross_validate
    monkeypatch.setattr(cli_mod, "cross_validate", fake)
    code, out, err = run(capsys, "verify", "--class", "pi1")
    assert code == 2
    assert len(json.loads(out)["reports"]) == 1
    assert "broken" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--class", "pi3"],
        ["table", "--target", "circle"],
        ["table", "--alpha", "1.0"],
        ["table", "--alpha", "x"],
        ["verify", "--samples", "100"],
        ["table", "--format", "xml"],
        ["table", "--tol", "-1"],
        ["nosuchcommand"],
    ],
)
def test_bad_arguments(capsys, argv):
    assert main(argv) == 4


def test_unwritable_output(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = run(capsys, "table", "--out", str(blocker / "sub" / "t.csv"))
    assert code == 3
    code, _, _ = run(capsys, "plot", "--class", "pi1", "--target", "lune", "--out", str(blocker / "dir"))
    assert code == 3


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[starradii]\nclass = pi2\ntarget = cardioid\nformat = json\n")
    code, out, _ = run(capsys, "table", "--config", str(cfg))
    rows = json.loads(out)["rows"]
    assert code == 0 and [(r["class"], r["target"]) for r in rows] == [("pi2", "S_c")]
    code, out, _ = run(capsys, "table", "--config", str(cfg), "--class", "pi1", "--format", "csv")
    assert [(r["class"], r["target"]) for r in parse_csv(out)] == [("pi1", "S_c")]


def test_config_rejects_unknown_keys(capsys, tmp_path):
    cfg = tmp_path / "bad.ini"
    cfg.write_text("[starradii]\ncolour = red\n")
    assert main(["table", "--config", str(cfg)]) == 4


def test_config_file_missing(capsys, tmp_path):
    assert main(["table", "--config", str(tmp_path / "none.ini")]) == 4


def test_plot_cardioid_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["plot", "--class", "pi1", "--target", "cardioid", "--out", str(a)]) == 0
    assert main(["plot", "--class", "pi1", "--target", "cardioid", "--out", str(b)]) == 0
    text = a.read_text()
    assert text.startswith("<?xml") and "<svg" in text
    assert "S_c" in text and "R = 0.1139990637" in text
    assert a.read_bytes() == b.read_bytes()


def test_plot_directory_names(capsys, tmp_path):
    code = main(["plot", "--class", "pi1", "--target", "halfplane", "--alpha", "0", "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "pi1_halfplane_a0.svg").exists()
    code = main(["plot", "--class", "pi2", "--target", "sine", "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "pi2_sine.svg").exists()


def test_version(capsys):
    assert main(["--version"]) == 0
    assert "0.1.0" in capsys.readouterr().out
