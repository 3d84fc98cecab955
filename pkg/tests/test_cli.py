import json
import subprocess
import sys
from pathlib import Path

import pytest

from grsdual import fileformat
from grsdual.cli import main
from grsdual.construct import theorem4_tuples, theorem123_tuples

GOLDEN = Path(__file__).parent / "golden"


def _construct_argv(params, out):
    d = params.as_dict()
    argv = ["construct", "--theorem", str(params.variant)]
    for key, val in d.items():
        argv += [f"--{key}", str(val)]
    return argv + ["--out", str(out)]


def test_construct_theorem1_f81(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["construct", "--theorem", "1", "--r", "9", "--m", "5", "--t", "6", "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "n=30 k=15 q=81 lambda=1"
    cf = fileformat.read(out)
    assert cf.code.n == 30 and cf.context().q == 81
    assert cf.provenance["params"] == {"r": 9, "m": 5, "t": 6}


def test_construct_to_stdout(capsys):
    assert main(["construct", "--theorem", "4", "--p", "5", "--mdeg", "2", "--t", "2", "--e", "1"]) == 0
    captured = capsys.readouterr()
    assert "n=20 k=10 q=25" in captured.err
    assert captured.out == (GOLDEN / "theorem4.json").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--theorem", "1", "--r", "9", "--m", "5", "--t", "9"],
        ["construct", "--theorem", "1", "--r", "9", "--m", "5"],
        ["construct", "--theorem", "4", "--p", "5", "--mdeg", "2", "--t", "2"],
        ["construct", "--theorem", "5"],
        ["construct", "--theorem", "2", "--r", "5", "--m", "3", "--t", "2"],
        ["census", "--q", "12"],
        ["census", "--q", "64"],
        ["verify"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with_exit = None
    try:
        with_exit = main(argv)
    except SystemExit as exc:
        with_exit = exc.code
    assert with_exit == 2
    assert capsys.readouterr().err


def test_t_too_large_message_names_bound(capsys):
    assert main(["construct", "--theorem", "1", "--r", "9", "--m", "5", "--t", "9"]) == 2
    assert "8" in capsys.readouterr().err


@pytest.mark.parametrize("name", ["theorem1", "theorem2", "theorem3", "theorem4", "demo_f13"])
def test_verify_goldens(name, capsys):
    assert main(["verify", "--in", str(GOLDEN / f"{name}.json")]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["self_dual"] is True and report["mds_verdict"] != "refuted"


def test_verify_theorem1_q25_report(capsys):
    assert main(["verify", "--in", str(GOLDEN / "theorem1.json")]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["mds_verdict"] == "proved_exhaustive"
    assert report["min_distance"] == 4


def _tamper(tmp_path, src, **changes):
    obj = json.loads((GOLDEN / src).read_text())
    obj.update(changes)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    return path


def test_verify_tampered_multipliers(tmp_path, capsys):
    path = _tamper(tmp_path, "theorem1.json", multipliers=[1] * 6, provenance=None)
    assert main(["verify", "--in", str(path)]) == 1
    assert json.loads(capsys.readouterr().out)["self_dual"] is False


def test_verify_duplicate_points(tmp_path, capsys):
    path = _tamper(tmp_path, "theorem1.json", points=[7, 7, 1, 16, 11, 3], provenance=None)
    assert main(["verify", "--in", str(path)]) == 1
    assert json.loads(capsys.readouterr().out)["mds_verdict"] == "refuted"


def test_verify_forced_modes(capsys):
    path = str(GOLDEN / "theorem4.json")
    assert main(["verify", "--in", path, "--mds", "structural"]) == 0
    assert json.loads(capsys.readouterr().out)["mds_verdict"] == "structural_only"
    assert main(["verify", "--in", path, "--mds", "exhaustive"]) == 2


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "{}",
        '{"format_version": 2}',
    ],
)
def test_verify_malformed_file(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    assert main(["verify", "--in", str(path)]) == 2
    assert main(["matrix", "--in", str(path)]) == 2


def test_wrong_generator_rejected(tmp_path):
    obj = json.loads((GOLDEN / "demo_f13.json").read_text())
    obj["field"]["generator"] = 6
    path = tmp_path / "g.json"
    path.write_text(json.dumps(obj))
    assert main(["verify", "--in", str(path)]) == 2


def test_missing_file(tmp_path):
    assert main(["verify", "--in", str(tmp_path / "nope.json")]) == 2
    assert main(["matrix", "--in", str(tmp_path / "nope.json")]) == 2


def test_matrix_demo(capsys):
    assert main(["matrix", "--in", str(GOLDEN / "demo_f13.json")]) == 0
    assert capsys.readouterr().out == "8 1\n"


def test_matrix_extended_has_infinity_column(capsys):
    assert main(["matrix", "--in", str(GOLDEN / "theorem2.json"), "--format", "csv"]) == 0
    rows = [list(map(int, line.split(","))) for line in capsys.readouterr().out.splitlines()]
    assert len(rows) == 5 and all(len(r) == 10 for r in rows)
    assert [r[-1] for r in rows] == [0, 0, 0, 0, 1]
    cf = fileformat.read(GOLDEN / "theorem2.json")
    assert rows[0][:-1] == list(cf.code.multipliers)


def test_census_q81_new(capsys):
    assert main(["census", "--q", "81", "--source", "new"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert 30 in report["union_new"]


def test_census_out_and_golden(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["census", "--q", "81", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "census_q81.json").read_bytes()
    assert "count_new=" in capsys.readouterr().out


def test_census_flags(capsys):
    assert main(["census", "--q", "125", "--source", "new", "--include-e0", "--exclude-n2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["options"] == {"include_e0": True, "include_n2": False, "length_cap": "q+1"}
    assert 2 not in report["union_new"]


def test_census_sweep_table(capsys):
    assert main(["census", "--q", "81", "--sweep"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["include_e0", "include_n2", "length_cap", "count_new", "count_known"]
    assert len(lines) == 9


def test_construct_then_verify_all_small_tuples(tmp_path, capsys):
    count = 0
    for q in (9, 25, 49, 81, 121):
        for params in list(theorem123_tuples(q)) + list(theorem4_tuples(q)):
            out = tmp_path / f"{q}_{count}.json"
            assert main(_construct_argv(params, out)) == 0, params
            assert main(["verify", "--in", str(out)]) == 0, params
            count += 1
    capsys.readouterr()
    assert count > 100


def test_module_entry_point(tmp_path):
    out = tmp_path / "c.json"
    proc = subprocess.run(
        [sys.executable, "-m", "grsdual", "construct", "--theorem", "3", "--r", "5", "--m", "3", "--t", "2",
         "--out", str(out)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.read_bytes() == (GOLDEN / "theorem3.json").read_bytes()
