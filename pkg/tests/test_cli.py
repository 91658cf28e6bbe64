"""CLI tests: formats, exit codes, census grids, entry points."""

import csv
import io
import json
import shutil
import subprocess
import sys

import pytest

from scrimkit import cli, gf
from scrimkit.chainring import get_chain_ring
from scrimkit.fpoly import constant, parse, xn_minus_1

import oracles


def run_cli(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_factor_json_round_trip(capsys):
    code, out, err = run_cli(["factor", "--q", "2", "--n", "7", "--format", "json"], capsys)
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["q"] == 2 and payload["n"] == 7
    assert payload["omega"] == ["x + 1"]
    assert len(payload["lambda"]) == 1
    assert set(payload["lambda"][0]) == set(oracles.CUBIC_PAIR_2_7)
    assert payload["counts"]["explicit"] == {"omega": 1, "lambda": 1}
    assert payload["counts"]["recursive"] == {"omega": 1}
    spec = gf.field_for_q(2)
    prod = constant(spec, spec.one)
    for s in payload["omega"]:
        prod = prod * parse(s, spec)
    for g, gd in payload["lambda"]:
        prod = prod * parse(g, spec) * parse(gd, spec)
    assert prod == xn_minus_1(spec, 7)


def test_factor_text(capsys):
    code, out, err = run_cli(["factor", "--q", "2", "--n", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x^3 - 1 over GF(2^2)"
    assert "omega (3):" in lines
    for s in oracles.OMEGA_2_3:
        assert f"  {s}" in lines
    assert "lambda (0):" in lines
    assert lines[-1] == (
        "counts: explicit omega=3 lambda=0; direct omega=3 lambda=0; "
        "recursive omega=3; agree=true"
    )


def test_exit_code_precondition(capsys):
    code, out, err = run_cli(["factor", "--q", "3", "--n", "6"], capsys)
    assert code == 3 and err.startswith("error:")


def test_exit_code_bad_value(capsys):
    code, out, err = run_cli(["factor", "--q", "6", "--n", "5"], capsys)
    assert code == 2 and "error:" in err
    code, out, err = run_cli(["factor", "--q", "2", "--n", "0"], capsys)
    assert code == 2


def test_exit_code_bad_flags():
    with pytest.raises(SystemExit) as ei:
        cli.main(["factor", "--q", "2"])  # missing --n
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        cli.main(["nonsense"])
    assert ei.value.code == 2


def test_codes_lcd(capsys):
    code, out, err = run_cli(["codes", "--q", "2", "--n", "7", "--mode", "lcd"], capsys)
    assert code == 0 and out == "4\n"
    code, out, err = run_cli(
        ["codes", "--q", "2", "--n", "7", "--mode", "lcd", "--enumerate"], capsys
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "4" and len(lines) == 5
    spec = gf.field_for_q(2)
    gens = [parse(s, spec) for s in lines[1:]]
    assert len(set(gens)) == 4
    xn1 = xn_minus_1(spec, 7)
    for g in gens:
        assert (xn1 % g).is_zero()
    assert "1" in lines[1:]


def test_codes_selfdual(capsys):
    code, out, err = run_cli(
        ["codes", "--q", "2", "--n", "7", "--mode", "selfdual", "--t", "2", "--enumerate"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3" and len(lines) == 4
    ring = get_chain_ring(gf.field_for_q(2), 2)
    for s in lines[1:]:
        parse(s, ring)  # canonical text must round-trip into the ring
    # Odd t has no self-dual codes: count 0, nothing enumerated.
    code, out, err = run_cli(
        ["codes", "--q", "2", "--n", "3", "--mode", "selfdual", "--t", "3", "--enumerate"],
        capsys,
    )
    assert code == 0 and out == "0\n"


def test_codes_selfdual_requires_t(capsys):
    code, out, err = run_cli(["codes", "--q", "2", "--n", "3", "--mode", "selfdual"], capsys)
    assert code == 3 and "--t" in err
    code, out, err = run_cli(
        ["codes", "--q", "2", "--n", "3", "--mode", "selfdual", "--t", "1"], capsys
    )
    assert code == 3


def test_codes_selfdual_generator_example(capsys):
    code, out, err = run_cli(
        ["codes", "--q", "2", "--n", "3", "--mode", "selfdual", "--t", "2", "--enumerate"],
        capsys,
    )
    assert code == 0 and out == "1\n(u)\n"


def _parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_census_csv(capsys):
    code, out, err = run_cli(
        ["census", "--q-list", "2", "--n-max", "8", "--t-list", "2"], capsys
    )
    assert code == 0
    header, rows = _parse_csv(out)
    assert header == cli.CENSUS_HEADER
    assert [r[1] for r in rows] == ["1", "3", "5", "7"]
    for n in (2, 4, 6, 8):
        assert f"skipping q=2 n={n}" in err
    row7 = rows[3]
    assert row7[:8] == ["2", "7", "2", "1", "1", "4", "3", "true"]
    assert int(row7[8]) >= 0


def test_census_without_t(capsys):
    code, out, err = run_cli(["census", "--q-list", "3", "--n-max", "4"], capsys)
    assert code == 0
    header, rows = _parse_csv(out)
    assert header == cli.CENSUS_HEADER
    assert [r[:3] for r in rows] == [["3", "1", ""], ["3", "2", ""], ["3", "4", ""]]
    assert rows[2][3:8] == ["4", "0", "16", "", "true"]


def test_census_jsonl_matches_csv(capsys):
    args = ["census", "--q-list", "2,3", "--n-max", "5", "--t-list", "2"]
    code, csv_out, _ = run_cli(args, capsys)
    assert code == 0
    code, jsonl_out, _ = run_cli(args + ["--out", "jsonl"], capsys)
    assert code == 0
    _, rows = _parse_csv(csv_out)
    dicts = [json.loads(line) for line in jsonl_out.splitlines()]
    assert len(dicts) == len(rows)
    for row, d in zip(rows, dicts):
        assert set(d) == set(cli.CENSUS_HEADER)
        assert [str(d["q"]), str(d["n"]), str(d["t"])] == row[:3]
        assert [str(d["omega"]), str(d["lambda"]), str(d["lcd_count"])] == row[3:6]
        assert str(d["selfdual_count"]) == row[6]
        assert str(d["agree"]).lower() == row[7]


def test_census_out_file(tmp_path, capsys):
    target = tmp_path / "grid.csv"
    code, out, err = run_cli(
        ["census", "--q-list", "2", "--n-max", "3", "--out-file", str(target)], capsys
    )
    assert code == 0 and out == ""
    header, rows = _parse_csv(target.read_text())
    assert header == cli.CENSUS_HEADER and len(rows) == 2


def test_census_out_file_unwritable(capsys):
    code, out, err = run_cli(
        ["census", "--q-list", "2", "--n-max", "3", "--out-file", "/no_such_dir/x.csv"],
        capsys,
    )
    assert code == 5 and "cannot write" in err


def test_census_jobs_parity(capsys):
    args = ["census", "--q-list", "2,3", "--n-max", "6", "--t-list", "2,3"]
    code, seq_out, _ = run_cli(args + ["--jobs", "1"], capsys)
    assert code == 0
    code, par_out, _ = run_cli(args + ["--jobs", "2"], capsys)
    assert code == 0
    strip = lambda text: [r[:-1] for r in csv.reader(io.StringIO(text))]
    assert strip(seq_out) == strip(par_out)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "scrimkit.cli", "factor", "--q", "2", "--n", "3",
         "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["omega"] == list(oracles.OMEGA_2_3)


def test_console_script():
    exe = shutil.which("scrimkit")
    assert exe, "console script not on PATH"
    proc = subprocess.run(
        [exe, "codes", "--q", "2", "--n", "7", "--mode", "lcd"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "4\n"