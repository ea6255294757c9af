from __future__ import annotations

import csv
import io
import json

import pytest

from ccattack import bench
from ccattack.cli import EXIT_NO_SOLUTION, EXIT_OK, EXIT_USAGE, main

WORKED = ["attack", "--model", "sg", "--keystream", "1011110", "--ps", "1+x+x^3", "--pa", "1+x+x^7",
          "--H", "3", "--N", "10"]


def test_gen_sg(tmp_path, capsys):
    out = tmp_path / "ks.txt"
    rc = main(["gen", "--gen", "sg", "--ps", "1+x+x^3", "--pa", "1+x+x^7", "--ss", "001", "--sa", "1111101",
               "--len", "5", "--out", str(out), "--reveal"])
    assert rc == EXIT_OK
    assert out.read_text() == "11110\n"
    assert "mask 0011101001" in capsys.readouterr().out


def test_gen_asg_with_constant_control(tmp_path):
    out = tmp_path / "ks.txt"
    rc = main(["gen", "--gen", "asg", "--ps", "1+x", "--ss", "1", "--pa", "1+x+x^7", "--sa", "1011001",
               "--pb", "1+x^3+x^7", "--sb", "0100111", "--len", "10", "--out", str(out)])
    assert rc == EXIT_OK
    assert out.read_text() == "1011001001\n"


def test_gen_zero_length(tmp_path):
    out = tmp_path / "ks.txt"
    rc = main(["gen", "--gen", "sg", "--ps", "1+x+x^3", "--pa", "1+x+x^7", "--ss", "001", "--sa", "1111101",
               "--len", "0", "--out", str(out)])
    assert rc == EXIT_OK and out.read_text() == ""


@pytest.mark.parametrize("bad", [["--sa", "0000000"], ["--pa", "x+x^7"], ["--sa", "111"]])
def test_gen_rejects_bad_input(tmp_path, bad):
    args = {"--ps": "1+x+x^3", "--pa": "1+x+x^7", "--ss": "001", "--sa": "1111101"}
    args[bad[0]] = bad[1]
    flat = [v for kv in args.items() for v in kv]
    assert main(["gen", "--gen", "sg", *flat, "--len", "5"]) == EXIT_USAGE


def test_attack_worked_example(tmp_path, capsys):
    out = tmp_path / "r.json"
    rc = main([*WORKED, "--out", str(out)])
    text = capsys.readouterr().out
    assert "trimmed 11110 discarded 10" in text
    doc = json.loads(out.read_text())
    assert doc["schema"] == "ccattack-report/1"
    assert rc == (EXIT_OK if doc["report"]["accepted"] else EXIT_NO_SOLUTION)


def test_attack_keystream_from_file(tmp_path):
    ks = tmp_path / "ks.txt"
    ks.write_text("1011110\n")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main([*WORKED, "--out", str(a)])
    args = list(WORKED)
    args[args.index("1011110")] = str(ks)
    main([*args, "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("extra", [["--keystream", ""], ["--keystream", "10a1"], ["--H", "9"], ["--pa", "1+x^7+x^7"]])
def test_attack_usage_errors(extra):
    args = list(WORKED)
    flag = extra[0]
    args[args.index(flag) + 1] = extra[1]
    assert main(args) == EXIT_USAGE


def test_attack_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main([*WORKED, "--seed", "5", "--out", str(a)])
    main([*WORKED, "--seed", "5", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_attack_timing_is_opt_in(tmp_path):
    a = tmp_path / "a.json"
    main([*WORKED, "--timing", "--out", str(a)])
    assert "wall_clock" in json.loads(a.read_text())["report"]


def test_bench_csv(tmp_path):
    out = tmp_path / "b.csv"
    plot = tmp_path / "p.json"
    assert main(["bench", "--grid", "(20,15,7)", "--trials", "2", "--seed", "1", "--out", str(out),
                 "--plot-data", str(plot)]) == EXIT_OK
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == bench.HEADER
    assert len(rows) == 3 and all(r[3] == "128" for r in rows[1:])
    data = json.loads(plot.read_text())
    assert data["perLA"][0]["LA"] == 7 and "meanReduction" in data


def test_bench_zero_trials(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--grid", "(20,15,7)", "--trials", "0", "--out", str(out)]) == EXIT_OK
    assert out.read_text() == ",".join(bench.HEADER) + "\n"


def test_bench_solved_rows_at_threshold(tmp_path):
    out = tmp_path / "b.csv"
    main(["bench", "--grid", "(33,22,7)", "--trials", "6", "--seed", "0", "--out", str(out)])
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    solved = [r for r in rows if r["solved"] == "true"]
    assert solved
    assert all(r["dist"] == r["thres"] for r in solved)


@pytest.mark.parametrize("grid", ["(20,15)", "(10,15,7)", "(20,15,40)", ""])
def test_bench_bad_grid(grid):
    assert main(["bench", "--grid", grid, "--trials", "1"]) == EXIT_USAGE


def test_grid_star():
    assert bench.parse_grid("(*,28,7); (33,22,7)") == [bench.GridPoint(None, 28, 7), bench.GridPoint(33, 22, 7)]


def test_graph_dot(tmp_path):
    out = tmp_path / "g.dot"
    assert main(["graph", "--x", "1110110111", "--y", "1101011", "--kmax", "1", "--out", str(out)]) == EXIT_OK
    text = out.read_text()
    assert text.count("->") == 38 and "color=grey" in text


def test_graph_chain(tmp_path):
    out = tmp_path / "g.dot"
    main(["graph", "--x", "101", "--y", "101", "--kmax", "1", "--out", str(out)])
    assert out.read_text().count("->") == 4


def test_graph_invalid(capsys):
    assert main(["graph", "--x", "10", "--y", "101", "--kmax", "1"]) == EXIT_USAGE
    assert main(["graph", "--x", "10", "--y", "1"]) == EXIT_USAGE


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "ccattack", "graph", "--x", "11", "--y", "1", "--kmax", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("digraph")
