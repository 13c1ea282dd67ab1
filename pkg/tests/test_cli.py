import csv
import shutil
import subprocess
import sys

import pytest

from relaxplex.cli import RunRecord, main, permille

from conftest import DATA, complete, gnp

HEADER = "instance,k,bound,status,size,nodes,time_ms,color_wins,partition_wins,percent_color"


def read_rows(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_header_order():
    assert ",".join(RunRecord.header()) == HEADER


def test_permille():
    assert permille(1, 1) == 500
    assert permille(0, 0) == 0
    assert permille(2, 1) == 666


def test_solve_partition_wins(capsys):
    assert main(["solve", str(DATA / "partition_wins.clq"), "--k", "2", "--bound", "relaxpub"]) == 0
    out = capsys.readouterr().out
    assert "status    optimal" in out and "size      3" in out


def test_solve_c5_gcb(capsys, tmp_path):
    csv_path = tmp_path / "out.csv"
    assert main(["solve", str(DATA / "c5.clq"), "--k", "2", "--bound", "gcb", "--csv", str(csv_path)]) == 0
    assert "size      3" in capsys.readouterr().out
    rows = read_rows(csv_path)
    assert len(rows) == 1 and rows[0]["size"] == "3" and rows[0]["status"] == "optimal"


def test_solve_bad_k(capsys):
    assert main(["solve", str(DATA / "c5.clq"), "--k", "0"]) == 2
    assert "k must be ≥ 1" in capsys.readouterr().err


def test_solve_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.clq"
    bad.write_text("p edge 2 1\ne 1 3\n")
    assert main(["solve", str(bad), "--k", "2"]) == 2
    assert "vertex id out of range" in capsys.readouterr().err


def test_bad_bound_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["solve", str(DATA / "c5.clq"), "--k", "2", "--bound", "magic"])
    assert info.value.code == 2


def test_format_hint(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("# edges\n10 20\n20 30\n30 10\n")
    assert main(["solve", str(path), "--k", "1", "--format", "edgelist"]) == 0
    out = capsys.readouterr().out
    assert "size      3" in out and "kplex     10 20 30" in out


def write_instances(directory, corrupt=False):
    directory.mkdir()
    shutil.copy(DATA / "c5.clq", directory / "a_c5.clq")
    shutil.copy(DATA / "partition_wins.clq", directory / "b_partition_wins.clq")
    if corrupt:
        (directory / "c_bad.clq").write_text("p edge 2 1\ne 1 9\n")
    else:
        (directory / "c_k4.clq").write_text(complete(4).to_dimacs())


def test_bench_row_counts(tmp_path, capsys):
    write_instances(tmp_path / "inst")
    out = tmp_path / "bench.csv"
    assert main(["bench", str(tmp_path / "inst"), "--k-list", "2,3", "--bound-list", "gcb,relaxpub",
                 "--cutoff", "60", "--csv", str(out)]) == 0
    rows = read_rows(out)
    assert len(rows) == 12
    assert all(r["status"] == "optimal" for r in rows)
    assert out.read_text().splitlines()[0] == HEADER
    summary = capsys.readouterr().out
    assert "solved" in summary


def test_bench_empty_dir(tmp_path, caplog):
    (tmp_path / "empty").mkdir()
    out = tmp_path / "bench.csv"
    assert main(["bench", str(tmp_path / "empty"), "--csv", str(out)]) == 0
    assert out.read_text() == HEADER + "\n"
    assert "no instance files" in caplog.text


def test_bench_corrupt_file(tmp_path):
    write_instances(tmp_path / "inst", corrupt=True)
    out = tmp_path / "bench.csv"
    assert main(["bench", str(tmp_path / "inst"), "--k-list", "2", "--bound-list", "gcb,relaxpub",
                 "--csv", str(out)]) == 0
    rows = read_rows(out)
    assert len(rows) == 6
    assert sum(r["status"] == "error" for r in rows) == 2


def test_bench_appends_without_second_header(tmp_path):
    write_instances(tmp_path / "inst")
    out = tmp_path / "bench.csv"
    args = ["bench", str(tmp_path / "inst"), "--k-list", "2", "--bound-list", "relaxpub", "--csv", str(out)]
    main(args)
    main(args)
    lines = out.read_text().splitlines()
    assert lines.count(HEADER) == 1 and len(lines) == 7


def test_bench_parallel_matches_serial(tmp_path):
    write_instances(tmp_path / "inst")
    serial, parallel = tmp_path / "s.csv", tmp_path / "p.csv"
    base = ["bench", str(tmp_path / "inst"), "--k-list", "2", "--bound-list", "gcb,disepub"]
    main(base + ["--csv", str(serial)])
    main(base + ["--csv", str(parallel), "--jobs", "2"])
    strip = lambda rows: [{k: v for k, v in r.items() if k != "time_ms"} for r in rows]
    assert strip(read_rows(serial)) == strip(read_rows(parallel))


def test_oracle_command(tmp_path, capsys):
    assert main(["oracle", str(DATA / "c5.clq"), "--k", "2"]) == 0
    assert "size 3" in capsys.readouterr().out
    k4 = tmp_path / "k4.clq"
    k4.write_text(complete(4).to_dimacs())
    assert main(["oracle", str(k4), "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert "size 4" in out and "witness 1 2 3 4" in out
    big = tmp_path / "big.clq"
    big.write_text(gnp(30, 0.3, 1).to_dimacs())
    assert main(["oracle", str(big), "--k", "2"]) == 2
    assert "limited to 25 vertices" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "relaxplex", "oracle", str(DATA / "c5.clq"), "--k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "size 3" in proc.stdout
