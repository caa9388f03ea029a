import pytest
from click.testing import CliRunner

from siggb import bench
from siggb.bench import RunStats, read_csv, run_benchmark, write_csv
from siggb.cli import main


@pytest.fixture
def cli():
    return CliRunner()


def test_compute_toy(cli):
    r = cli.invoke(main, ["compute", "--system", "toy", "--strategy", "f5",
                          "--verify", "--certify", "--print-basis"])
    assert r.exit_code == 0, r.output
    assert "verify: ok" in r.output and "certify: ok" in r.output
    assert "y^2 - x" in r.output


def test_compute_poly_file(cli, tmp_path):
    f = tmp_path / "sys.poly"
    f.write_text("vars: a, b\nchar: 101\na^2 - b\na*b - 1\n")
    r = cli.invoke(main, ["compute", "--system", str(f), "--verify"])
    assert r.exit_code == 0, r.output


def test_parse_error_exit(cli, tmp_path):
    f = tmp_path / "bad.poly"
    f.write_text("vars: x\nx + $\n")
    r = cli.invoke(main, ["compute", "--system", str(f)])
    assert r.exit_code == 3
    assert "line 2" in r.output


def test_unknown_system_exit(cli):
    r = cli.invoke(main, ["compute", "--system", "lorenz3"])
    assert r.exit_code == 3


def test_timeout_exit(cli):
    r = cli.invoke(main, ["compute", "--system", "cyclic6", "--strategy", "ggv",
                          "--timeout", "0.000001"])
    assert r.exit_code == 4


def test_ceiling_exit(cli):
    r = cli.invoke(main, ["compute", "--system", "cyclic5", "--strategy", "none",
                          "--max-pairs", "2"])
    assert r.exit_code == 4


def test_verify_failure_exit(cli, monkeypatch):
    monkeypatch.setattr(bench, "ideals_equal", lambda a, b: False)
    r = cli.invoke(main, ["compute", "--system", "toy", "--verify"])
    assert r.exit_code == 2
    assert "MISMATCH" in r.output


def test_stats_csv_roundtrip(cli, tmp_path):
    out = tmp_path / "s.csv"
    r = cli.invoke(main, ["compute", "--system", "katsura4", "--strategy", "arri",
                          "--stats", str(out)])
    assert r.exit_code == 0, r.output
    (row,) = read_csv(out)
    assert (row.system, row.strategy, row.pairs_reduced, row.zero_reductions) == \
        ("katsura4", "arri", 23, 0)
    assert out.read_text().splitlines()[0] == ",".join(bench.CSV_COLUMNS)


def test_csv_fidelity(tmp_path):
    rows = [RunStats("a", "f5", 10, 2, 4, 0, 1.5), RunStats("b", "ggv", 7, 0, 3, 1, 0.0)]
    write_csv(rows, tmp_path / "x.csv")
    assert read_csv(tmp_path / "x.csv") == rows


def test_runstats_rejects_impossible():
    with pytest.raises(ValueError):
        RunStats("a", "f5", 1, 2, 1, 0, 0.0)


def test_table_deterministic(cli, monkeypatch):
    monkeypatch.setenv("SIGGB_THREADS", "1")
    a = run_benchmark(["cyclic4", "katsura4"], ["f5", "ggv", "arri"])
    b = run_benchmark(["cyclic4", "katsura4"], ["f5", "ggv", "arri"])
    strip = lambda rs: [(r.system, r.strategy, r.pairs_reduced, r.zero_reductions,  # noqa: E731
                         r.basis_size) for r in rs]
    assert strip(a) == strip(b)
    r = cli.invoke(main, ["table", "--system", "cyclic4", "--strategy", "arri"])
    assert r.exit_code == 0 and "cyclic4" in r.output


def test_worker_cap(monkeypatch):
    monkeypatch.setenv("SIGGB_THREADS", "1")
    assert bench.worker_count(10) == 1
