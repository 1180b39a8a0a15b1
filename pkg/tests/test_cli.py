import json
import os

import pytest

from mccut import graph as gm
from mccut.cli import main

RED = gm.EdgeColor.RED


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.mcc"
    path.write_text("p mcc 2 1\ne 1 2 1.0 r\n")
    return str(path)


@pytest.fixture
def c5_file(tmp_path):
    g = gm.generate("cycle", 5, red_fraction=1.0)
    path = tmp_path / "c5.mcc"
    path.write_text(gm.serialize(g))
    return str(path)


class TestSolve:
    def test_k2_text(self, k2_file, capsys):
        assert main(["solve", "--input", k2_file]) == 0
        out = capsys.readouterr().out
        assert "good weight = 1" in out
        assert "ratio good/w(E) = 1" in out

    def test_c5_json(self, c5_file, tmp_path):
        out = tmp_path / "report.json"
        assert main(["solve", "--input", c5_file, "--format", "json",
                     "--output", str(out)]) == 0
        d = json.loads(out.read_text())
        assert d["good_weight"] == 4.0
        assert d["total_weight"] == 5.0
        assert sorted(d["side_plus"] + d["side_minus"]) == [1, 2, 3, 4, 5]

    def test_empty_edge_graph_note(self, tmp_path, capsys):
        path = tmp_path / "e.mcc"
        path.write_text("p mcc 3 0\n")
        assert main(["solve", "--input", str(path)]) == 0
        out = capsys.readouterr().out
        assert "ratio good/w(E) = 1" in out
        assert "note" in out

    def test_parse_failure_exit_1(self, tmp_path, capsys):
        path = tmp_path / "bad.mcc"
        path.write_text("p mcc 2 1\ne 1 3 1.0 r\n")
        assert main(["solve", "--input", str(path)]) == 1
        assert "error" in capsys.readouterr().err

    def test_missing_file_exit_1(self, capsys):
        assert main(["solve", "--input", "/nonexistent.mcc"]) == 1

    def test_byte_identical_json(self, c5_file, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["solve", "--input", c5_file, "--format", "json", "--seed", "3"]
        assert main(args + ["--output", str(a)]) == 0
        assert main(args + ["--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestOracle:
    def test_c5(self, c5_file, capsys):
        assert main(["oracle", "--input", c5_file]) == 0
        out = capsys.readouterr().out
        assert "opt = 4" in out
        assert "epsilon = 0.2" in out

    def test_size_guard_exit_1(self, tmp_path, capsys):
        g = gm.build(30, [(0, 1, 1.0, RED)])
        path = tmp_path / "big.mcc"
        path.write_text(gm.serialize(g))
        assert main(["oracle", "--input", str(path)]) == 1


class TestCompare:
    def test_single_file(self, k2_file, capsys):
        assert main(["compare", "--input", k2_file]) == 0
        out = capsys.readouterr().out
        assert "minimum ratio" in out
        assert "ok" in out

    def test_directory_json(self, tmp_path):
        inst = tmp_path / "corpus"
        inst.mkdir()
        for seed in range(3):
            g = gm.generate("gnp", 8, p=0.5, red_fraction=0.7, seed=seed)
            (inst / f"g{seed}.mcc").write_text(gm.serialize(g))
        out = tmp_path / "cmp.json"
        assert main(["compare", "--input", str(inst), "--format", "json",
                     "--output", str(out)]) == 0
        d = json.loads(out.read_text())
        assert d["all_pass"] is True
        assert len(d["instances"]) == 3
        assert d["min_ratio"] >= 0.614247 - 1e-6

    def test_empty_dir_exit_1(self, tmp_path):
        empty = tmp_path / "none"
        empty.mkdir()
        assert main(["compare", "--input", str(empty)]) == 1


class TestCurve:
    def test_writes_csv_and_constants(self, tmp_path, capsys):
        out = tmp_path / "curves.csv"
        assert main(["curve", "--grid", "50", "--output", str(out)]) == 0
        printed = capsys.readouterr().out
        assert "0.2281" in printed
        assert "0.6142" in printed
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "eps,f,f_prev,F,G,H"
        assert len(lines) == 51

    def test_dominance_in_rows(self, tmp_path):
        out = tmp_path / "curves.csv"
        assert main(["curve", "--grid", "40", "--output", str(out)]) == 0
        for line in out.read_text().strip().splitlines()[1:]:
            vals = [float(v) for v in line.split(",")]
            assert vals[1] >= vals[2] - 1e-12

    def test_plot_renders_figures(self, tmp_path):
        out = tmp_path / "curves.csv"
        assert main(["curve", "--grid", "20", "--output", str(out), "--plot"]) == 0
        assert (tmp_path / "recoverable_ratio.png").exists()
        assert (tmp_path / "approximation_ratio.png").exists()


class TestGenBench:
    def test_gen_cycle(self, tmp_path):
        out = tmp_path / "c5.mcc"
        assert main(["gen", "--model", "cycle", "--n", "5", "--red-frac", "1.0",
                     "--output", str(out)]) == 0
        g = gm.parse(out.read_text())
        assert g.n == 5 and g.m == 5

    def test_gen_deterministic(self, tmp_path):
        a, b = tmp_path / "a.mcc", tmp_path / "b.mcc"
        args = ["gen", "--model", "gnp", "--n", "12", "--p", "0.4", "--seed", "9"]
        assert main(args + ["--output", str(a)]) == 0
        assert main(args + ["--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_gen_invalid_params_exit_1(self, tmp_path, capsys):
        assert main(["gen", "--model", "gnp", "--n", "5", "--p", "2.0",
                     "--output", str(tmp_path / "x.mcc")]) == 1

    def test_bench_summary(self, tmp_path):
        inst = tmp_path / "bench"
        inst.mkdir()
        for seed in range(4):
            g = gm.generate("gnp", 30, p=0.3, red_fraction=0.8, seed=seed)
            (inst / f"g{seed}.mcc").write_text(gm.serialize(g))
        out = tmp_path / "summary.json"
        assert main(["bench", "--input", str(inst), "--output", str(out)]) == 0
        d = json.loads(out.read_text())
        assert d["count"] == 4
        assert d["min_ratio"] >= 0.5
