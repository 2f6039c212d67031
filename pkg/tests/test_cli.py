import csv
import json

import pytest

from threshpoly.charpoly import charpoly_balanced
from threshpoly.cli import (
    cmd_bench,
    cmd_charpoly,
    cmd_det,
    cmd_eval,
    main,
    random_creation_bits,
)
from threshpoly.graph import ThresholdGraph
from threshpoly.polyarith import from_decimal_strings


class TestCharpolyCommand:
    def test_json_k2(self, capsys):
        assert main(["charpoly", "--bits", "1", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == ["-1", "0", "1"]

    def test_json_single_vertex(self, capsys):
        assert main(["charpoly", "--bits", "", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == ["0", "1"]

    def test_text_triangle(self, capsys):
        assert main(["charpoly", "--bits", "11", "--format", "text"]) == 0
        assert capsys.readouterr().out.strip() == "λ^3 - 3λ - 2"

    def test_all_algorithms_agree(self):
        outputs = {
            cmd_charpoly("1001", algo, "json")
            for algo in ("auto", "quadratic", "balanced", "oracle", "interp")
        }
        assert len(outputs) == 1

    def test_json_round_trips(self):
        out = cmd_charpoly("10110", "balanced", "json")
        p = from_decimal_strings(json.loads(out))
        assert p == charpoly_balanced(ThresholdGraph.from_string("10110"))

    def test_parse_failure_exits_nonzero(self, capsys):
        assert main(["charpoly", "--bits", "10a"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "position 3" in captured.err

    def test_oracle_cap_exceeded(self, capsys, monkeypatch):
        monkeypatch.setenv("THRESH_ORACLE_CAP", "3")
        assert main(["charpoly", "--bits", "111", "--algo", "oracle"]) == 1
        assert "cap" in capsys.readouterr().err

    def test_crossover_flag(self, capsys):
        assert main(["charpoly", "--bits", "101", "--crossover", "2"]) == 0
        assert capsys.readouterr().out.strip() == cmd_charpoly("101", "quadratic")


class TestDetCommand:
    def test_k2(self, capsys):
        assert main(["det", "--b", "1", "--d", "0,0"]) == 0
        assert capsys.readouterr().out.strip() == "-1"

    def test_one_by_one(self, capsys):
        assert main(["det", "--b", "", "--d", "7"]) == 0
        assert capsys.readouterr().out.strip() == "7"

    def test_triangle(self, capsys):
        assert main(["det", "--b", "1,1", "--d", "0,0,0"]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_weighted_values(self):
        assert cmd_det("3,-2", "1,4,-5") == "-51"  # frozen from bareiss_det

    def test_length_mismatch_exits_nonzero(self, capsys):
        assert main(["det", "--b", "1,1", "--d", "0,0"]) == 1
        assert "diagonal" in capsys.readouterr().err

    def test_bad_integer_exits_nonzero(self, capsys):
        assert main(["det", "--b", "x", "--d", "0,0"]) == 1
        assert "integers" in capsys.readouterr().err


class TestEvalCommand:
    def test_k2_at_2(self, capsys):
        assert main(["eval", "--bits", "1", "--at", "2"]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_k2_at_eigenvalue(self, capsys):
        assert main(["eval", "--bits", "1", "--at", "1"]) == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_single_vertex(self, capsys):
        assert main(["eval", "--bits", "", "--at", "5"]) == 0
        assert capsys.readouterr().out.strip() == "5"

    def test_negative_point(self):
        assert cmd_eval("11", -1) == "0"  # −1 is an eigenvalue of K₃


class TestBenchCommand:
    def test_csv_schema_and_rows(self, tmp_path):
        out = tmp_path / "bench.csv"
        records = cmd_bench(128, ("quadratic", "balanced"), seed=3, out=str(out))
        with open(out, newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["n", "algo", "wall_time", "coeff_maxbits"]
        assert len(rows) == 1 + len(records)
        assert [r.n for r in records] == [64, 64, 128, 128]
        assert all(r.wall_time >= 0 for r in records)

    def test_same_seed_same_instances(self):
        assert random_creation_bits(100, 5) == random_creation_bits(100, 5)
        assert random_creation_bits(100, 5) != random_creation_bits(100, 6)

    def test_same_instance_same_coefficients(self, tmp_path):
        records = cmd_bench(
            64, ("quadratic", "balanced", "oracle"), seed=1, out=str(tmp_path / "b.csv")
        )
        bits = {r.coeff_maxbits for r in records}
        assert len(bits) == 1

    def test_determinism_across_runs(self, tmp_path):
        a = cmd_bench(128, ("quadratic",), seed=9, out=str(tmp_path / "a.csv"))
        b = cmd_bench(128, ("quadratic",), seed=9, out=str(tmp_path / "b.csv"))
        assert [r.coeff_maxbits for r in a] == [r.coeff_maxbits for r in b]

    def test_stdout_output(self, capsys):
        main(["bench", "--max-n", "64", "--algos", "balanced", "--seed", "2", "--out", "-"])
        out = capsys.readouterr().out
        assert out.startswith("n,algo,wall_time,coeff_maxbits")

    def test_unwritable_path_exits_nonzero(self, capsys):
        code = main(
            ["bench", "--max-n", "64", "--out", "/nonexistent-dir/bench.csv"]
        )
        assert code == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_max_n_validation(self):
        with pytest.raises(ValueError):
            cmd_bench(1, ("balanced",), 0, "-")

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            cmd_bench(64, ("spectral",), 0, "-")
