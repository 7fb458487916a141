"""Command-line interface: output bytes, exit codes, and error routing.

All tests drive ``main`` in-process and read stdout/stderr through capsys so
byte-level determinism of the emitted records can be asserted directly.
"""

import json

import pytest

from fractal_tutte import recursion
from fractal_tutte.cli import main
from fractal_tutte.lattices import LatticeFamily


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_text_output_is_frozen(self, capsys):
        code, out, err = run(capsys, "gen", "--family", "fractal", "--n", "1")
        assert code == 0
        assert out == "p 4 5 0 3\ne 0 1\ne 0 2\ne 1 3\ne 2 3\ne 1 2\n"
        assert err == ""

    def test_repeat_runs_are_byte_identical(self, capsys):
        _, first, _ = run(capsys, "gen", "--family", "flower13", "--n", "3")
        _, second, _ = run(capsys, "gen", "--family", "flower13", "--n", "3")
        assert first == second

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "gen", "--family", "flower22", "--n", "1", "--format", "json"
        )
        assert code == 0
        record = json.loads(out)
        assert record["family"] == "flower22"
        assert record["vertices"] == 4
        assert len(record["edges"]) == 4
        assert {record["special_x"], record["special_y"]} == {0, 3}


class TestTutte:
    def test_generation_zero_json(self, capsys):
        code, out, _ = run(capsys, "tutte", "--family", "fractal", "--n", "0")
        assert code == 0
        assert out == '{"terms":[{"x":1,"y":0,"c":"1"}]}\n'

    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "tutte", "--family", "flower22", "--n", "1", "--format", "text"
        )
        assert code == 0
        assert out == "x^3 + x^2 + x + y\n"

    def test_oracle_mode_matches_recursive(self, capsys):
        _, recursive, _ = run(capsys, "tutte", "--family", "flower13", "--n", "1")
        _, via_oracle, _ = run(
            capsys, "tutte", "--family", "flower13", "--n", "1", "--mode", "oracle"
        )
        assert recursive == via_oracle

    def test_oracle_mode_generation_cap(self, capsys):
        code, out, err = run(
            capsys, "tutte", "--family", "fractal", "--n", "3", "--mode", "oracle"
        )
        assert code == 3
        assert out == ""
        assert "resource cap" in err

    def test_symbolic_cap_can_be_raised(self, capsys):
        code, _, _ = run(
            capsys, "tutte", "--family", "flower22", "--n", "3", "--symbolic-cap", "2"
        )
        assert code == 3
        code, out, _ = run(
            capsys, "tutte", "--family", "flower22", "--n", "3", "--symbolic-cap", "3"
        )
        assert code == 0 and out.startswith('{"terms":')


class TestEval:
    def test_integer_value_record(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--family", "fractal", "--n", "2",
            "--x", "1", "--y", "1",
        )
        assert code == 0
        record = json.loads(out)
        assert record["quantity"] == "tutte-eval"
        assert record["value"] == "32768"

    def test_rational_value_record(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--family", "fractal", "--n", "0",
            "--x", "1/3", "--y", "7",
        )
        assert code == 0
        record = json.loads(out)
        assert record["x"] == "1/3"
        assert record["value"] == {"num": "1", "den": "3"}

    def test_malformed_rational_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["eval", "--family", "fractal", "--n", "1", "--x", "pi", "--y", "1"])
        assert excinfo.value.code == 2

    def test_generation_cap(self, capsys):
        code, _, err = run(
            capsys, "eval", "--family", "fractal", "--n", "11", "--x", "1", "--y", "1"
        )
        assert code == 3 and "resource cap" in err


class TestInvariant:
    def test_spanning_trees_record(self, capsys):
        code, out, _ = run(
            capsys, "invariant", "--family", "fractal", "--n", "3",
            "--quantity", "spanning-trees",
        )
        assert code == 0
        assert json.loads(out)["value"] == "9223372036854775808"

    def test_orientation_quantities_are_fractal_only(self, capsys):
        code, out, err = run(
            capsys, "invariant", "--family", "flower22", "--n", "2",
            "--quantity", "acyclic-root-connected",
        )
        assert code == 4
        assert out == "" and "domain error" in err

    def test_bicycle_dimension(self, capsys):
        code, out, _ = run(
            capsys, "invariant", "--family", "fractal", "--n", "2",
            "--quantity", "bicycle-dimension",
        )
        assert code == 0
        assert json.loads(out)["value"] == "5"

    def test_unknown_quantity_rejected(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["invariant", "--family", "fractal", "--n", "1",
                  "--quantity", "chromatic"])
        assert excinfo.value.code == 2


class TestPotts:
    def test_frozen_value(self, capsys):
        code, out, _ = run(
            capsys, "potts", "--family", "fractal", "--n", "1", "--q", "2", "--v", "1"
        )
        assert code == 0
        record = json.loads(out)
        assert record["quantity"] == "potts-partition"
        assert record["value"] == "132"

    def test_rational_coupling(self, capsys):
        # a value starting with "-" must be attached with "=" so argparse
        # does not mistake it for an option
        code, out, _ = run(
            capsys, "potts", "--family", "flower22", "--n", "1",
            "--q", "2", "--v=-1/2",
        )
        assert code == 0
        assert json.loads(out)["v"] == "-1/2"

    def test_zero_coupling_is_a_domain_error(self, capsys):
        code, _, err = run(
            capsys, "potts", "--family", "fractal", "--n", "1", "--q", "2", "--v", "0"
        )
        assert code == 4 and "domain error" in err


class TestGrowth:
    def test_record_fields(self, capsys):
        code, out, _ = run(capsys, "growth", "--family", "flower22", "--n-max", "4")
        assert code == 0
        record = json.loads(out)
        assert record["exact"] == "ln(2)"
        assert record["n_max"] == 4
        assert [n for n, _ in record["sequence"]] == [1, 2, 3, 4]

    def test_n_max_bounds(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["growth", "--family", "fractal", "--n-max", "0"])
        assert excinfo.value.code == 2
        code, _, err = run(capsys, "growth", "--family", "fractal", "--n-max", "11")
        assert code == 3 and "resource cap" in err


class TestVerify:
    def test_small_gate_run_passes(self, capsys):
        code, out, err = run(capsys, "verify", "--n-max", "0")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1].endswith("gates passed")
        assert err == ""

    def test_n_max_above_oracle_cap_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--n-max", "3"])
        assert excinfo.value.code == 2

    def test_detects_a_mutated_step_rule(self, capsys, monkeypatch):
        original = recursion._STEP_RULES[LatticeFamily.FRACTAL]

        def broken(t, c, x, y):
            joined, cofactor = original(t, c, x, y)
            return joined + 1, cofactor

        monkeypatch.setitem(recursion._STEP_RULES, LatticeFamily.FRACTAL, broken)
        code, out, err = run(capsys, "verify", "--n-max", "1")
        assert code == 1
        assert "FAIL" in out
        assert "first failing gate" in err


class TestOutputFile:
    def test_out_writes_file_and_leaves_stdout_empty(self, capsys, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = run(
            capsys, "eval", "--family", "fractal", "--n", "1",
            "--x", "2", "--y", "2", "--out", str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["value"] == "32"


class TestUsageErrors:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_unknown_family(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "--family", "sierpinski", "--n", "1"])
        assert excinfo.value.code == 2

    def test_negative_generation(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "--family", "fractal", "--n", "-1"])
        assert excinfo.value.code == 2

    def test_lattice_cap_maps_to_cap_exit(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "fractal", "--n", "99")
        assert code == 3 and "resource cap" in err
