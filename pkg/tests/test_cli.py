"""Unit tests for the command-line interface."""

import json

import pytest

from qlvalue.cli import CSV_FIELDS, main, sweep_twists
from qlvalue.gauss import GaussInt

P = GaussInt.parse


class TestCompute:
    def test_text_output(self, capsys):
        assert main(["compute", "-D", "-1+2i"]) == 0
        out = capsys.readouterr().out
        assert "-1/2" in out
        assert "g=" in out and "time=" in out

    def test_csv_output(self, capsys):
        assert main(["--format", "csv", "compute", "-D", "-1+2i"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == ",".join(CSV_FIELDS)
        cells = lines[1].split(",")
        assert cells[0] == "-1/2"
        assert cells[5] == "i"
        assert cells[7] == "true"

    def test_json_output(self, capsys):
        assert main(["--format", "json", "compute", "-D", "-3"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert rows[0]["v2"] == "0" and rows[0]["i_symbol"] == "-1"

    def test_normalization_note(self, capsys):
        assert main(["compute", "-D", "1-2i"]) == 0
        captured = capsys.readouterr()
        assert "normalized" in captured.err
        assert "-1/2" in captured.out

    def test_numerically_zero(self, capsys):
        assert main(["compute", "-D", "1-4i"]) == 0
        out = capsys.readouterr().out
        assert "inf" in out and "numerically zero" in out

    def test_invalid_input_exit_2(self, capsys):
        assert main(["compute", "-D", "2"]) == 2
        assert main(["compute", "-D", "garbage"]) == 2
        capsys.readouterr()

    def test_precision_floor(self, capsys):
        assert main(["--precision", "32", "compute", "-D", "-3"]) == 2
        capsys.readouterr()

    def test_env_precision(self, capsys, monkeypatch):
        monkeypatch.setenv("QL_PRECISION_BITS", "160")
        assert main(["compute", "-D", "-3"]) == 0
        capsys.readouterr()


class TestSweep:
    def test_small_any_sweep_membership(self):
        found = {str(d) for d in sweep_twists("any", 5)}
        for want in ("-3", "-1+2i", "3-2i", "1-4i"):
            assert want in found

    def test_shapes_filter(self):
        r1 = sweep_twists("r1", 10)
        from qlvalue.hecke import decompose

        for d in r1:
            dec = decompose(d)
            assert len(dec.s1) == 1 and not dec.s2 and not dec.s3

    def test_sorted_output(self):
        ds = sweep_twists("any", 8)
        keys = [(d.norm(), d.re, d.im) for d in ds]
        assert keys == sorted(keys)

    def test_csv_deterministic(self, capsys):
        assert main(["--format", "csv", "sweep", "--max-abs", "4"]) == 0
        first = capsys.readouterr().out
        assert main(["--format", "csv", "sweep", "--max-abs", "4"]) == 0
        second = capsys.readouterr().out
        assert first == second
        assert first.splitlines()[0] == ",".join(CSV_FIELDS)

    def test_threads_flag_same_output(self, capsys):
        assert main(["--format", "csv", "--threads", "4", "sweep", "--max-abs", "4"]) == 0
        four = capsys.readouterr().out
        assert main(["--format", "csv", "--threads", "1", "sweep", "--max-abs", "4"]) == 0
        one = capsys.readouterr().out
        assert four == one

    def test_summary_line(self, capsys):
        assert main(["sweep", "--max-abs", "4"]) == 0
        out = capsys.readouterr().out
        assert "min v2-bound margin" in out


class TestLocal:
    def test_good_twist(self, capsys):
        assert main(["local", "-D", "-1+2i"]) == 0
        out = capsys.readouterr().out
        assert "I0" in out and "III" in out
        assert "minimal model" in out
        assert "conductor: (-1+2i)^2" in out

    def test_bad_twist(self, capsys):
        assert main(["local", "-D", "-3"]) == 0
        out = capsys.readouterr().out
        assert "I0*" in out and "(1+i)^8" in out
        assert "minimal model" not in out

    def test_json(self, capsys):
        assert main(["--format", "json", "local", "-D", "3-2i"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["good_at_2"] is False
        assert payload["places"][0]["kodaira"] == "II*"

    def test_invalid_exit_2(self, capsys):
        assert main(["local", "-D", "1+i"]) == 2
        capsys.readouterr()
