import json
import subprocess
import sys

import pytest

from signed_partitions.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTable:
    def test_csv_type_b(self, capsys):
        code, out, _ = run(capsys, "table", "--max-n", "6", "--type", "b", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n\\k,0,1,2,3,4,5,6"
        assert lines[7] == "6,1,364,1771,1520,395,36,1"
        assert lines[3] == "2,1,4,1,,,,"

    def test_single_cell(self, capsys):
        code, out, _ = run(capsys, "table", "--max-n", "0", "--type", "b")
        assert code == 0
        rows = [line.split("|")[1].split() for line in out.splitlines()[2:]]
        assert rows == [["1"]]

    def test_type_a(self, capsys):
        code, out, _ = run(capsys, "table", "--max-n", "4", "--type", "a", "--format", "csv")
        assert code == 0
        assert out.splitlines()[-1] == "4,0,1,7,6,1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "table", "--max-n", "2", "--format", "json")
        assert json.loads(out) == {"type": "B", "rows": [[1], [1, 1], [1, 4, 1]]}

    def test_text(self, capsys):
        _, out, _ = run(capsys, "table", "--max-n", "6")
        assert out.splitlines()[-1].split("|")[1].split() == "1 364 1771 1520 395 36 1".split()

    def test_guard(self, capsys):
        assert run(capsys, "table", "--max-n", "65")[0] == 3
        assert run(capsys, "table", "--max-n", "65", "--force", "--format", "json")[0] == 0

    @pytest.mark.parametrize(
        "argv",
        [("table", "--type", "c"), ("table", "--max-n", "-1"), ("table", "--format", "xml"), ("nope",), ()],
    )
    def test_bad_flags(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestEnumerate:
    def test_n1(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "1")
        assert code == 0
        assert out.splitlines() == ["z:[1];p:[]", "z:[];p:[[1]]", "count=2"]

    def test_n2_k2(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--k", "2", "--expanded")
        assert out.splitlines() == ["{{1},{-1},{2},{-2}}", "count=1"]

    def test_n0(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--n", "0")
        assert out.splitlines() == ["z:[];p:[]", "count=1"]

    def test_json_lines(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--n", "3", "--format", "json")
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines[-1] == {"count": 24}
        assert all(set(obj) == {"n", "zero", "pairs"} for obj in lines[:-1])

    def test_guard_and_flags(self, capsys):
        assert run(capsys, "enumerate", "--n", "9")[0] == 3
        assert run(capsys, "enumerate", "--n", "2", "--k", "3")[0] == 2
        assert run(capsys, "enumerate")[0] == 2


class TestEncodeDecode:
    PARTITION = "z:[1];p:[[2,-3,5],[4,-6]]"

    def test_encode(self, capsys):
        code, out, _ = run(capsys, "encode", "--partition", self.PARTITION, "--choices", "4,7", "--m", "7")
        assert (code, out) == (0, "1,4,5,7,4,2\n")

    def test_encode_json(self, capsys):
        _, out, _ = run(capsys, "encode", "--partition", self.PARTITION, "--choices", "4,7", "--m", "7", "--format", "json")
        assert json.loads(out) == {"m": 7, "f": [1, 4, 5, 7, 4, 2]}

    def test_decode(self, capsys):
        code, out, _ = run(capsys, "decode", "--assignment", "1,4,5,7,4,2", "--m", "7")
        assert code == 0
        assert out.splitlines() == [self.PARTITION, "choices=4,7"]

    def test_decode_json(self, capsys):
        _, out, _ = run(capsys, "decode", "--assignment", "1,4,5,7,4,2", "--m", "7", "--format", "json")
        assert json.loads(out) == {
            "partition": {"n": 6, "zero": [1], "pairs": [[2, -3, 5], [4, -6]]},
            "choices": [4, 7],
        }

    @pytest.mark.parametrize(
        "argv, rule",
        [
            (("--choices", "4,7", "--m", "6"), "odd-m restriction"),
            (("--choices", "2,4", "--m", "3"), "pair bound"),
            (("--choices", "4,5", "--m", "7"), "urn choice rule"),
        ],
    )
    def test_domain_errors(self, capsys, argv, rule):
        code, out, err = run(capsys, "encode", "--partition", self.PARTITION, *argv)
        assert code == 4 and out == ""
        assert rule in err

    def test_bad_inputs(self, capsys):
        assert run(capsys, "encode", "--partition", "z:[1];p:[[1,2]]", "--m", "7")[0] == 4
        assert run(capsys, "encode", "--partition", "z:[1;p:[]", "--m", "7")[0] == 2
        assert run(capsys, "encode", "--partition", self.PARTITION, "--choices", "4,x", "--m", "7")[0] == 2
        assert run(capsys, "decode", "--assignment", "1,9", "--m", "7")[0] == 4
        assert run(capsys, "decode", "--assignment", "1,2", "--m", "4")[0] == 4


class TestVerify:
    def test_identity(self, capsys):
        code, out, _ = run(capsys, "verify", "identity", "--type", "b", "--n", "12")
        report = json.loads(out)
        assert code == 0
        assert report["equal"] is True and report["n"] == 12 and report["type"] == "B"
        assert set(report) == {"n", "type", "equal", "lhs", "rhs"}

    def test_identity_type_a(self, capsys):
        code, out, _ = run(capsys, "verify", "identity", "--type", "a", "--n", "7")
        assert code == 0 and json.loads(out)["type"] == "A"

    def test_bijection(self, capsys):
        code, out, _ = run(capsys, "verify", "bijection", "--n", "3", "--m", "5")
        report = json.loads(out)
        assert code == 0
        assert report["functions"] == report["distinct"] == 125 and report["passed"]

    def test_bijection_errors(self, capsys):
        assert run(capsys, "verify", "bijection", "--n", "2", "--m", "4")[0] == 4
        assert run(capsys, "verify", "bijection", "--n", "9", "--m", "9")[0] == 3
        assert run(capsys, "verify", "bijection", "--n", "3", "--m", "5", "--max-functions", "10")[0] == 3
        assert run(capsys, "verify", "bijection", "--n", "3", "--m", "5", "--max-functions", "10", "--force")[0] == 0
        assert run(capsys, "verify")[0] == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        from signed_partitions import stirling

        broken = stirling.StirlingTriangle("B")
        broken._rows = [(1,), (1, 1), (1, 5, 1)]
        monkeypatch.setattr(stirling, "TRIANGLE_B", broken)
        code, out, _ = run(capsys, "verify", "identity", "--n", "2")
        assert code == 1 and json.loads(out)["equal"] is False


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "signed_partitions", "enumerate", "--n", "4", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert first.splitlines()[-1] == b'{"count":116}'
