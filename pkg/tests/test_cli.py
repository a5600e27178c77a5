"""CLI surface: subcommands, output formats, exit codes, thin-wrapper checks."""
import json
import random
import subprocess
import sys

import pytest

from mahonian import cli, involution, words

TABLE_1122_TSV = (
    "word\tAdj\tdes\tides\tF\tIMAJ\tMAJ\tSTAT\n"
    "1122\t0\t0\t0\t1\t0\t0\t0\n"
    "1212\t1\t1\t1\t1\t2\t2\t3\n"
    "1221\t0\t1\t1\t1\t2\t3\t2\n"
    "2112\t0\t1\t1\t2\t2\t1\t2\n"
    "2121\t0\t2\t1\t2\t2\t4\t4\n"
    "2211\t0\t1\t1\t2\t2\t2\t1\n"
)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_line(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "2112")
        assert code == 0
        assert out == "Adj=0 des=1 ides=1 F=2 IMAJ=2 MAJ=1 STAT=2 D={1} Id={2} Sh={1,3}\n"

    def test_single_letter(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "1")
        assert code == 0
        assert out.startswith("Adj=1 des=0 ides=0 F=1 IMAJ=0 MAJ=0 STAT=0")

    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "434421651")
        assert code == 0
        assert "des=5" in out and "F=4" in out and "MAJ=25" in out and "STAT=21" in out
        assert "Id={2,3,4,8}" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "2112", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["word"] == "2112" and payload["MAJ"] == 1 and payload["Id"] == [2]

    def test_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "stats", "10x")
        assert code == 2 and "error" in err


class TestMap:
    @pytest.mark.parametrize(
        "name, word, expected",
        [
            ("phi", "434421651", "416432451"),
            ("phi", "546731982", "519643782"),
            ("j", "1243", "4123"),
            ("j", "4312", "1432"),
            ("code", "212231", "314562"),
            ("rc", "1243", "2134"),
            ("p", "231", "213"),
        ],
    )
    def test_values(self, capsys, name, word, expected):
        code, out, _ = run_cli(capsys, "map", name, word)
        assert code == 0 and out == expected + "\n"

    def test_j_rejects_words(self, capsys):
        code, _, err = run_cli(capsys, "map", "j", "212")
        assert code == 2 and "permutation" in err

    def test_unknown_map(self, capsys):
        code, _, _ = run_cli(capsys, "map", "zeta", "123")
        assert code == 2


class TestPattern:
    def test_vincular(self, capsys):
        assert run_cli(capsys, "pattern", "31-4-2", "41253")[:2] == (0, "1\n")

    def test_classical(self, capsys):
        assert run_cli(capsys, "pattern", "3-1-4-2", "41253")[:2] == (0, "2\n")

    def test_no_occurrence(self, capsys):
        assert run_cli(capsys, "pattern", "21", "12345")[:2] == (0, "0\n")

    def test_bad_pattern(self, capsys):
        code, _, err = run_cli(capsys, "pattern", "1-3", "123")
        assert code == 2 and "error" in err


class TestRsk:
    def test_output(self, capsys):
        code, out, _ = run_cli(capsys, "rsk", "4312")
        assert code == 0
        assert out == "P:\n1 2\n3\n4\nQ:\n1 4\n2\n3\n"

    def test_rejects_words(self, capsys):
        assert run_cli(capsys, "rsk", "212")[0] == 2


class TestTable:
    def test_table_1122(self, capsys):
        code, out, _ = run_cli(capsys, "table", "1122")
        assert code == 0 and out == TABLE_1122_TSV

    def test_two_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "12")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 3
        assert lines[1].startswith("12\t") and lines[2].startswith("21\t")

    def test_constant_word(self, capsys):
        code, out, _ = run_cli(capsys, "table", "111")
        assert code == 0
        assert out.splitlines()[1] == "111\t0\t0\t0\t1\t0\t0\t0"

    def test_custom_schema(self, capsys):
        code, out, _ = run_cli(capsys, "table", "1122", "--schema", "des,MAJ,Id")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "word\tdes\tMAJ\tId"
        assert lines[1] == "1122\t0\t0\t{}"
        assert lines[4] == "2112\t1\t1\t{2}"

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "table", "12", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and [row["word"] for row in payload] == ["12", "21"]
        assert payload[1]["MAJ"] == 1

    def test_cap(self, capsys):
        code, _, err = run_cli(capsys, "table", "123456", "--cap", "100")
        assert code == 2 and "cap" in err

    def test_byte_identical_across_runs(self, capsys):
        first = run_cli(capsys, "table", "1122")[1]
        second = run_cli(capsys, "table", "1122", "--jobs", "4")[1]
        assert first == second == TABLE_1122_TSV


class TestVerify:
    def test_single_check(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "thm-1.3", "--n", "4")
        assert code == 0 and out == "PASS thm-1.3 (S_4): 24 instances\n"

    def test_single_class(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "cor-1.4", "--word", "1122")
        assert code == 0 and "6 instances" in out

    def test_all_small_bounds(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "all", "--n", "3", "--alphabet", "2")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 10 and all(line.startswith("PASS") for line in lines)

    def test_unknown_check(self, capsys):
        assert run_cli(capsys, "verify", "thm-9.9")[0] == 2

    def test_cap_exceeded(self, capsys):
        code, _, err = run_cli(capsys, "verify", "thm-1.3", "--n", "12", "--cap", "10")
        assert code == 2 and "cap" in err

    def test_counterexample_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(involution, "phi", lambda p: tuple(p))
        code, out, _ = run_cli(capsys, "verify", "thm-1.3", "--n", "3")
        assert code == 1
        assert out.splitlines()[0] == "FAIL thm-1.3 (S_3): 6 instances"
        assert "213" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "lemma-3.4", "--n", "3", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload[0]["passed"] and payload[0]["instances"] == 6

    def test_jobs_do_not_change_output(self, capsys):
        serial = run_cli(capsys, "verify", "thm-1.3", "--n", "5", "--jobs", "1")
        parallel = run_cli(capsys, "verify", "thm-1.3", "--n", "5", "--jobs", "2")
        assert serial == parallel


class TestThinWrapper:
    def test_stats_matches_library(self, capsys):
        rng = random.Random(20240811)
        for _ in range(100):
            n = rng.randint(1, 7)
            w = tuple(rng.randint(1, 8) for _ in range(n))
            code, out, _ = run_cli(capsys, "stats", words.format_word(w))
            assert code == 0
            fields = dict(part.split("=", 1) for part in out.split())
            sv = words.stat_vector(w)
            assert fields["Adj"] == str(sv.adj)
            assert fields["des"] == str(sv.des)
            assert fields["ides"] == str(sv.ides)
            assert fields["F"] == str(sv.first)
            assert fields["IMAJ"] == str(sv.imaj)
            assert fields["MAJ"] == str(sv.maj)
            assert fields["STAT"] == str(sv.stat)
            assert fields["Id"] == words.format_index_set(sv.id_set)

    def test_map_matches_library(self, capsys):
        rng = random.Random(77)
        for _ in range(100):
            n = rng.randint(1, 7)
            w = tuple(rng.randint(1, 5) for _ in range(n))
            _, out, _ = run_cli(capsys, "map", "phi", words.format_word(w))
            assert out.strip() == words.format_word(involution.phi_on_class(w))
            _, out, _ = run_cli(capsys, "map", "code", words.format_word(w))
            assert out.strip() == words.format_word(words.code(w))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mahonian", "map", "code", "212231"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "314562\n"
