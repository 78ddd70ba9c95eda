import json
import os

import pandas as pd
import pytest

from src.cli import (EXIT_AFFIRMATIVE, EXIT_ERROR, EXIT_NEGATIVE, parse_instance, parse_ranking_arg,
                     read_instance, write_instance)
from src.cli.cli import main
from src.core import InstanceFormatError, InvalidInputError, Ranking, VotingInstance
from src.generators import example1_instance, extended_condorcet, fig1_instance, obs4_instance

SIGMA1 = "[1,2,3],[5,6,4],[9,7,8]"
SIGMA2 = "[1,2,3],[4,5,6],[7,8,9]"


@pytest.fixture
def instance_file(tmp_path):
    def write(inst, name="instance.txt"):
        path = str(tmp_path / name)
        write_instance(path, inst)
        return path
    return write


def run(capsys, *argv):
    code = main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured.err


class TestInstanceFile:
    def test_parse_with_comments(self):
        inst = parse_instance("# two voters\n\n2 3\n1 2 3\n  3 1 2\n")
        assert inst == VotingInstance.from_rankings([[1, 2, 3], [3, 1, 2]])

    @pytest.mark.parametrize("text, line, column", [
        ("", 1, 1),
        ("2 3 4\n", 1, 1),
        ("x 3\n1 2 3\n", 1, 1),
        ("1 3\n1 2 2\n", 2, 5),
        ("1 3\n1 2 4\n", 2, 5),
        ("1 3\n1 2\n", 2, 4),
        ("1 3\n1 2 3 1\n", 2, 7),
        ("2 3\n1 2 3\n", 2, 1),
        ("1 3\n1 2 3\n3 2 1\n", 3, 1),
        ("1 3\n1 a 3\n", 2, 3),
    ])
    def test_diagnostics(self, text, line, column):
        with pytest.raises(InstanceFormatError) as info:
            parse_instance(text)
        assert (info.value.line, info.value.column) == (line, column)
        assert str(info.value).startswith(f"line {line}, column {column}: ")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_instance(str(tmp_path / "missing.txt"))

    def test_ranking_argument(self):
        assert parse_ranking_arg(SIGMA1) == Ranking((1, 2, 3, 5, 6, 4, 9, 7, 8))
        assert parse_ranking_arg("3 1 2") == parse_ranking_arg("3,1,2")
        with pytest.raises(InstanceFormatError):
            parse_ranking_arg("1,b,3")
        with pytest.raises(InstanceFormatError):
            parse_ranking_arg("[]")
        with pytest.raises(InvalidInputError):
            parse_ranking_arg("1,2", m=3)


class TestVerify:
    def test_absolutely_popular(self, capsys, instance_file):
        code, report, _ = run(capsys, "verify", instance_file(fig1_instance()), SIGMA2, "--mode", "absolute")
        assert code == EXIT_AFFIRMATIVE
        assert report["command"] == "verify"
        assert report["status"] == "popular"
        assert report["result"]["searched"] == 216
        assert report["result"]["witness"] is None
        assert "threads" not in report["inputs"]

    def test_simple_witness(self, capsys, instance_file):
        code, report, _ = run(capsys, "verify", instance_file(fig1_instance()), SIGMA2, "--mode", "simple",
                              "--threads", "3")
        assert code == EXIT_NEGATIVE
        assert report["status"] == "not-popular"
        assert report["result"]["witness"] == [1, 2, 3, 5, 6, 4, 9, 7, 8]
        assert report["result"]["tally"] == {"prefer_left": [5, 6], "prefer_right": [4], "abstain": [1, 2, 3]}

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 3\n1 2 3\n1 1 3\n", encoding="utf-8")
        code, report, err = run(capsys, "verify", str(path), "1,2,3")
        assert code == EXIT_ERROR
        assert report["status"] == "error"
        assert report["result"]["error"] == "InstanceFormatError"
        assert "line 3, column 3" in err

    def test_budget(self, capsys, instance_file):
        code, report, _ = run(capsys, "verify", instance_file(fig1_instance()), SIGMA2, "--budget", "10")
        assert code == EXIT_ERROR
        assert report["result"]["error"] == "SearchBudgetExceeded"


class TestMajority:
    def test_acyclic(self, capsys, instance_file, tmp_path):
        dot = str(tmp_path / "fig1.dot")
        code, report, _ = run(capsys, "majority", instance_file(fig1_instance()), "--dot", dot)
        assert code == EXIT_AFFIRMATIVE
        result = report["result"]
        assert result["arcs"] == 32
        assert result["topological_sorts"] == 9
        assert not result["topological_sorts_capped"]
        assert result["preserved_partition"] == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
        with open(dot, encoding="utf-8") as f:
            assert f.read().count("->") == 32

    def test_cyclic(self, capsys, instance_file):
        code, report, _ = run(capsys, "majority", instance_file(extended_condorcet(3)))
        assert code == EXIT_NEGATIVE
        assert report["status"] == "cyclic"
        assert sorted(report["result"]["cycle"]) == [1, 2, 3]
        assert report["result"]["topological_sorts"] == 0

    def test_limit(self, capsys, instance_file):
        _, report, _ = run(capsys, "majority", instance_file(fig1_instance()), "--limit", "4")
        assert report["result"]["topological_sorts"] == 4
        assert report["result"]["topological_sorts_capped"]


class TestKemeny:
    def test_consensus(self, capsys, instance_file):
        code, report, _ = run(capsys, "kemeny", instance_file(example1_instance()))
        assert code == EXIT_AFFIRMATIVE
        assert report["result"]["optimum"] == 6
        assert len(report["result"]["minimizers"]) == 8

    def test_improve(self, capsys, instance_file):
        _, report, _ = run(capsys, "kemeny", instance_file(example1_instance()), "--improve", "6,5,4,3,2,1")
        assert report["result"]["chain"][0] == [6, 5, 4, 3, 2, 1]
        assert report["result"]["ranks"][-1] == 6
        assert report["result"]["iterations"] == len(report["result"]["chain"]) - 1


class TestGenerate:
    def test_stdout(self, capsys):
        assert main(["generate", "fig1"]) == EXIT_AFFIRMATIVE
        assert parse_instance(capsys.readouterr().out) == fig1_instance()

    def test_tight_c_file(self, capsys, tmp_path):
        path = str(tmp_path / "tight.txt")
        code, report, _ = run(capsys, "generate", "tightc", "--j", "2", "--out", path)
        assert code == EXIT_AFFIRMATIVE
        assert (report["result"]["n"], report["result"]["m"]) == (8, 10)
        assert report["result"]["sigma"] == [2, 1, 4, 3, 6, 5, 8, 7, 10, 9]
        assert read_instance(path).n == 8

    def test_random_file(self, capsys, tmp_path):
        path = str(tmp_path / "random.txt")
        run(capsys, "generate", "random", "--n", "4", "--m", "5", "--seed", "9", "--out", path)
        first = open(path, encoding="utf-8").read()
        run(capsys, "generate", "random", "--n", "4", "--m", "5", "--seed", "9", "--out", path)
        assert open(path, encoding="utf-8").read() == first


class TestAcr3:
    def test_found(self, capsys, instance_file):
        path = instance_file(obs4_instance().subinstance([2, 3, 4]))
        code, report, _ = run(capsys, "acr3", path, "1,2,3,4,5,6,7,8,9,10")
        assert code == EXIT_NEGATIVE
        assert report["status"] == "found"
        assert report["result"]["case"] == "two-prefer-swap-procedure"
        assert report["result"]["distances"] == [2, 2, 0]

    def test_none(self, capsys, instance_file):
        path = instance_file(VotingInstance(3, (Ranking((2, 1, 3)),) * 3))
        code, report, _ = run(capsys, "acr3", path, "2,1,3")
        assert code == EXIT_AFFIRMATIVE
        assert report["status"] == "none"


class TestLift:
    def test_cyclic_abstainers(self, capsys, instance_file):
        code, report, err = run(capsys, "lift", instance_file(fig1_instance()), SIGMA2, SIGMA1)
        assert code == EXIT_ERROR
        assert report["result"]["error"] == "PreconditionError"
        assert "cyclic majority graph" in err

    def test_no_abstainers(self, capsys, instance_file):
        code, report, _ = run(capsys, "lift", instance_file(example1_instance()), "1,2,3,4,5,6", "2,1,4,3,6,5")
        assert code == EXIT_AFFIRMATIVE
        assert report["result"]["sigma2"] == [2, 1, 4, 3, 6, 5]
        assert report["result"]["tally"]["prefer_left"] == [1, 2, 3]


class TestExperiments:
    def test_suites(self, capsys, tmp_path):
        out = str(tmp_path / "runs.csv")
        code, report, _ = run(capsys, "experiments", "--suite", "condorcet", "acr3", "--count", "3",
                              "--seed", "5", "--out", out, "--no-progress")
        assert code == EXIT_AFFIRMATIVE
        assert report["result"]["violations"] == 0
        assert os.path.exists(out)
        df = pd.read_csv(out, encoding="utf-8-sig")
        assert list(df["suite"].unique()) == ["condorcet", "acr3"]
        assert len(df) == 6
