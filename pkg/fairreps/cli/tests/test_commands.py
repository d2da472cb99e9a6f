import io
import json
from pathlib import Path

import pytest

from fairreps import __version__
from fairreps.cli import commands
from fairreps.cli.commands import run

TRIANGLE = "0 1\n1 2\n0 2\n"
K4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
TAILED_TRIANGLE = "0 1\n1 2\n0 2\n0 3\n"
BOWTIE = "0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n"
ROTATION = {"n": 3, "generators": [[1, 2, 0]]}
PAIRS = {"sets": [[0, 1], [1, 2], [0, 2]]}
HALVES = {"functions": [{"weights": [{"element": e, "w": "1/2"} for e in range(3)]}]}


class Result:
    def __init__(self, code: int, out: str, err: str):
        self.code = code
        self.out = out
        self.err = err

    @property
    def json(self):
        return json.loads(self.out)


@pytest.fixture
def files(tmp_path: Path):
    def write(name: str, content: str | dict) -> str:
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content), encoding="utf-8")
        return str(path)

    return write


def call(*argv: str) -> Result:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return Result(code, out.getvalue(), err.getvalue())


class TestAut:
    def test_triangle(self, files):
        result = call("aut", files("triangle.txt", TRIANGLE))
        assert result.code == 0
        data = result.json
        assert data["order"] == 6
        assert data["vertex_orbits"] == [[0, 1, 2]]
        assert data["edge_orbits"] == [[[0, 1], [0, 2], [1, 2]]]

    def test_text_summary(self, files):
        result = call("aut", "--text", files("triangle.txt", TRIANGLE))
        assert "order: 6" in result.out.splitlines()


def test_copies(files):
    result = call("copies", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
    assert result.code == 0
    assert result.json["count"] == 4
    assert result.json["copies"][0] == {"vertices": [0, 1, 2], "edges": [[0, 1], [0, 2], [1, 2]]}


class TestUpsilon:
    def test_plain_and_symmetric(self, files):
        pattern, host = files("k3.txt", TRIANGLE), files("k4.txt", K4)
        plain = call("upsilon", "--pattern", pattern, "--host", host)
        symmetric = call("upsilon", "--pattern", pattern, "--host", host, "--symmetric")
        assert plain.json["value"] == 2
        assert len(plain.json["witness_edges"]) == 2
        assert symmetric.json["value"] == 6

    def test_vertices(self, files):
        result = call("upsilon", "--vertices", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
        assert result.json["value"] == 2
        assert "witness_edges" not in result.json

    def test_text(self, files):
        result = call("upsilon", "--text", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
        assert result.out == "edge representativeness: 2\n"

    def test_output_is_reproducible(self, files):
        argv = ("upsilon", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
        assert call(*argv).out == call(*argv).out


class TestCost:
    def test_triangle_in_k4_is_tight(self, files):
        result = call("cost", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
        assert result.code == 0
        data = result.json
        assert (data["plain"]["value"], data["symmetric"]["value"]) == (2, 6)
        assert (data["bound_factor"], data["ratio"], data["tight"]) == (3, "3", True)

    def test_text(self, files):
        result = call("cost", "--text", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
        assert result.out == "plain 2, symmetric 6, ratio 3, bound factor 3 (tight)\n"


class TestSymmetrize:
    def test_multiple(self, files):
        result = call(
            "symmetrize",
            "--mode", "multiple",
            "--family", files("pairs.json", PAIRS),
            "--x", "0,1",
            "--k", "1",
            "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 0
        assert result.json["Y"] == [0, 1, 2]
        assert result.json["bound"] == "2"

    def test_group_from_a_graph(self, files):
        result = call(
            "symmetrize",
            "--mode", "multiple",
            "--family", files("pairs.json", PAIRS),
            "--x", "0 1",
            "--k", "1",
            "--group", files("triangle.txt", TRIANGLE),
        )  # fmt: skip
        assert result.json["Y"] == [0, 1, 2]

    def test_multiple_needs_k(self, files):
        result = call(
            "symmetrize", "--mode", "multiple", "--family", files("pairs.json", PAIRS),
            "--x", "0,1", "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 2
        assert "--k" in result.err

    def test_weighted_with_oracle(self, files):
        result = call(
            "symmetrize",
            "--mode", "weighted",
            "--family", files("halves.json", HALVES),
            "--x", "0,1",
            "--group", files("rotation.json", ROTATION),
            "--oracle",
        )  # fmt: skip
        assert result.code == 0
        data = result.json
        assert data["agree"] is True
        assert data["weighted"]["Y"] == data["product"]["Y"] == [0, 1, 2]
        assert data["weighted"]["bound"] == "3/2"

    def test_not_representative(self, files):
        result = call(
            "symmetrize", "--mode", "multiple", "--family", files("pairs.json", PAIRS),
            "--x", "0", "--k", "1", "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 1
        assert result.out == ""
        assert result.err.startswith("error: ")
        assert len(json.loads(result.err.splitlines()[1])["violations"]) == 1

    def test_bad_ids(self, files):
        result = call(
            "symmetrize", "--mode", "weighted", "--family", files("halves.json", HALVES),
            "--x", "0,a", "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 2

    def test_superscript_ids(self, files):
        result = call(
            "symmetrize", "--mode", "weighted", "--family", files("halves.json", HALVES),
            "--x", "0,\u00b9", "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 2
        assert result.err.startswith("error: ")

    @pytest.mark.parametrize("element", [1.5, True])
    def test_family_elements_must_be_integers(self, files, element):
        family = {"sets": [[0, element], [1, 2], [0, 2]]}
        result = call(
            "symmetrize", "--mode", "multiple", "--family", files("pairs.json", family),
            "--x", "0,1,2", "--k", "1", "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 2
        assert "must be an integer" in result.err


class TestDmCover:
    def test_single_edge(self, files):
        result = call("dm-cover", files("edge.txt", "p 1 1\n0 0\n"))
        assert result.json == {"tau": 1, "a": [], "b": [0]}

    def test_empty(self, files):
        result = call("dm-cover", files("empty.txt", "p 2 3\n"))
        assert result.json == {"tau": 0, "a": [], "b": []}


class TestTadpole:
    def test_optimal_x(self, files):
        result = call("tadpole", "--pattern", files("k.txt", TAILED_TRIANGLE), "--host", files("bowtie.txt", BOWTIE))
        assert result.code == 0
        assert result.json["ok"] is True
        assert result.json["Y"] == [[0, 1], [0, 2], [0, 3], [0, 4]]

    def test_given_x(self, files):
        result = call(
            "tadpole", "--pattern", files("k.txt", TAILED_TRIANGLE), "--host", files("bowtie.txt", BOWTIE),
            "--x", "0,2",
        )  # fmt: skip
        assert result.json["X"] == [[0, 1], [0, 3]]

    def test_x_missing_copies(self, files):
        result = call(
            "tadpole", "--pattern", files("k.txt", TAILED_TRIANGLE), "--host", files("bowtie.txt", BOWTIE),
            "--x", "4",
        )  # fmt: skip
        assert result.code == 1
        assert "error:" in result.err

    def test_pattern_not_a_tadpole(self, files):
        result = call("tadpole", "--pattern", files("k3.txt", TRIANGLE), "--host", files("k4.txt", K4))
        assert result.code == 2


class TestUsage:
    def test_unknown_flag(self, files):
        result = call("aut", "--bogus", files("triangle.txt", TRIANGLE))
        assert result.code == 2
        assert "unrecognized arguments" in result.err

    def test_no_command(self):
        assert call().code == 2

    def test_malformed_graph(self, files):
        result = call("aut", files("bad.txt", "0 1\n1 x\n"))
        assert result.code == 2
        assert "line 2" in result.err

    def test_superscript_digit_in_graph(self, files):
        result = call("aut", files("bad.txt", "0 1\n1 \u00b2\n"))
        assert result.code == 2
        assert result.err.startswith("error: line 2: ")

    def test_superscript_digit_in_bipartite_graph(self, files):
        result = call("dm-cover", files("bad.txt", "p 2 2\n0 \u00b2\n"))
        assert result.code == 2
        assert "line 2" in result.err

    def test_unexpected_errors_exit_one(self, files, monkeypatch):
        def broken(args):
            msg = "boom"
            raise RuntimeError(msg)

        monkeypatch.setattr(commands, "cmd_aut", broken)
        result = call("aut", files("triangle.txt", TRIANGLE))
        assert result.code == 1
        assert result.out == ""
        assert result.err == "error: unexpected RuntimeError: boom\n"

    def test_missing_file(self, tmp_path):
        result = call("aut", str(tmp_path / "absent.txt"))
        assert result.code == 2
        assert "cannot read" in result.err

    def test_malformed_json(self, files):
        result = call(
            "symmetrize", "--mode", "weighted", "--family", files("broken.json", "{\n  oops"),
            "--x", "0", "--group", files("rotation.json", ROTATION),
        )  # fmt: skip
        assert result.code == 2

    def test_version(self):
        result = call("--version")
        assert result.code == 0
        assert __version__ in result.out
