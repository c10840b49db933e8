"""End-to-end checks of the command-line tool. BWCOH_CLI names the binary."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("BWCOH_CLI", "bwcoh")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, check=False)


@pytest.fixture
def example(tmp_path):
    def make(family, n):
        path = tmp_path / f"{family}{n}.json"
        out = run("gen", family, str(n))
        assert out.returncode == 0, out.stderr
        path.write_text(out.stdout)
        return str(path)

    return make


def test_gen_round_trips(example):
    doc = json.loads(open(example("chain", 3)).read())
    assert doc["vertices"] == ["1", "2", "3"]
    assert doc["arrows"][0] == {"name": "a1", "source": "2", "target": "1"}


def test_partition_text(example):
    out = run("partition", example("chain", 3))
    assert out.returncode == 0
    assert out.stdout.strip() == "a: 1,2 | b: 3 | f: a1,a2 | g: — | h: —"
    cyc = run("partition", example("cycle", 3))
    assert "h: a3" in cyc.stdout


def test_partition_structured_from_stdin(example):
    text = open(example("bicycle", 3)).read()
    out = run("partition", "-", "--format", "structured", stdin=text)
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert sorted(doc["h"]) == ["a3", "b1", "b2"]
    assert doc["g"] == ["b3"]


def test_matrices(example):
    out = run("matrices", example("cycle", 3))
    assert out.returncode == 0
    assert "id_3 - a3*a1*a2" in out.stdout
    chain = run("matrices", example("chain", 3))
    assert "(id_1, 0)" in chain.stdout


def test_matrices_with_supplied_partition(example, tmp_path):
    star = example("star", 3)
    part = tmp_path / "p.json"
    part.write_text(json.dumps({"a": ["x"], "b": ["1", "2", "3"], "f": ["a3"], "g": ["a1", "a2"], "h": []}))
    out = run("matrices", star, "--partition", str(part), "--format", "structured")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["rows"] == ["a3", "a1", "a2"]
    w3 = [row[2] for row in doc["W"]]
    assert w3[0] == []
    assert w3[1] == [{"coeff": 1, "path": ["a3"]}] == w3[2]

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"a": ["1"], "b": ["2", "3", "x"], "f": ["a3"], "g": ["a1", "a2"], "h": []}))
    assert run("matrices", star, "--partition", str(bad)).returncode == 2


@pytest.mark.parametrize("family,n,dim", [("chain", 4, 0), ("zigzag", 3, 6), ("star", 3, 5)])
def test_h1_regular(example, family, n, dim):
    out = run("h1", example(family, n), "--regular", "--both")
    assert out.returncode == 0, out.stderr
    assert out.stdout.startswith(f"dim H^1 = {dim}\n")
    assert "routes agree" in out.stdout
    oracle = run("h1", example(family, n), "--regular", "--oracle")
    assert oracle.stdout.startswith(f"dim H^1 = {dim}\n")


def test_h1_cycle_line_module(example, tmp_path):
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps({"field": "q", "dims": {"1": 1, "2": 1, "3": 1},
                               "matrices": {"a1": [[1]], "a2": [[1]], "a3": [[1]]}}))
    out = run("h1", example("cycle", 3), str(rep), "--both")
    assert out.returncode == 0
    assert out.stdout.startswith("dim H^1 = 1\n")
    piped = run("h1", example("cycle", 3), "-", stdin=rep.read_text())
    assert piped.stdout.startswith("dim H^1 = 1\n")


def test_h1_regular_on_cyclic_quiver_fails(example):
    out = run("h1", example("cycle", 3), "--regular")
    assert out.returncode == 1
    assert "regular module requires acyclic quiver" in out.stderr


def test_fuzz():
    out = run("fuzz", "--count", "50", "--seed", "1", "--field", "p:101")
    assert out.returncode == 0
    assert "passed: 50/50" in out.stdout
    again = run("fuzz", "--count", "50", "--seed", "1", "--field", "p:101")
    assert again.stdout == out.stdout
    assert run("fuzz", "--count", "0", "--seed", "3").returncode == 0


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["gen", "tree", "3"],
        ["gen", "chain", "1"],
        ["partition", "/nonexistent.json"],
        ["partition", "-", "--format", "xml"],
        ["h1", "-"],
        ["fuzz", "--field", "p:4"],
        ["bogus"],
    ],
)
def test_usage_errors(args):
    assert run(*args, stdin="{}").returncode == 1


def test_malformed_document():
    out = run("partition", "-", stdin="{not json")
    assert out.returncode == 1
    assert "malformed" in out.stderr
