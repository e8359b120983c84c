import json

import pytest

from bezout_trees.cli import run
from bezout_trees.dumps import dumps, read_records
from bezout_trees.ppm import read_ppm


def test_triple(capsys):
    assert run(["triple", "2", "1"]) == 0
    assert capsys.readouterr().out == "3 4 5\n"


@pytest.mark.parametrize("args", [["triple", "4", "2"], ["triple", "1", "2"], ["triple", "x", "1"]])
def test_triple_usage_errors(args):
    assert run(args) == 2


def test_tree_csv(capsys):
    assert run(["tree", "--root", "3,1", "--depth", "1", "--format", "csv"]) == 0
    assert capsys.readouterr().out == (
        "level,path,m,n,u,v\n1,A,5,3,-1,2\n1,B,7,3,1,-2\n1,C,5,1,0,1\n"
    )


def test_tree_jsonl_with_root(capsys):
    assert run(["tree", "--root", "2,1", "--depth", "1", "--format", "jsonl", "--include-root"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0]) == {"level": 0, "path": "", "m": 2, "n": 1, "u": 0, "v": 1}
    assert json.loads(lines[1]) == {"level": 1, "path": "A", "m": 3, "n": 2, "u": -1, "v": 2}
    assert len(lines) == 4


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_dump_roundtrip(tmp_path, fmt):
    out = tmp_path / f"tree.{fmt}"
    assert run(["tree", "--root", "2,1", "--depth", "5", "--include-root", "--format", fmt, "--out", str(out)]) == 0
    text = out.read_text()
    assert dumps(read_records(text, fmt), fmt) == text


@pytest.mark.parametrize(
    "args",
    [
        ["tree", "--root", "5,1", "--depth", "1"],
        ["tree", "--root", "3,1", "--depth", "-1"],
        ["tree", "--root", "3,1", "--depth", "1", "--format", "xml"],
        ["tree", "--root", "3,1", "--depth", "1", "--seed", "1,1"],
        ["tree", "--root", "3,1", "--depth", "1", "--bogus"],
        ["check", "--depth", "0"],
        ["render", "--out", "x.ppm", "--window", "0,1,0,1"],
        ["render", "--out", "x.ppm", "--size", "ten"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(args):
    assert run(args) == 2


def test_check_depth_8(tmp_path, capsys):
    out = tmp_path / "report.json"
    plot = tmp_path / "levels.png"
    assert run(["check", "--depth", "8", "--out", str(out), "--plot", str(plot)]) == 0
    doc = json.loads(out.read_text())
    assert doc["total_nodes"] == 19680 and doc["differed"] == 3280
    assert doc["differed_fraction"]["text"] == "1/6"
    assert plot.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert "conjecture=holds" in capsys.readouterr().err


def test_check_patched_stdout(capsys):
    assert run(["check", "--depth", "5", "--patched"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["differed"] == 0 and doc["patched"] is True


def test_check_violation_exit_code(monkeypatch):
    from bezout_trees import cli

    monkeypatch.setattr(cli, "conjecture_holds", lambda report: False)
    assert run(["check", "--depth", "2"]) == 1


def test_bench(capsys, tmp_path):
    plot = tmp_path / "bench.png"
    assert run(["bench", "--depth", "1", "--engine", "both", "--plot", str(plot)]) == 0
    out = capsys.readouterr().out
    assert "pairs=6" in out and "ns/pair" in out and "ratio" in out
    assert plot.exists()


def test_render_command(tmp_path):
    out = tmp_path / "w.ppm"
    args = ["render", "--window", "-1,1,0.1,1.1", "--size", "12x8", "--term-depth", "2",
            "--motif", "identity", "--base-terms", "--swapped", "--threads", "2", "--out", str(out)]
    assert run(args) == 0
    assert read_ppm(out).shape == (8, 12, 3)
    assert out.read_bytes().startswith(b"P6\n12 8\n255\n")


def test_render_missing_colormap_is_runtime_error(tmp_path):
    args = ["render", "--size", "4x4", "--term-depth", "0", "--colormap", str(tmp_path / "none.ppm"),
            "--out", str(tmp_path / "w.ppm")]
    assert run(args) == 3


def test_render_unwritable_output_is_runtime_error(tmp_path):
    args = ["render", "--size", "4x4", "--term-depth", "0", "--out", str(tmp_path / "no" / "dir" / "w.ppm")]
    assert run(args) == 3
