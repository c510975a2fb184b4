"""End-to-end tests of the command-line interface."""

import itertools
import json

import pytest

from twostep.board import puzzle_to_json
from twostep.cli import main
from twostep.mutation import scab_positions
from twostep.search import enumerate_puzzles
from twostep.strings import all_strings


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_product_worked_example(capsys):
    code, out, _ = run(capsys, "product", "--u", "01201", "--v", "10102")
    assert code == 0
    assert out.splitlines() == [
        "10201: 1*y1*y3 - 1*y1*y4 - 1*y3*y4 + 1*y4^2",
        "10210: -1*y1 - 1*y3 + 1*y4 + 1*y5",
        "11200: 1",
        "12001: -1*y1 + 1*y4",
        "12010: 1",
    ]


def test_product_json(capsys):
    code, out, _ = run(
        capsys, "product", "--u", "01201", "--v", "10102", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["12001"] == "-1*y1 + 1*y4"


def test_product_content_mismatch_is_input_error(capsys):
    code, _, err = run(capsys, "product", "--u", "012", "--v", "122")
    assert code == 2
    assert "input error" in err


def test_product_bad_string_is_input_error(capsys):
    code, _, _ = run(capsys, "product", "--u", "01x", "--v", "012")
    assert code == 2


def test_puzzles_output(capsys):
    code, out, _ = run(capsys, "puzzles", "--u", "01201", "--v", "10102", "--w", "10210")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count: 2"
    assert any("weight" in l for l in lines[1:])


def test_puzzles_svg_output(capsys, tmp_path):
    out_dir = tmp_path / "svg"
    code, out, _ = run(
        capsys,
        "puzzles",
        "--u", "120", "--v", "120", "--w", "120",
        "--render", "svg", "--out", str(out_dir),
    )
    assert code == 0
    files = list(out_dir.glob("puzzle_*.svg"))
    assert len(files) == 1
    assert "<svg" in files[0].read_text()


def scabbed_puzzle():
    for u, v, w in itertools.product(all_strings(1, 2, 4), repeat=3):
        for P in enumerate_puzzles(u, v, w):
            pos = scab_positions(P)
            if pos:
                return P, pos[0]
    raise AssertionError("no scabbed puzzle found")


def test_mutate_involution(capsys, tmp_path):
    P, (x, yy) = scabbed_puzzle()
    path = tmp_path / "puzzle.json"
    path.write_text(puzzle_to_json(P))
    code, out, _ = run(
        capsys, "mutate", "--puzzle", str(path), "--flaw", f"scab:{x},{yy}",
        "--steps", "2",
    )
    assert code == 0
    step1, step2 = out.splitlines()
    back = json.loads(step2)
    assert back["flaw"] == {"type": "scab", "anchor": [x, yy]}


def test_mutate_component_dot(capsys, tmp_path):
    P, (x, yy) = scabbed_puzzle()
    path = tmp_path / "puzzle.json"
    path.write_text(puzzle_to_json(P))
    code, out, _ = run(
        capsys, "mutate", "--puzzle", str(path), "--flaw", f"scab:{x},{yy}",
        "--component", "--format", "dot",
    )
    assert code == 0
    assert out.startswith("graph")
    assert "--" in out


def test_mutate_bad_flaw_is_semantic_error(capsys, tmp_path):
    P, _ = scabbed_puzzle()
    path = tmp_path / "puzzle.json"
    path.write_text(puzzle_to_json(P))
    bad = next(
        (x, yy)
        for x in range(P.n)
        for yy in range(x, P.n - 1)
        if (x, yy) not in scab_positions(P)
    )
    code, _, err = run(
        capsys, "mutate", "--puzzle", str(path), "--flaw", f"scab:{bad[0]},{bad[1]}"
    )
    assert code == 3
    assert "semantic error" in err


def test_mutate_bad_flaw_grammar_is_input_error(capsys, tmp_path):
    P, _ = scabbed_puzzle()
    path = tmp_path / "puzzle.json"
    path.write_text(puzzle_to_json(P))
    code, _, _ = run(capsys, "mutate", "--puzzle", str(path), "--flaw", "scab:zz")
    assert code == 2


def test_mutate_missing_file_is_input_error(capsys, tmp_path):
    code, _, _ = run(
        capsys, "mutate", "--puzzle", str(tmp_path / "nope.json"), "--flaw", "scab:0,0"
    )
    assert code == 2


def test_quantum_worked_example(capsys):
    code, out, _ = run(
        capsys, "quantum", "--m", "2", "--n", "5", "--lambda", "2,1", "--mu", "3,1"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    # pure-q term (y5 - y3)(y2 - y1) and the q * [one-box] term y5 - y1
    assert "q^1 [0]: 1*y1*y3 - 1*y1*y5 - 1*y2*y3 + 1*y2*y5" in lines
    assert "q^1 [1]: -1*y1 + 1*y5" in lines


def test_quantum_bad_partition_is_input_error(capsys):
    code, _, _ = run(
        capsys, "quantum", "--m", "2", "--n", "5", "--lambda", "9", "--mu", "1"
    )
    assert code == 2


def test_verify_pieces(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pieces")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["suite"] == "pieces"


def test_verify_gashes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gashes")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_oracle_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert all(r["pass"] for r in data["checks"])
