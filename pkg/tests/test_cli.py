import json

import pytest

from qcluster.cli import main

A2_FILE = {
    "n": 2,
    "unfrozen": [1, 2],
    "B": [[0, -1], [1, 0]],
    "Lambda": [[0, -1], [1, 0]],
    "D": [1, 1],
}


@pytest.fixture
def a2_file(tmp_path):
    p = tmp_path / "a2.json"
    p.write_text(json.dumps(A2_FILE))
    return str(p)


@pytest.fixture
def b2_file_no_lambda(tmp_path):
    p = tmp_path / "b2.json"
    p.write_text(json.dumps({"n": 2, "unfrozen": [1, 2], "B": [[0, -2], [1, 0]]}))
    return str(p)


def test_check_ok(a2_file, capsys):
    assert main(["check", a2_file]) == 0
    assert "compatible" in capsys.readouterr().out


def test_check_bad_lambda(tmp_path, capsys):
    bad = dict(A2_FILE, Lambda=[[0, 0], [0, 0]], D=[1, 1])
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    assert main(["check", str(p)]) == 1
    assert "incompatible" in capsys.readouterr().out


def test_check_synthesizes_lambda(b2_file_no_lambda, capsys):
    assert main(["check", b2_file_no_lambda]) == 0
    out = capsys.readouterr().out
    assert "Lambda synthesized" in out
    assert "[[0, -1], [1, 0]]" in out
    assert "D=[1, 2]" in out


def test_mutate(a2_file, capsys):
    assert main(["mutate", a2_file, "--word", "1"]) == 0
    out = capsys.readouterr().out
    assert "B=[[0, 1], [-1, 0]]" in out
    assert "Lambda=[[0, 1], [-1, 0]]" in out


def test_expand(a2_file, capsys):
    assert main(["expand", a2_file, "--word", "2,1,2", "--var", "1"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "X[-1,-1] + X[-1,0] + X[0,-1]"
    assert main(["expand", a2_file, "--var", "2"]) == 0
    assert capsys.readouterr().out.strip() == "X[0,1]"


def test_expand_word_inverse(a2_file, capsys):
    assert main(["expand", a2_file, "--word", "1,2,2,1", "--var", "1"]) == 0
    assert capsys.readouterr().out.strip() == "X[1,0]"


def test_expand_bad_var(a2_file, capsys):
    assert main(["expand", a2_file, "--var", "7"]) == 2


def test_bad_word(a2_file):
    assert main(["mutate", a2_file, "--word", "3"]) == 2
    assert main(["mutate", a2_file, "--word", "x"]) == 2


def test_graph(a2_file, capsys, tmp_path):
    dot = tmp_path / "a2.dot"
    assert main(["graph", a2_file, "--dot", str(dot)]) == 0
    out = capsys.readouterr().out
    assert "5 nodes" in out and "5 distinct cluster variables" in out
    text = dot.read_text()
    assert text.startswith("graph exchange {")
    assert text.count("--") == 5


def test_graph_truncation_flagged(a2_file, capsys):
    assert main(["graph", a2_file, "--cap", "2"]) == 0
    assert "truncated" in capsys.readouterr().out


def test_graph_dot_to_stdout(a2_file, capsys):
    assert main(["graph", a2_file, "--dot", "-"]) == 0
    out = capsys.readouterr().out
    assert "graph exchange {" in out and out.rstrip().endswith("}")


def test_shift(a2_file, capsys):
    assert main(["shift", a2_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["direction"] == 1
    assert sorted(data["sigma"]) == ["1", "2"]
    assert all(u == [0, 0] for u in data["u"].values())
    assert main(["shift", a2_file, "--direction", "-1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["direction"] == -1


def test_leclerc_report(a2_file, capsys, tmp_path):
    out_path = tmp_path / "report.json"
    assert main(["leclerc", a2_file, "--cap", "2", "--json", str(out_path)]) == 0
    printed = capsys.readouterr().out
    assert "two_tail_fail 0" in printed
    assert "indeterminate 0" in printed
    doc = json.loads(out_path.read_text())
    assert doc["nodes"] == 5 and doc["variables"] == 5
    assert doc["counts"]["two_tail_fail"] == 0
    assert doc["conflicts"] == []
    assert all(
        set(p) >= {"R", "V", "verdict", "checks"} for p in doc["pairs"]
    )
    two_tails = [p for p in doc["pairs"] if p["verdict"] == "two_tail"]
    assert two_tails and all("s" in p and "h" in p and "S" in p and "H" in p for p in two_tails)


def test_leclerc_infinite_type_message(tmp_path, capsys):
    # the Kronecker seed has a compatible pair but an infinite graph
    kronecker = {
        "n": 2,
        "unfrozen": [1, 2],
        "B": [[0, 2], [-2, 0]],
        "Lambda": [[0, 1], [-1, 0]],
    }
    p = tmp_path / "kronecker.json"
    p.write_text(json.dumps(kronecker))
    assert main(["leclerc", str(p), "--node-cap", "12"]) == 1
    assert "not finite type within cap" in capsys.readouterr().out


def test_leclerc_sample_scope(a2_file, capsys):
    assert main(["--seed", "3", "leclerc", a2_file, "--cap", "1", "--scope", "sample:2"]) == 0


def test_deterministic_output(a2_file, tmp_path, capsys):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["leclerc", a2_file, "--cap", "1", "--json", str(p1)]) == 0
    assert main(["leclerc", a2_file, "--cap", "1", "--json", str(p2)]) == 0
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()


def test_unreadable_file():
    assert main(["check", "/nonexistent/path.json"]) == 2


def test_incompatible_pair_rejected_outside_check(tmp_path):
    bad = dict(A2_FILE, Lambda=[[0, 0], [0, 0]], D=[1, 1])
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    assert main(["graph", str(p)]) == 2


def test_unsynthesizable_lambda_is_usage_error(tmp_path):
    rank_deficient = {"n": 3, "unfrozen": [1, 2, 3],
                      "B": [[0, -1, 0], [1, 0, -1], [0, 1, 0]]}
    p = tmp_path / "a3free.json"
    p.write_text(json.dumps(rank_deficient))
    assert main(["check", str(p)]) == 2


def test_usage_error_exit_code():
    assert main(["frobnicate"]) == 2
