import json

import pytest

import kedge.harness as harness
from kedge.cli import main
from kedge.generators import complete, petersen_graph
from kedge.io import save_graph, write_edge_list


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(tmp_path, capsys):
    path = tmp_path / "k5.txt"
    save_graph(complete(5), path)
    code, out, _ = run(["analyze", str(path)], capsys)
    assert code == 0
    assert "edge connectivity: 4" in out
    assert "vertex connectivity: 4" in out


def test_analyze_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 x\n")
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 2
    assert "line 2" in err


def test_find_removable(tmp_path, capsys):
    path = tmp_path / "pet.g6"
    save_graph(petersen_graph(), path, "graph6")
    code, out, _ = run(["find-removable", "--k", "1", "--vertex", str(path)], capsys)
    assert code == 0 and "removable vertex: vertices (0,)" in out
    code, out, _ = run(["find-removable", "--k", "3", "--vertex", str(path)], capsys)
    assert code == 0 and "no removable vertex" in out
    code, out, _ = run(
        ["find-removable", "--k", "1", "--tree", "path:3", str(path)], capsys
    )
    assert code == 0 and "removable tree" in out


def test_find_removable_flags_are_exclusive(tmp_path, capsys):
    path = tmp_path / "pet.g6"
    save_graph(petersen_graph(), path, "graph6")
    with pytest.raises(SystemExit) as exc:
        main(["find-removable", "--k", "1", "--vertex", "--edge", str(path)])
    assert exc.value.code == 2


def test_gen_round_trip(tmp_path, capsys):
    out_path = tmp_path / "g.txt"
    code, _, _ = run(
        ["gen", "--model", "with_hypotheses", "--n", "10", "--k", "2",
         "--delta", "4", "--seed", "7", "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    from kedge.generators import gen_with_hypotheses
    from kedge.io import load_graph

    assert load_graph(out_path) == gen_with_hypotheses(10, 2, 4, 7)


def test_gen_to_stdout(capsys):
    code, out, _ = run(["gen", "--model", "petersen"], capsys)
    assert code == 0
    assert out == write_edge_list(petersen_graph())


def test_gen_infeasible_is_usage_error(capsys):
    code, _, err = run(
        ["gen", "--model", "with_hypotheses", "--n", "4", "--k", "5",
         "--delta", "5", "--seed", "1"],
        capsys,
    )
    assert code == 2 and err


def test_verify_theorem_statement(tmp_path, capsys):
    report = tmp_path / "rep.json"
    code, out, _ = run(
        ["verify", "--statement", "edge-pair", "--k", "2", "--trials", "3",
         "--seed", "11", "--json", str(report)],
        capsys,
    )
    assert code == 0
    assert "witness_found=3" in out and "[expected witness_found: ok]" in out
    data = json.loads(report.read_text())
    assert data["summary"]["per_cell"]["edge_pair k=2"]["violations"] == 0


def test_verify_tightness_statement(capsys):
    code, out, _ = run(
        ["verify", "--statement", "tightness", "--k", "2", "--m", "3",
         "--trials", "1", "--seed", "0"],
        capsys,
    )
    assert code == 0 and "not_found=1" in out
    code, out, _ = run(
        ["verify", "--statement", "tightness", "--k", "1", "--m", "2",
         "--trials", "1", "--seed", "0"],
        capsys,
    )
    assert code == 0 and "[trivial-residual convention]" in out


def test_verify_open_cell_not_gated(capsys):
    code, out, _ = run(
        ["verify", "--statement", "tree", "--k", "4", "--m", "3",
         "--trials", "2", "--seed", "42"],
        capsys,
    )
    assert code == 0
    assert "[open conjecture cell, not gated]" in out


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "statement": "mader_vertex",
        "k_values": [1, 2],
        "trials": 2,
        "master_seed": 5,
    }))
    code, out, _ = run(["verify", "--config", str(cfg)], capsys)
    assert code == 0
    assert "mader_vertex k=1" in out and "mader_vertex k=2" in out


def test_verify_usage_errors(capsys):
    code, _, err = run(["verify", "--statement", "edge-pair", "--k", "2"], capsys)
    assert code == 2 and "required" in err
    code, _, err = run(
        ["verify", "--statement", "tightness", "--k", "2", "--m", "3",
         "--tree", "path:3", "--trials", "1", "--seed", "0"],
        capsys,
    )
    assert code == 2 and "mutually exclusive" in err


def test_verify_violation_exit_code(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(harness, "find_removable_vertex", lambda g, k: None)
    code, out, _ = run(
        ["verify", "--statement", "mader-vertex", "--k", "2", "--trials", "1",
         "--seed", "1"],
        capsys,
    )
    assert code == 1
    assert "violation candidates present" in out


def test_counterexample(capsys):
    code, out, _ = run(
        ["counterexample", "--k", "2", "--m", "2", "--budget", "3",
         "--seed", "9"],
        capsys,
    )
    assert code == 0
    assert "no counterexample candidates" in out
