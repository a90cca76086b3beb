import json
import subprocess
import sys

import pytest

from clusteraut.cli import BUDGET_ENV, main
from clusteraut.io import dumps, load_seed, seed_from_json
from clusteraut.mutation import apply_sequence
from clusteraut.seeds import LabeledSeed


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_graph_a2_is_pentagon(capsys):
    data = run_json(capsys, "graph", "--builtin", "a2", "--format", "json")
    assert data["complete"] and len(data["vertices"]) == 5 and len(data["edges"]) == 5
    degree = [0] * 5
    for u, v in data["edges"]:
        degree[u] += 1
        degree[v] += 1
    assert degree == [2] * 5


def test_aut_f4(capsys):
    data = run_json(capsys, "aut", "--builtin", "f4", "--which", "both")
    assert (data["aut_A"]["order"], data["aut_E"]["order"], data["equal"]) == (14, 28, False)
    assert data["aut_E"]["shape"]["dihedral_n"] == 14
    assert data["witness"] is not None and data["vertices"] == 105


def test_aut_single_sides(capsys):
    g = run_json(capsys, "aut", "--builtin", "a3", "--which", "graph", "--emit-elements")
    assert set(g) == {"vertices", "aut_E"} and len(g["aut_E"]["elements"]) == 12
    c = run_json(capsys, "aut", "--builtin", "a3", "--which", "cluster")
    assert c["aut_A"]["order"] == 12 and c["aut_A"]["direct_order"] == 6


def test_classify_markov(capsys):
    data = run_json(capsys, "classify", "--builtin", "markov", "--mode", "mutation-finite")
    assert data["finite"] and data["class_size"] == 1


def test_classify_modes(capsys):
    assert run_json(capsys, "classify", "--builtin", "b3")["type"] == "B3"
    cls = run_json(capsys, "classify", "--builtin", "atilde2", "--mode", "class")
    assert cls["size"] == 2 and cls["complete"]
    scan = run_json(capsys, "classify", "--builtin", "e66", "--mode", "rank3")
    assert scan["violations"] == []
    conj = run_json(capsys, "classify", "--builtin", "a3", "--mode", "conjecture")
    assert conj["counterexamples"] == []


def test_classify_budget_env(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "3")
    code, _, err = run(capsys, "classify", "--builtin", "te6")
    assert code == 1 and json.loads(err)["error"] == "Inconclusive"


def test_mutate_round_trip(capsys, tmp_path):
    data = run_json(capsys, "mutate", "--builtin", "b3", "--directions", "1", "2")
    expected = apply_sequence(LabeledSeed.initial(load_seed(builtin="b3").matrix), [0, 1])
    assert seed_from_json(data) == expected
    path = tmp_path / "seed.json"
    path.write_text(dumps(data))
    back = run_json(capsys, "mutate", "--seed", str(path), "--directions", "2", "1")
    assert seed_from_json(back) == load_seed(builtin="b3")


def test_quiver_file_input(capsys, tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps({"n": 3, "arrows": [{"from": 1, "to": 2}, {"from": 3, "to": 2, "v": [2, 1]}]}))
    assert run_json(capsys, "classify", "--quiver", str(path))["type"] == "B3"


def test_layers(capsys):
    data = run_json(capsys, "layers", "--builtin", "a3", "--base", "0")
    assert data["layers"] == [[4, 5, 5], [4, 5, 5], [5, 5], [4]]
    cut = run_json(capsys, "layers", "--builtin", "markov", "--max-radius", "2", "--max-layer", "0")
    assert cut["layers"] == [["inf"] * 3] and not cut["complete"]


def test_dot_output(capsys):
    code, out, _ = run(capsys, "graph", "--builtin", "a3", "--format", "dot", "--annotate")
    assert code == 0 and out.startswith("graph exchange_graph {") and out.count(" -- ") == 21


def test_infinite_graph_defaults_to_radius(capsys):
    data = run_json(capsys, "graph", "--builtin", "kronecker")
    assert not data["complete"] and len(data["vertices"]) == 13


@pytest.mark.parametrize("argv,error", [
    (["aut", "--builtin", "markov"], "DomainError"),
    (["mutate", "--builtin", "a3", "--directions", "4"], "DomainError"),
    (["layers", "--builtin", "a2", "--base", "9"], "DomainError"),
    (["graph", "--builtin", "nope"], "KeyError"),
    (["mutate", "--seed", "/nonexistent.json"], "FileNotFoundError"),
    (["mutate"], "DomainError"),
])
def test_domain_errors_exit_one(capsys, argv, error):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    payload = json.loads(err)
    assert payload["error"] == error and payload["message"]


def test_infinite_aut_message(capsys):
    _, _, err = run(capsys, "aut", "--builtin", "atilde2")
    assert json.loads(err)["message"] == "infinite graph: group computation unsupported"


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["graph", "--format", "svg", "--builtin", "a2"],
                                  ["aut", "--builtin", "a2", "--seed", "x.json"]])
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_table1(capsys):
    code, out, _ = run(capsys, "verify", "table1")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    cases, summary = lines[:-1], lines[-1]["summary"]
    assert all(c["pass"] and c["source"] for c in cases)
    assert summary["failed"] == 0 and summary["passed"] == len(cases)


def test_output_is_deterministic(capsys):
    a = run(capsys, "aut", "--builtin", "b3", "--emit-elements")
    b = run(capsys, "aut", "--builtin", "b3", "--emit-elements")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "clusteraut", "graph", "--builtin", "a2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)["vertices"]) == 5
