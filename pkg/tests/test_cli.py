from __future__ import annotations

import json

import pytest

from pegkit.cli import main, parse_filter, UsageError
from pegkit.graphs import enumerate_graphs
from pegkit.theory import classify_pegging_3


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# --- invariant -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "family,inv,value",
    [(["cycle", "7"], "p", 4), (["hypercube", "3"], "P", 5), (["path", "2"], "p", 2)],
)
def test_invariant_golden(capsys, family, inv, value):
    out = run_json(capsys, "invariant", "--family", *family, "--invariant", inv)
    assert out["value"] == value and out["invariant"] == inv
    assert "witness" not in out


def test_invariant_witness_and_structural(capsys):
    out = run_json(capsys, "invariant", "--family", "cycle", "5", "--invariant", "P", "--witness")
    assert len(out["witness"]) == 2
    assert run_json(capsys, "invariant", "--family", "cycle", "6", "--invariant", "dve")["value"] == 2
    assert run_json(capsys, "invariant", "--family", "hypercube", "3", "--invariant", "alpha")["value"] == 4
    assert run_json(capsys, "invariant", "--family", "empty", "2", "--invariant", "diameter")["value"] == "infinity"


def test_invariant_from_file(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text('{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}')
    out = run_json(capsys, "invariant", "--file", str(f), "--invariant", "P")
    assert out["value"] == 3


def test_malformed_file_exits_one(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"n": 3, "edges": [[2, 1]]}')
    code, out, err = run(capsys, "invariant", "--file", str(f), "--invariant", "P")
    assert code == 1 and out == "" and "malformed" in err
    f.write_text("not json")
    assert run(capsys, "invariant", "--file", str(f), "--invariant", "P")[0] == 1


def test_unknown_family_and_capacity(capsys):
    assert run(capsys, "invariant", "--family", "petersen", "--invariant", "P")[0] == 1
    assert run(capsys, "invariant", "--family", "path", "65", "--invariant", "alpha")[0] == 1


def test_budget_exhaustion_exits_two(capsys):
    code, out, err = run(capsys, "invariant", "--family", "hypercube", "4", "--invariant", "P", "--budget", "100")
    assert code == 2 and "budget" in err


def test_cache_round_trip(capsys, tmp_path):
    path = tmp_path / "cache.jsonl"
    args = ("invariant", "--family", "cycle", "6", "--invariant", "P", "--witness", "--cache", str(path))
    first = run_json(capsys, *args)
    code, out, err = run(capsys, *args)
    second = json.loads(out)
    assert first["cache"] == "miss" and second["cache"] == "hit" and "hit" in err
    first.pop("cache"), second.pop("cache")
    assert first == second


def test_cache_hit_relabels_witness_for_isomorphic_input(capsys, tmp_path):
    path = tmp_path / "cache.jsonl"
    run_json(capsys, "invariant", "--family", "path", "5", "--invariant", "P", "--witness", "--cache", str(path))
    f = tmp_path / "p5.json"
    f.write_text('{"n": 5, "edges": [[0, 4], [1, 3], [2, 3], [2, 4]]}')
    out = run_json(capsys, "invariant", "--file", str(f), "--invariant", "P", "--witness", "--cache", str(path))
    assert out["cache"] == "hit" and out["value"] == 4
    from pegkit.engine import reach
    from pegkit.graphs import loads_graph

    g = loads_graph(f.read_text())
    assert reach(g, out["witness"]).reachable_mask != g.full_mask


def test_cache_env_and_corrupt_lines(capsys, tmp_path, monkeypatch, caplog):
    path = tmp_path / "env.jsonl"
    path.write_text("{broken\n")
    monkeypatch.setenv("PEGKIT_CACHE", str(path))
    out = run_json(capsys, "invariant", "--family", "path", "4", "--invariant", "p", "--cache")
    assert out["cache"] == "miss" and out["value"] == 2
    assert "corrupt" in caplog.text
    assert len(path.read_text().splitlines()) == 2


def test_output_is_byte_stable(capsys):
    a = run(capsys, "invariant", "--family", "hypercube", "3", "--invariant", "P", "--witness")[1]
    b = run(capsys, "invariant", "--family", "hypercube", "3", "--invariant", "P", "--witness")[1]
    assert a == b


# --- reach ---------------------------------------------------------------------------


def test_reach_certificate_golden(capsys):
    out = run_json(capsys, "reach", "--family", "path", "4", "--pegs", "[2,3]", "--target", "0", "--certificate")
    assert out["target_reachable"] is False
    assert out["certificate"] == {"target": 0, "p": "-1/2", "q": "1/2"}


def test_reach_cycle_golden(capsys):
    out = run_json(capsys, "reach", "--family", "cycle", "5", "--pegs", "[1,2]")
    assert out["reachable"] == [0, 1, 2, 3]


def test_reach_no_moves_golden(capsys):
    out = run_json(capsys, "reach", "--family", "path", "3", "--pegs", "[0,2]")
    assert out["reachable"] == [0, 2]


def test_reach_flags(capsys):
    out = run_json(capsys, "reach", "--family", "path", "4", "--pegs", "[0,1,2]", "--max-moves", "1")
    assert out["reachable"] == [0, 1, 2, 3]
    out = run_json(capsys, "reach", "--family", "path", "3", "--counts", "[2,0,0]")
    assert out["reachable"] == [0, 1]
    out = run_json(capsys, "reach", "--family", "path", "3", "--counts", '{"0": 2}')
    assert out["reachable"] == [0, 1]
    out = run_json(capsys, "reach", "--family", "cycle", "5", "--pegs", "[1,2]", "--all-moves")
    assert out["reachable"] == [0, 1, 2, 3]
    out = run_json(capsys, "reach", "--family", "cycle", "5", "--pegs", "[1,2]", "--witness", "--target", "3")
    assert out["witnesses"] == {"3": [{"kind": "peg", "u": 1, "v": 2, "w": 3}]}
    out = run_json(capsys, "reach", "--family", "cycle", "5", "--pegs", "[0,2]", "--target", "0", "--certificate")
    assert out["certificate"] is None


@pytest.mark.parametrize(
    "extra",
    [
        ["--pegs", "[7]"],
        ["--pegs", "[1,1]"],
        ["--pegs", "{1}"],
        ["--pegs", "[1]", "--target", "9"],
        ["--pegs", "[1]", "--certificate"],
        ["--counts", "[1,2]"],
        [],
    ],
)
def test_reach_rejects_bad_input(capsys, extra):
    assert run(capsys, "reach", "--family", "path", "4", *extra)[0] == 1


# --- verify --------------------------------------------------------------------------


def test_verify_cycles(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, err = run(capsys, "verify", "cycles", "--max-n", "9", "--jobs", "1", "--report", str(report))
    assert code == 0 and "PASS" in out
    data = json.loads(report.read_text())
    assert data["passed"] and data["suites"][0]["suite"] == "cycles"
    descriptions = [c["description"] for c in data["suites"][0]["cases"]]
    assert "P(C9) = 7" in descriptions


def test_verify_conclusion_examples_json(capsys):
    out = run_json(capsys, "verify", "conclusion-examples", "--json", "--jobs", "1")
    assert out["passed"] and len(out["suites"][0]["cases"]) == 6


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "nonsense")[0] == 1


# --- enumerate -----------------------------------------------------------------------


def test_enumerate_counts(capsys):
    assert len(run(capsys, "enumerate", "4", "--dedup")[1].splitlines()) == 11
    assert len(run(capsys, "enumerate", "3")[1].splitlines()) == 8


def test_enumerate_filter_matches_classifier(capsys):
    code, out, _ = run(capsys, "enumerate", "5", "--dedup", "--filter", "P==3")
    lines = [json.loads(line) for line in out.splitlines()]
    predicted = [g for g in enumerate_graphs(5, dedup=True) if classify_pegging_3(g)]
    assert code == 0
    assert sorted(json.dumps(r, sort_keys=True) for r in lines) == sorted(
        json.dumps({"edges": [list(e) for e in g.edges()], "n": 5}, sort_keys=True) for g in predicted
    )


def test_enumerate_fields(capsys):
    out = run(capsys, "enumerate", "3", "--dedup", "--filter", "alpha==2 and edges==1", "--fields", "alpha,p")[1]
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"edges": [[0, 1]], "fields": {"alpha": 2, "p": 3}, "n": 3}]


def test_filter_syntax():
    assert parse_filter("P==3 and alpha >= 2") == [("P", "==", 3), ("alpha", ">=", 2)]
    with pytest.raises(UsageError):
        parse_filter("P=3")
    with pytest.raises(UsageError):
        parse_filter("girth==5")


def test_enumerate_bad_input(capsys):
    assert run(capsys, "enumerate", "8")[0] == 1
    assert run(capsys, "enumerate", "4", "--filter", "P===3")[0] == 1


def test_verify_all_reduced(capsys, tmp_path):
    report = tmp_path / "all.json"
    code, out, err = run(capsys, "verify", "all", "--max-n", "5", "--samples", "2000", "--jobs", "1",
                         "--report", str(report))
    data = json.loads(report.read_text())
    assert code == 0, out
    assert data["passed"] and len(data["suites"]) == 14
