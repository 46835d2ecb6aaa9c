"""Command line behavior: output shapes, determinism, exit codes."""

import json
import os

import pytest

from forestbuilder.cli import run
from forestbuilder.distribution import format_fraction
from forestbuilder.engine import forest_polynomial
from forestbuilder.graph6 import parse_graph6


def _ok(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return captured.out


def test_poly_exact_json(capsys):
    out = _ok(capsys, ["poly", "--family", "kn", "--n", "4"])
    assert json.loads(out) == {"n": 4, "m": 6, "probs": {"1": "4/5", "2": "1/5"}}


def test_poly_text_format(capsys):
    out = _ok(capsys, ["poly", "--family", "kn", "--n", "4", "--format", "text"])
    assert out == "1 4/5\n2 1/5\n"


def test_poly_brute_graph6_agrees(capsys):
    brute = _ok(capsys, ["poly", "--g6", "C~", "--method", "brute"])
    exact = _ok(capsys, ["poly", "--family", "kn", "--n", "4"])
    assert json.loads(brute)["probs"] == json.loads(exact)["probs"]


def test_poly_closed_method_counts_vertices(capsys):
    out = _ok(capsys, ["poly", "--family", "kst", "--s", "2", "--t", "3",
                       "--method", "closed"])
    assert json.loads(out)["probs"] == {"1": "1/2", "2": "1/2"}
    # --n is the vertex count here: a 6-vertex path has 5 edges
    out = _ok(capsys, ["poly", "--family", "path", "--n", "6", "--method", "closed"])
    assert json.loads(out)["probs"] == {"1": "2/15", "2": "11/15", "3": "2/15"}


def test_poly_closed_method_rejects_other_families(capsys):
    assert run(["poly", "--family", "cycle", "--n", "5", "--method", "closed"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_poly_from_edge_list_file(capsys, tmp_path):
    source = tmp_path / "path.txt"
    source.write_text("4 3\n0 1\n1 2\n2 3\n")
    out = _ok(capsys, ["poly", "--edges", str(source)])
    assert json.loads(out)["probs"] == {"1": "2/3", "2": "1/3"}


def test_expect_and_one_comp_and_cheeger(capsys):
    out = _ok(capsys, ["expect", "--family", "kn", "--n", "4"])
    assert json.loads(out) == {"value": "6/5"}
    out = _ok(capsys, ["expect", "--family", "kn", "--n", "4", "--format", "text"])
    assert out == "6/5\n"
    out = _ok(capsys, ["one-comp", "--g6", "C~", "--format", "text"])
    assert out == "4/5\n"
    out = _ok(capsys, ["cheeger", "--family", "cycle", "--n", "4", "--format", "text"])
    assert out == "1/2\n"


def test_closed_formula_values(capsys):
    out = _ok(capsys, ["closed", "kn", "--n", "5"])
    assert json.loads(out)["probs"] == {"1": "4/7", "2": "3/7"}
    out = _ok(capsys, ["closed", "q", "--s", "2", "--t", "2", "--a", "2",
                       "--b", "2", "--l", "1", "--format", "text"])
    assert out == "2/3\n"
    out = _ok(capsys, ["closed", "cycle1", "--n", "4", "--format", "text"])
    assert out == "2/3\n"
    out = _ok(capsys, ["closed", "gnm-expect", "--n", "4", "--m", "6",
                       "--format", "text"])
    assert out == "6/5\n"
    out = _ok(capsys, ["closed", "gnm-bound", "--n", "5", "--m", "3",
                       "--format", "text"])
    assert out == "9/7\n"
    # unlike poly --method closed, the path formula takes the edge count
    out = _ok(capsys, ["closed", "path", "--n", "5"])
    assert json.loads(out)["probs"] == {"1": "2/15", "2": "11/15", "3": "2/15"}


def test_closed_missing_argument(capsys):
    assert run(["closed", "kst", "--s", "2"]) == 2
    assert "requires --t" in capsys.readouterr().err


def test_simulate_deterministic(capsys):
    argv = ["simulate", "--family", "kn", "--n", "4", "--trials", "200", "--seed", "7"]
    first = _ok(capsys, argv)
    payload = json.loads(first)
    assert payload["trials"] == 200 and payload["seed"] == 7
    assert sum(payload["counts"].values()) == 200
    assert _ok(capsys, argv) == first
    text = _ok(capsys, argv + ["--format", "text"])
    assert text.splitlines()[-2].startswith("mean ")


def test_gnm_sim_deterministic(capsys):
    argv = ["gnm-sim", "--n", "4", "--m", "3", "--graph-samples", "5",
            "--orderings", "10", "--seed", "1"]
    first = _ok(capsys, argv)
    payload = json.loads(first)
    assert set(payload) == {"mean", "stderr"}
    assert _ok(capsys, argv) == first


def test_decay_json_and_csv(capsys):
    argv = ["decay", "--d", "2", "--n-values", "5", "--trials", "50", "--seed", "3"]
    row = json.loads(_ok(capsys, argv))
    assert row["n"] == 5 and row["cheeger"] == "1/2"
    assert 0 < row["p1_hat"] < 1
    csv_out = _ok(capsys, argv + ["--format", "csv"])
    lines = csv_out.splitlines()
    assert lines[0] == "n,p1_hat,neg_log_p1_over_n,cheeger"
    assert lines[1].startswith("5,") and lines[1].endswith(",1/2")


def test_search_pairs_and_empty_outputs(capsys):
    out = _ok(capsys, ["search", "pairs", "--n", "4"])
    lines = [json.loads(line) for line in out.splitlines()]
    assert [(r["graph6_a"], r["graph6_b"]) for r in lines] == [
        ("Cq", "Cr"), ("C}", "C~")
    ]
    assert _ok(capsys, ["search", "twins", "--n", "4"]) == ""
    assert _ok(capsys, ["search", "trees", "--n", "7"]) == ""
    assert _ok(capsys, ["search", "logconcave", "--max-n", "4"]) == ""


def test_search_requires_size_flags(capsys):
    assert run(["search", "pairs"]) == 2
    assert "requires --n" in capsys.readouterr().err
    assert run(["search", "logconcave"]) == 2
    assert "requires --max-n" in capsys.readouterr().err


def test_conjecture_output(capsys):
    payload = json.loads(_ok(capsys, ["conjecture", "--k", "2"]))
    assert payload["k"] == 2 and payload["holds"] is True
    assert _ok(capsys, ["conjecture", "--k", "2", "--format", "text"]) == "holds\n"


def test_table_outputs(capsys):
    out = _ok(capsys, ["table", "trees", "--max-n", "4"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 4
    assert all(set(row) == {"graph6", "polynomial"} for row in rows)
    out = _ok(capsys, ["table", "small-graphs", "--max-n", "3"])
    assert len(out.splitlines()) == 3


def test_table_small_graphs_parses_back_to_exact_polynomials(capsys):
    out = _ok(capsys, ["table", "small-graphs", "--max-n", "5"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1 + 2 + 6 + 21
    for row in rows:
        dist = forest_polynomial(parse_graph6(row["graph6"]))
        assert row["polynomial"]["probs"] == {
            str(k): format_fraction(p) for k, p in sorted(dist.probs.items())
        }


@pytest.mark.skipif(os.environ.get("RUN_SLOW") != "1", reason="set RUN_SLOW=1 to run")
def test_poly_nine_vertex_tripartite_flagship(capsys):
    out = _ok(capsys, ["poly", "--family", "multipartite", "--parts", "3,3,3"])
    assert json.loads(out)["probs"] == {
        "1": "1992/26125",
        "2": "11724/26125",
        "3": "10951/26125",
        "4": "1458/26125",
    }


def test_verbose_notes_go_to_stderr(capsys):
    code = run(["--verbose", "table", "small-graphs", "--max-n", "3"])
    captured = capsys.readouterr()
    assert code == 0
    assert "connected classes" in captured.err
    assert "connected classes" not in captured.out


def test_usage_errors_exit_two(capsys):
    assert run(["poly"]) == 2
    capsys.readouterr()
    assert run(["poly", "--family", "kn", "--n", "4", "--n", "5"]) == 2
    assert "duplicate flag" in capsys.readouterr().err
    assert run(["poly", "--g6", "C~", "--family", "kn"]) == 2
    capsys.readouterr()
    assert run(["poly", "--family", "kn"]) == 2
    assert "requires --n" in capsys.readouterr().err


def test_computation_errors_exit_one(capsys):
    assert run(["closed", "kn", "--n", "1"]) == 1
    assert "error:" in capsys.readouterr().err
    assert run(["poly", "--g6", "A`"]) == 1
    capsys.readouterr()
    assert run(["cheeger", "--family", "kn", "--n", "25"]) == 1
    capsys.readouterr()
