import csv
import io
import json
import subprocess
import sys

import pytest

from interval_completion.cli import CSV_HEADER, EXIT_INPUT, EXIT_NO, EXIT_YES, run
from interval_completion.generators import cycle, path, whipping_top
from interval_completion.graph import serialize_graph


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.txt", fmt="edge_list"):
        p = tmp_path / name
        p.write_text(serialize_graph(g, fmt))
        return str(p)
    return _write


def test_solve_c5(write):
    f = write(cycle(5))
    code, out = run(["solve", f, "--k", "2", "--json", "--no-timing"])
    body = json.loads(out)
    assert code == EXIT_YES and body["answer"] == "yes" and len(body["inserted_edges"]) == 2
    code, out = run(["solve", f, "--k", "1", "--json"])
    assert code == EXIT_NO and json.loads(out) == {"answer": "no"}


def test_solve_min_plain(write):
    code, out = run(["solve", write(cycle(6)), "--min"])
    lines = out.splitlines()
    assert code == EXIT_YES and lines[0] == "yes 3" and len(lines) == 4


def test_solve_needs_a_budget(write):
    assert run(["solve", write(cycle(4))])[0] == EXIT_INPUT


def test_malformed_input(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 0\n")
    assert run(["solve", str(bad), "--k", "1"])[0] == EXIT_INPUT
    assert run(["recognize", str(tmp_path / "missing.txt")])[0] == EXIT_INPUT


def test_graph6_input(write):
    f = write(cycle(5), "g.g6", "graph6")
    assert run(["solve", f, "--format", "graph6", "--k", "2"])[0] == EXIT_YES


def test_recognize(write):
    code, out = run(["recognize", write(path(4)), "--json"])
    assert code == EXIT_YES and json.loads(out)["interval"]
    assert run(["recognize", write(cycle(4))]) == (EXIT_NO, "not interval\n")


def test_certify(write):
    code, out = run(["certify", write(path(4))])
    assert code == EXIT_YES and json.loads(out)["type"] == "model"
    code, out = run(["certify", write(whipping_top().graph)])
    body = json.loads(out)
    assert code == EXIT_NO and body["type"] == "aw" and body["kind"] == "whipping_top"
    assert len(body["branch_edges"]) == 4
    body = json.loads(run(["certify", write(cycle(6))])[1])
    assert body["type"] == "hole" and len(body["vertices"]) == 6 and len(body["fills"]) == 14


def test_oracle(write):
    code, out = run(["oracle", write(cycle(4)), "--no-timing"])
    body = json.loads(out)
    assert code == EXIT_YES and body["k_used"] == 1 and body["all_minimum"] == 2 and "ms" not in body["stats"]
    assert run(["oracle", write(cycle(6)), "--k", "2"])[0] == EXIT_NO


def test_fills():
    code, out = run(["fills", "6"])
    assert code == EXIT_YES and out.splitlines()[0] == "14"
    assert run(["fills", "3"])[0] == EXIT_INPUT


def test_bench_cycles():
    code, out = run(["bench", "--family", "cycle", "--sizes", "4..10", "--no-timing"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_YES and list(rows[0]) == CSV_HEADER
    assert [int(r["k_min"]) for r in rows] == [n - 3 for n in range(4, 11)]


def test_bench_long_aw():
    code, out = run(["bench", "--family", "long-aw", "--sizes", "4..8", "--no-timing"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 10 and all(int(r["k_min"]) <= 2 for r in rows)


def test_bench_is_deterministic():
    argv = ["bench", "--family", "random-interval-plus-e-edges", "--sizes", "6,8", "--seed", "5", "--no-timing"]
    assert run(argv) == run(argv)


def test_json_is_byte_identical(write):
    f = write(whipping_top().graph)
    argv = ["solve", f, "--min", "--json", "--no-timing"]
    assert run(argv)[1] == run(argv)[1]


def test_module_entry_point_reads_stdin():
    proc = subprocess.run([sys.executable, "-m", "interval_completion", "solve", "-", "--k", "1"],
                          input="4\n0 1\n1 2\n2 3\n3 0\n", capture_output=True, text=True)
    assert proc.returncode == EXIT_YES and proc.stdout.startswith("yes 1")
    proc = subprocess.run([sys.executable, "-m", "interval_completion", "solve", "-", "--k", "1"],
                          input="2\n0 0\n", capture_output=True, text=True)
    assert proc.returncode == EXIT_INPUT and "at byte 2" in proc.stderr
