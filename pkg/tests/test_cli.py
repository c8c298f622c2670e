import io
import json
import subprocess
import sys

import pytest

from posmach.cli import run_cli
from posmach.crumble import crumble
from posmach.machines import metrics, sliced_run
from posmach.syntax import parse_lambda

SAMPLE = r"(\x.x x)((\z.z)(\z.z))"


@pytest.fixture
def term_file(tmp_path):
    def make(text):
        p = tmp_path / "t.txt"
        p.write_text(text)
        return str(p)
    return make


def test_crumble(term_file, capsys):
    assert run_cli(["crumble", term_file(SAMPLE)]) == 0
    assert capsys.readouterr().out.strip() == r"v4[v4 <- (\v1.v5[v5 <- v1 v1]) v6][v6 <- (\v2.v2) v7][v7 <- \v3.v3]"


def test_eval_variable(term_file, capsys):
    assert run_cli(["eval", term_file("x")]) == 0
    out = capsys.readouterr().out
    assert "x" in out and out.strip().endswith("normal in 0 steps")


def test_eval_steps(term_file, capsys):
    assert run_cli(["eval", term_file(SAMPLE)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [l.split(" |")[0] for l in lines[1:-1]] == ["m", "m", "e", "m"]
    assert lines[-1] == "normal in 4 steps"


def test_run_trace(term_file, capsys):
    assert run_cli(["run", term_file(SAMPLE), "--machine", "sliced", "--trace"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 9          # initial state plus eight transitions
    assert lines[-1] == r"sea3 | ε | v7 | [v7 <- \v3.v3] : ε"


def test_run_metrics_matches_report(term_file, capsys):
    assert run_cli(["run", term_file(SAMPLE), "--metrics", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec == metrics(sliced_run(crumble(parse_lambda(SAMPLE)), 10000))
    assert rec["cost"]["total"] == rec["cost"]["rename"] + rec["cost"]["copy"] + rec["cost"]["search"]


def test_run_positive_autodetect(term_file, capsys):
    f = term_file(r"x[x <- y y][y <- \z.w[w <- z z]]")
    assert run_cli(["run", f, "--machine", "natural", "--max-steps", "3", "--metrics", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["status"] == "budget_exhausted" and rec["counts"]["m"] + rec["counts"]["e"] == 3
    assert rec["term_size"] == 7


def test_run_check_invariants(term_file, capsys):
    assert run_cli(["run", term_file(SAMPLE), "--check-invariants"]) == 0
    assert run_cli(["run", term_file(SAMPLE), "--machine", "natural", "--check-invariants"]) == 2


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("x y"))
    assert run_cli(["crumble", "-"]) == 0
    assert capsys.readouterr().out.strip() == "v1[v1 <- x y]"


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["run", "/nonexistent/file"], ["bench", "--budgets", "8,4"],
    ["run", "-", "--machine", "krivine"],
])
def test_usage_errors(argv, capsys):
    assert run_cli(argv) == 2


def test_parse_error(term_file, capsys):
    assert run_cli(["eval", term_file(r"(\x.")]) == 2
    assert "posmach:" in capsys.readouterr().err
    assert run_cli(["run", term_file("x[x <- y]"), "--positive"]) == 2


def test_bench(capsys):
    assert run_cli(["bench", "--family", "tau3", "--budgets", "64,128,256"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    rows = [l.split() for l in out[2:]]
    assert [r[0] for r in rows] == ["64", "128", "256"]
    nat_ratio, sl_ratio = float(rows[2][2]), float(rows[2][4])
    assert 3.3 < nat_ratio < 4.3 and 1.8 < sl_ratio < 2.2


def test_bench_json(capsys):
    assert run_cli(["bench", "--family", "church", "--budgets", "1,2,4", "--metrics", "json"]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert [r["budget"] for r in recs] == [1, 2, 4]


def test_check_deterministic(capsys):
    assert run_cli(["check", "--seed", "6", "--corpus", "8"]) == 0
    first = [l.split("(")[0] for l in capsys.readouterr().out.splitlines()]
    assert run_cli(["check", "--seed", "6", "--corpus", "8"]) == 0
    second = [l.split("(")[0] for l in capsys.readouterr().out.splitlines()]
    assert first == second and all(l.startswith("PASS") for l in first)


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "posmach", "eval", "-"], input="x",
                       capture_output=True, text=True)
    assert p.returncode == 0 and "normal in 0 steps" in p.stdout
