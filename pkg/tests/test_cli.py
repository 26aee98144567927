from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from spectral_struct import parse_edge_list
from spectral_struct.cli import EXIT_HYPOTHESIS, EXIT_OK, EXIT_PARSE, EXIT_VERIFY, main, verify_graph
from spectral_struct.generators import fixture
from spectral_struct.graph import to_edge_list
from spectral_struct.report import Report, build_report

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["analyze", DATA / "fig4.txt"], "fig4_analyze.txt"),
        (["analyze", DATA / "fig1.txt", "--text"], "fig1_analyze.txt"),
        (["analyze", DATA / "cycle4.txt"], "cycle4_analyze.txt"),
        (["spectrum", DATA / "fig3.txt", "--full"], "fig3_spectrum_full.txt"),
        (["spectrum", DATA / "fig4.txt"], "fig4_spectrum.txt"),
    ],
)
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / golden).read_text()


def test_spectrum_of_k5_from_stdin(capsys, monkeypatch):
    text = "".join(f"{u} {v}\n" for u in "abcde" for v in "abcde" if u < v)
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = run(capsys, "spectrum", "-")
    assert code == EXIT_OK and out.strip() == "0^(1) 5^(4)"


def test_analyze_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "fig4.txt", "--json")
    assert code == EXIT_OK
    rep = Report.from_json(out)
    assert rep == build_report(fixture("fig4"))
    assert rep.condensed_dict() == {1: 3, 3: 3, 4: 2}
    assert [f.uniquely_provided for f in rep.families if f.in_s_star] == [3]


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", DATA / "fig4.txt", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["integer_multiplicities"] == [[0, 1], [1, 3], [3, 3], [4, 2]]


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "loop.txt"
    bad.write_text("a b\nb b\n")
    code, _, err = run(capsys, "analyze", bad)
    assert code == EXIT_PARSE and "line 2" in err
    code, _, _ = run(capsys, "spectrum", tmp_path / "missing.txt")
    assert code == EXIT_PARSE


def test_hypothesis_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", DATA / "fig1.txt", "--require", "chordal")
    assert code == EXIT_HYPOTHESIS and err
    gem = tmp_path / "gem.txt"
    gem.write_text(to_edge_list(fixture("gem")))
    code, _, _ = run(capsys, "analyze", gem, "--require", "chordal")
    assert code == EXIT_OK
    code, _, _ = run(capsys, "analyze", gem, "--require", "strictly-chordal")
    assert code == EXIT_HYPOTHESIS
    split = tmp_path / "split.txt"
    split.write_text("a b\nc d\n")
    code, _, _ = run(capsys, "analyze", split)
    assert code == EXIT_HYPOTHESIS


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", DATA / "fig3.txt")
    assert code == EXIT_OK and "PASS" in out
    code, out, _ = run(capsys, "verify", "--random", 20, "--seed", 3, "--quiet")
    assert code == EXIT_OK and out.strip().endswith("20/20 passed")


def test_verify_reports_violations(capsys, monkeypatch):
    assert verify_graph(fixture("fig4")) == []
    assert verify_graph(fixture("gem")) == []
    monkeypatch.setattr("spectral_struct.cli.verify_graph", lambda g: ["lambda=3 claimed 2, exact 1"])
    code, out, _ = run(capsys, "verify", DATA / "fig4.txt")
    assert code == EXIT_VERIFY and "FAIL" in out and "0/1 passed" in out


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "strictly-chordal", "--seed", 5, "--n", 20)
    assert code == EXIT_OK
    g = parse_edge_list(out)
    assert g.n >= 2
    assert run(capsys, "gen", "strictly-chordal", "--seed", 5, "--n", 20)[1] == out
    code, out, _ = run(capsys, "gen", "k5")
    assert parse_edge_list(out).m == 10
    code, _, _ = run(capsys, "gen", "no-such-family")
    assert code == EXIT_PARSE


def test_bench_tiny(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", 50, 100, "--repeat", 1, "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert set(data["exponents"]) >= {"twin_partition", "structural_pipeline"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "spectral_struct", "spectrum", str(DATA / "star3.txt")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0^(1) 1^(2) 4^(1)"
