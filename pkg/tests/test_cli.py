"""Command-line front end: residue traces, analysis records, verification."""

import json

import pytest

from hhresidue.catalog import cycle, path
from hhresidue.cli import main
from hhresidue.graph6 import emit_graph6

P5_G6 = emit_graph6(path(5))
C5_G6 = emit_graph6(cycle(5))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- residue ---------------------------------------------------------------


def test_residue_worked_example(capsys):
    code, out, _ = run(capsys, "residue", "3,2,2,2,2,1")
    assert code == 0
    assert out.splitlines() == [
        "d^0: (3, 2, 2, 2, 2, 1)",
        "d^1: (2, 1, 1, 1, 1)",
        "d^2: (1, 1, 0, 0)",
        "d^3: (0, 0, 0)",
        "residue: 3",
    ]


def test_residue_all_zero_input(capsys):
    code, out, _ = run(capsys, "residue", "0,0")
    assert code == 0
    assert out.splitlines() == ["d^0: (0, 0)", "residue: 2"]


def test_residue_non_graphical_names_failing_step(capsys):
    code, out, _ = run(capsys, "residue", "3,3,1,1")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "d^0: (3, 3, 1, 1)"
    assert lines[1] == "d^1: (2, 0, 0)"
    assert "not graphical" in lines[-1]
    assert "d^1 = (2, 0, 0)" in lines[-1]


def test_residue_step_impossible(capsys):
    code, out, _ = run(capsys, "residue", "3,1")
    assert code == 1
    assert "largest term 3" in out


def test_residue_usage_errors(capsys):
    code, _, err = run(capsys, "residue", "3,two,1")
    assert code == 2
    assert "nonnegative integers" in err
    code, _, _ = run(capsys, "residue", "3,-1")
    assert code == 2


# --- analyze ---------------------------------------------------------------


def write_lines(tmp_path, lines):
    p = tmp_path / "in.g6"
    p.write_text("\n".join(lines) + "\n", encoding="ascii")
    return str(p)


def test_analyze_json_records(tmp_path, capsys):
    src = write_lines(tmp_path, ["A_", P5_G6, C5_G6])
    code, out, _ = run(capsys, "analyze", "--input", src)
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    k2, p5, c5 = records

    assert k2["graph6"] == "A_"
    assert (k2["residue"], k2["alpha"], k2["in_s"]) == (1, 1, True)

    assert p5["graph6"] == P5_G6
    assert p5["degree_sequence"] == [2, 2, 2, 1, 1]
    assert (p5["residue"], p5["alpha"]) == (2, 3)
    assert (p5["maxine_min"], p5["maxine_max"]) == (2, 3)
    assert p5["in_s"] is False
    assert p5["witness"].startswith("P5:")

    assert (c5["residue"], c5["alpha"], c5["in_s"]) == (2, 2, True)
    assert c5["witness"] is None

    for rec in records:
        assert rec["residue"] <= rec["maxine_min"] <= rec["maxine_max"] <= rec["alpha"]
        if rec["in_s"]:
            assert rec["residue"] == rec["alpha"]


def test_analyze_reports_parse_errors_and_continues(tmp_path, capsys):
    src = write_lines(tmp_path, ["A_", "!!bad!!", C5_G6])
    code, out, err = run(capsys, "analyze", "--input", src)
    assert code == 2
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 3
    assert "error" in records[1] and records[1]["line"] == 2
    assert records[2]["graph6"] == C5_G6
    assert "line 2" in err


def test_analyze_csv_format(tmp_path, capsys):
    src = write_lines(tmp_path, ["A_", P5_G6])
    code, out, _ = run(capsys, "analyze", "--input", src, "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("graph6,n,degree_sequence,residue,alpha,maxine_min")
    assert lines[1].split(",")[:5] == ["A_", "2", "1 1", "1", "1"]
    assert lines[2].split(",")[:5] == [P5_G6, "5", "2 2 2 1 1", "2", "3"]


def test_analyze_single_strategy(tmp_path, capsys):
    src = write_lines(tmp_path, [P5_G6])
    code, out, _ = run(capsys, "analyze", "--input", src, "--strategy", "first")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["maxine_min"] == rec["maxine_max"] == 3


def test_analyze_skips_out_of_scale_fields(tmp_path, capsys):
    big = emit_graph6(path(12))  # beyond the all-branches bound
    src = write_lines(tmp_path, [big])
    code, out, _ = run(capsys, "analyze", "--input", src)
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["maxine_min"] == "skipped: scale"
    assert rec["alpha"] == 6  # still within the exact-alpha bound


def test_analyze_output_deterministic(tmp_path, capsys):
    src = write_lines(tmp_path, ["A_", P5_G6, C5_G6])
    _, first, _ = run(capsys, "analyze", "--input", src)
    _, second, _ = run(capsys, "analyze", "--input", src)
    assert first == second


def test_analyze_out_file(tmp_path, capsys):
    src = write_lines(tmp_path, ["A_"])
    dest = tmp_path / "report.jsonl"
    code, out, _ = run(capsys, "analyze", "--input", src, "--out", str(dest))
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text().splitlines()[0])["graph6"] == "A_"


# --- verify ----------------------------------------------------------------


def test_verify_exits_zero_and_reports(capsys):
    code, out, _ = run(capsys, "verify", "forb-equivalence", "--max-n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["graphs_checked"] == 18
    assert payload["violations"] == []


def test_verify_unknown_theorem(capsys):
    code, _, _ = run(capsys, "verify", "no-such-theorem")
    assert code == 2


def test_verify_rejects_out_of_range_n(capsys):
    code, _, err = run(capsys, "verify", "forb-equivalence", "--max-n", "99")
    assert code == 2
    assert "error" in err


def test_verify_all_registered_theorems(capsys):
    for theorem in (
        "forb-equivalence",
        "minimal-forbidden",
        "residue-bounds",
        "r-equals-alpha-S",
        "lemma-c4-p5",
        "class-chain",
    ):
        n = "6" if theorem == "minimal-forbidden" else "4"
        code, out, _ = run(capsys, "verify", theorem, "--max-n", n)
        assert code == 0, theorem
        assert json.loads(out)["theorem_id"] == theorem


def test_usage_error_exit_code(capsys):
    assert main([]) == 2
    assert main(["analyze", "--format", "xml"]) == 2
