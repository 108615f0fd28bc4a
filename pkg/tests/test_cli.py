import json
import subprocess
import sys

import pytest

from bipolarsoft import parse
from bipolarsoft.cli import main

import corpus
import oracle


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys, fixtures_dir):
    code, out, err = run_cli(capsys, "validate", str(fixtures_dir / "house_example.bss.json"))
    assert code == 0
    assert out.strip() == "valid: m=8 n=5 complete=false"
    assert err == ""


def test_validate_overlap_names_parameter_and_witness(capsys, tmp_path):
    bad = tmp_path / "bad.bss.json"
    bad.write_text(json.dumps({
        "universe": ["u1", "u2"],
        "pairs": [{"pos": "e1", "neg": "e2"}],
        "assignments": [{"param": "e1", "positive": ["u1"], "negative": ["u1", "u2"]}],
    }))
    code, out, err = run_cli(capsys, "validate", str(bad))
    assert code == 1
    assert "DisjointnessViolation" in err
    assert "e1" in err and "u1" in err


def test_validate_malformed_document(capsys, tmp_path):
    bad = tmp_path / "broken.bss.json"
    bad.write_text("{not json")
    code, out, err = run_cli(capsys, "validate", str(bad))
    assert code == 2
    assert "ParseError" in err
    assert "line" in err


def test_validate_missing_file(capsys, tmp_path):
    code, out, err = run_cli(capsys, "validate", str(tmp_path / "absent.bss.json"))
    assert code == 2


def test_table_text_and_determinism(capsys, fixtures_dir):
    path = str(fixtures_dir / "houses_a.bss.json")
    code, out1, _ = run_cli(capsys, "table", path)
    assert code == 0
    assert out1.splitlines()[1].split() == ["u1", "(1,0)", "(0,1)", "(0,1)", "(0,0)"]
    code, out2, _ = run_cli(capsys, "table", path)
    assert out1 == out2


def test_table_csv_and_json(capsys, fixtures_dir):
    path = str(fixtures_dir / "houses_a.bss.json")
    code, out, _ = run_cli(capsys, "table", path, "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == 'u1,"1,0","0,1","0,1","0,0"'
    code, out, _ = run_cli(capsys, "table", path, "--format", "json")
    doc = json.loads(out)
    assert doc["cells"][0][0] == [1, 0]


def test_table_output_file(capsys, fixtures_dir, tmp_path):
    target = tmp_path / "table.txt"
    code, out, _ = run_cli(
        capsys, "table", str(fixtures_dir / "houses_a.bss.json"), "-o", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith(" ")


def test_op_union_matches_reference(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "op", "union",
        str(fixtures_dir / "houses_a.bss.json"),
        str(fixtures_dir / "houses_b.bss.json"),
    )
    assert code == 0
    assert oracle.member_view(parse(out)) == corpus.UNION_AB


def test_op_intersect_matches_reference(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "op", "intersect",
        str(fixtures_dir / "houses_a.bss.json"),
        str(fixtures_dir / "houses_b.bss.json"),
    )
    assert code == 0
    assert oracle.member_view(parse(out)) == corpus.INTERSECTION_AB


def test_op_complement(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "op", "complement", str(fixtures_dir / "houses_a.bss.json")
    )
    assert code == 0
    assert parse(out) == corpus.houses_a().complement()


def test_op_and_product_has_squared_parameters(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "op", "and",
        str(fixtures_dir / "houses3_a.bss.json"),
        str(fixtures_dir / "houses3_b.bss.json"),
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["pairs"]) == 9
    assert oracle.member_view(parse(out)) == corpus.AND_PRODUCT_CELLS


def test_op_or_product(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "op", "or",
        str(fixtures_dir / "houses3_a.bss.json"),
        str(fixtures_dir / "houses3_b.bss.json"),
    )
    assert code == 0
    assert oracle.member_view(parse(out)) == corpus.OR_PRODUCT_CELLS


def test_op_subset_true_false(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "op", "subset",
        str(fixtures_dir / "houses_c.bss.json"),
        str(fixtures_dir / "houses_a.bss.json"),
    )
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run_cli(
        capsys, "op", "subset",
        str(fixtures_dir / "houses_a.bss.json"),
        str(fixtures_dir / "houses_c.bss.json"),
    )
    assert (code, out.strip()) == (1, "false")


def test_op_equals(capsys, fixtures_dir):
    a = str(fixtures_dir / "houses_a.bss.json")
    b = str(fixtures_dir / "houses_b.bss.json")
    code, out, _ = run_cli(capsys, "op", "equals", a, a)
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run_cli(capsys, "op", "equals", a, b)
    assert (code, out.strip()) == (1, "false")


def test_op_wrong_operand_count(capsys, fixtures_dir):
    code, _, err = run_cli(capsys, "op", "union", str(fixtures_dir / "houses_a.bss.json"))
    assert code == 2
    assert "2 operand file(s)" in err


def test_op_space_mismatch(capsys, fixtures_dir):
    code, _, err = run_cli(
        capsys, "op", "union",
        str(fixtures_dir / "houses_a.bss.json"),
        str(fixtures_dir / "houses3_a.bss.json"),
    )
    assert code == 1
    assert "SpaceMismatch" in err


def test_op_output_is_byte_stable(capsys, fixtures_dir, tmp_path):
    args = (
        "op", "union",
        str(fixtures_dir / "houses_a.bss.json"),
        str(fixtures_dir / "houses_b.bss.json"),
    )
    first = tmp_path / "one.bss.json"
    second = tmp_path / "two.bss.json"
    assert main([*args, "-o", str(first)]) == 0
    assert main([*args, "-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_decide_text(capsys, fixtures_dir):
    code, out, _ = run_cli(capsys, "decide", str(fixtures_dir / "house_example.bss.json"))
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split() == ["u1", "3", "1", "2"]
    assert lines[-1] == "optimal: u1"


def test_decide_json(capsys, fixtures_dir):
    code, out, _ = run_cli(
        capsys, "decide", str(fixtures_dir / "house_example.bss.json"), "--format", "json"
    )
    doc = json.loads(out)
    rows = [(r["object"], r["c_plus"], r["c_minus"], r["score"]) for r in doc["rows"]]
    assert tuple(rows) == corpus.HOUSE_SCORE_ROWS
    assert doc["optimal"] == ["u1"]


def test_decide_all_neutral(capsys, tmp_path):
    blank = tmp_path / "blank.bss.json"
    blank.write_text(json.dumps({
        "universe": ["u1", "u2"],
        "pairs": [{"pos": "e1", "neg": "e2"}],
        "assignments": [],
    }))
    code, out, _ = run_cli(capsys, "decide", str(blank), "--format", "json")
    doc = json.loads(out)
    assert doc["max_score"] == 0
    assert doc["optimal"] == ["u1", "u2"]


def test_decide_complemented_fixture_is_argmin(capsys, fixtures_dir, tmp_path):
    flipped = tmp_path / "flipped.bss.json"
    code = main([
        "op", "complement", str(fixtures_dir / "house_example.bss.json"),
        "-o", str(flipped),
    ])
    assert code == 0
    code, out, _ = run_cli(capsys, "decide", str(flipped), "--format", "json")
    doc = json.loads(out)
    worst = min(r[3] for r in corpus.HOUSE_SCORE_ROWS)
    argmin = [u for u, _, _, s in corpus.HOUSE_SCORE_ROWS if s == worst]
    assert doc["optimal"] == argmin


def test_check_laws_single_law_exhaustive(capsys):
    code, out, _ = run_cli(
        capsys, "check-laws", "--law", "union-idempotent", "--exhaustive", "2", "2"
    )
    assert code == 0
    doc = json.loads(out)
    report = doc["laws"][0]
    assert report["law"] == "union-idempotent"
    assert report["instances_checked"] == 81
    assert report["holds"] is True
    assert doc["must_hold_failures"] == []


def test_check_laws_expected_failure_keeps_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "check-laws", "--law", "excluded-middle-unconditional",
        "--exhaustive", "2", "2",
    )
    assert code == 0
    report = json.loads(out)["laws"][0]
    assert report["holds"] is False
    assert report["must_hold"] is False
    assert report["counterexample"]["operands"]


def test_check_laws_random_only(capsys):
    code, out, _ = run_cli(
        capsys, "check-laws", "--law", "demorgan-union", "--random", "50", "--seed", "7"
    )
    assert code == 0
    report = json.loads(out)["laws"][0]
    assert report["instances_checked"] == 50


def test_check_laws_seeded_runs_are_identical(capsys, tmp_path):
    args = ["check-laws", "--law", "union-commutative", "--random", "30", "--seed", "11"]
    one = tmp_path / "one.json"
    two = tmp_path / "two.json"
    assert main([*args, "-o", str(one)]) == 0
    assert main([*args, "-o", str(two)]) == 0
    assert one.read_bytes() == two.read_bytes()


def test_check_laws_bounds_too_large(capsys):
    code, _, err = run_cli(capsys, "check-laws", "--exhaustive", "5", "5", "--random", "0")
    assert code == 2
    assert "BoundsTooLarge" in err


def test_check_laws_unknown_law(capsys):
    code, _, err = run_cli(capsys, "check-laws", "--law", "no-such-law")
    assert code == 2
    assert "UnknownLaw" in err


def test_usage_error_exits_two(fixtures_dir):
    with pytest.raises(SystemExit) as err:
        main(["op", "frobnicate", str(fixtures_dir / "houses_a.bss.json")])
    assert err.value.code == 2


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "bipolarsoft", "validate",
         str(fixtures_dir / "house_example.bss.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "valid: m=8 n=5 complete=false"
