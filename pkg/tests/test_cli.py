"""Command line behavior, exercised in process through main()."""

import io
import json

import pytest

from ghderiv.cli import main
from ghderiv.algebra import algebra_from_doc, upper_triangular
from ghderiv.linmap import (
    map_to_doc,
    right_mul_map,
    tn_jordan_family,
    triple_from_doc,
    triple_to_doc,
)
from ghderiv.identities import IdentityKind, check


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def test_solve_triangular_two_sided(capsys):
    doc = run_json(capsys, "solve", "--algebra", "tn", "--n", "2",
                   "--kind", "jordan-left-gh")
    assert doc["dim"] == 5
    assert doc["kind"] == "jordan-left-gh"
    assert doc["ring"] == {"kind": "Q"}
    assert doc["constraints"] == "none"
    assert len(doc["basis"]) == 5
    assert len(doc["canonical"]) == 5
    assert all(len(row) == 27 for row in doc["canonical"])


def test_solve_quaternions(capsys):
    doc = run_json(capsys, "solve", "--algebra", "quat",
                   "--kind", "jordan-left-gh")
    assert doc["dim"] == 4


def test_solve_full_matrix_one_sided_is_zero(capsys):
    doc = run_json(capsys, "solve", "--algebra", "mn", "--n", "2",
                   "--kind", "left-gh")
    assert doc["dim"] == 0
    assert doc["basis"] == []


def test_solve_with_constraints(capsys):
    doc = run_json(capsys, "solve", "--algebra", "mn", "--n", "3",
                   "--kind", "left-gh", "--g-eq-h")
    assert doc["dim"] == 0
    assert doc["constraints"] == "g = h"
    # The one-sided solutions on T2 already kill f off the e11 column, so
    # pinning f on e12 changes nothing but is recorded in the output.
    doc = run_json(capsys, "solve", "--algebra", "tn", "--n", "2",
                   "--kind", "left-gh", "--f-zero-on", "1")
    assert doc["dim"] == 4
    assert doc["constraints"] == "f zero on basis [1]"


def test_solve_emit_system(capsys):
    doc = run_json(capsys, "solve", "--algebra", "tn", "--n", "2",
                   "--kind", "left-gh", "--emit-system")
    assert doc["system"]["ncols"] == 27
    assert doc["system"]["kind"] == "left-gh"
    assert len(doc["system"]["rows"]) == 54


def test_solve_over_prime_modulus(capsys):
    doc = run_json(capsys, "solve", "--algebra", "tn", "--n", "3",
                   "--kind", "left-gh", "--ring", "z5")
    assert doc["dim"] == 6
    assert doc["ring"] == {"kind": "Zmod", "m": 5}


def test_solve_composite_modulus_exits_2(capsys):
    code, out, err = run(capsys, "solve", "--algebra", "tn", "--n", "2",
                         "--kind", "left-gh", "--ring", "z4")
    assert code == 2
    assert "prime modulus" in err


@pytest.mark.parametrize("argv,fragment", [
    (("solve", "--algebra", "tn", "--kind", "left-gh"), "--n"),
    (("solve", "--algebra", "tn", "--n", "2", "--kind", "biderivation"),
     "identity kind"),
    (("solve", "--algebra", "widget", "--kind", "left-gh"), "widget"),
    (("solve", "--algebra", "tn", "--n", "2", "--kind", "left-gh",
      "--f-zero-on", "1,x"), "--f-zero-on"),
    (("solve", "--algebra", "tn", "--n", "2", "--kind", "left-gh",
      "--f-zero-on", "9"), "out of range"),
    (("solve", "--algebra", "tn", "--n", "2", "--kind", "left-gh",
      "--ring", "z0"), "modulus"),
    (("solve", "--algebra", "quat", "--kind", "left-gh", "--ring", "z5"),
     "over Q only"),
])
def test_solve_input_errors(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert fragment in err


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def test_check_triple_document(capsys, tmp_path):
    t = tn_jordan_family(2, [1, 2, 3], [4, 5])
    path = tmp_path / "triple.json"
    path.write_text(json.dumps(triple_to_doc(t)))
    doc = run_json(capsys, "check", "--kind", "jordan-left-gh",
                   "--triple", str(path))
    assert doc == {"holds": True}
    # The same triple fails the one-sided identity; exit stays 0 because the
    # check itself succeeded.
    doc = run_json(capsys, "check", "--kind", "left-gh", "--triple", str(path))
    assert doc["holds"] is False
    assert doc["counterexample"]["i"] == 0
    assert doc["counterexample"]["j"] == 1
    assert doc["counterexample"]["lhs"] == ["0", "6", "0"]
    assert doc["counterexample"]["rhs"] == ["0", "3", "0"]


def test_check_map_document(capsys, tmp_path):
    t2 = upper_triangular(2)
    m = right_mul_map(t2.element([2, 0, 2]))  # right mult by a central element
    path = tmp_path / "map.json"
    path.write_text(json.dumps(map_to_doc(m)))
    doc = run_json(capsys, "check", "--kind", "right-centralizer",
                   "--map", str(path))
    assert doc == {"holds": True}


def test_check_triple_by_spec_reference_and_stdin(capsys, monkeypatch):
    t = tn_jordan_family(2, [0, 1, 0], [0, 0])
    doc = triple_to_doc(t, inline_algebra=False)
    doc["algebra"] = "tn2"
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    out = run_json(capsys, "check", "--kind", "jordan-left-gh", "--triple", "-")
    assert out == {"holds": True}


def test_check_argument_validation(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps(map_to_doc(right_mul_map(
        upper_triangular(2).one()))))
    code, _, err = run(capsys, "check", "--kind", "left-gh")
    assert code == 1 and "exactly one" in err
    code, _, err = run(capsys, "check", "--kind", "left-gh",
                       "--triple", str(path), "--map", str(path))
    assert code == 1 and "exactly one" in err
    # A map document is not a triple document.
    code, _, err = run(capsys, "check", "--kind", "left-gh",
                       "--triple", str(path))
    assert code == 1 and "bad triple document" in err


def test_check_unreadable_input(capsys, tmp_path):
    code, _, err = run(capsys, "check", "--kind", "left-gh",
                       "--map", str(tmp_path / "missing.json"))
    assert code == 1 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", "--kind", "left-gh", "--map", str(bad))
    assert code == 1 and "not valid JSON" in err


# ---------------------------------------------------------------------------
# catalog and verify-paper
# ---------------------------------------------------------------------------


def test_catalog_listing(capsys):
    code, out, err = run(capsys, "catalog")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 52
    assert lines == sorted(lines)
    assert any("case-z4-doubling" in ln for ln in lines)
    assert all("[" in ln and "]" in ln for ln in lines)


def test_catalog_json(capsys):
    doc = run_json(capsys, "catalog", "--json")
    assert len(doc["entries"]) == 52
    ids = [e["id"] for e in doc["entries"]]
    assert "dim-tri-jordan-4" in ids
    assert all(set(e) == {"id", "title", "claim", "origin"}
               for e in doc["entries"])


def test_verify_filtered_entry(capsys):
    code, out, err = run(capsys, "verify-paper", "--filter", "case-z4")
    assert code == 0
    assert "[PASS] case-z4-doubling" in out
    assert "passed 1, failed 0, notes 0" in out


def test_verify_note_entry_does_not_fail(capsys):
    code, out, err = run(capsys, "verify-paper", "--filter", "note-doubled")
    assert code == 0
    assert "[NOTE]" in out
    assert "passed 0, failed 0, notes 1" in out


def test_verify_unknown_filter(capsys):
    code, out, err = run(capsys, "verify-paper", "--filter", "no-such-id")
    assert code == 1
    assert "no catalog entry matches" in err


def test_verify_json_output(capsys):
    doc = run_json(capsys, "verify-paper", "--filter", "modfive", "--json")
    assert doc["ok"] is True
    assert doc["counts"] == {"pass": 3}


def test_verify_writes_report_files(capsys, tmp_path):
    out_dir = tmp_path / "rep"
    code, out, err = run(capsys, "verify-paper", "--filter", "decompose",
                         "--out", str(out_dir))
    assert code == 0
    report = json.loads((out_dir / "report.json").read_text())
    assert report["ok"] is True
    assert len(report["entries"]) == 3
    table = (out_dir / "traceability.md").read_text()
    assert table.startswith("| entry |")
    assert "decompose-zero" in table
    assert "wrote" in out


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def test_export_algebra_round_trips(capsys, tmp_path):
    code, out, err = run(capsys, "export", "--algebra", "tn", "--n", "3",
                         "--out", str(tmp_path))
    assert code == 0
    path = tmp_path / "algebra-tn3-q.json"
    assert str(path) in out
    loaded = algebra_from_doc(json.loads(path.read_text()))
    assert loaded == upper_triangular(3)


def test_export_cases_round_trip(capsys, tmp_path):
    code, out, err = run(capsys, "export", "--cases", "--out", str(tmp_path))
    assert code == 0
    files = sorted(p.name for p in tmp_path.glob("*.json"))
    assert len(files) == 10
    assert "case-quat-doubling.json" in files
    # An exported case replays to the same verdicts it was recorded with.
    doc = json.loads((tmp_path / "case-quat-doubling.json").read_text())
    t = triple_from_doc(doc)
    assert check(IdentityKind.JORDAN_LEFT_GH, t).holds
    assert not check(IdentityKind.LEFT_GH, t).holds


def test_export_requires_a_target(capsys):
    code, out, err = run(capsys, "export")
    assert code == 1
    assert "--algebra or --cases" in err


# ---------------------------------------------------------------------------
# config file
# ---------------------------------------------------------------------------


def test_config_json_sets_ring_default(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"ring": "z5"}))
    doc = run_json(capsys, "--config", str(cfg), "solve", "--algebra", "tn",
                   "--n", "2", "--kind", "jordan-left-gh")
    assert doc["ring"] == {"kind": "Zmod", "m": 5}
    # An explicit flag wins over the config default.
    doc = run_json(capsys, "--config", str(cfg), "solve", "--algebra", "tn",
                   "--n", "2", "--kind", "jordan-left-gh", "--ring", "q")
    assert doc["ring"] == {"kind": "Q"}


def test_config_toml(capsys, tmp_path):
    cfg = tmp_path / "cfg.toml"
    cfg.write_text('ring = "z7"\n')
    doc = run_json(capsys, "--config", str(cfg), "solve", "--algebra", "tn",
                   "--n", "2", "--kind", "jordan-left-gh")
    assert doc["ring"] == {"kind": "Zmod", "m": 7}
    assert doc["dim"] == 5


def test_config_out_dir_default(capsys, tmp_path):
    target = tmp_path / "exports"
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"out_dir": str(target)}))
    code, out, err = run(capsys, "--config", str(cfg), "export", "--cases")
    assert code == 0
    assert len(list(target.glob("case-*.json"))) == 10


def test_config_errors(capsys, tmp_path):
    code, _, err = run(capsys, "--config", str(tmp_path / "none.json"),
                       "catalog")
    assert code == 1 and "cannot read config" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{{{")
    code, _, err = run(capsys, "--config", str(bad), "catalog")
    assert code == 1 and "cannot parse config" in err


# ---------------------------------------------------------------------------
# argparse plumbing
# ---------------------------------------------------------------------------


def test_no_subcommand_is_an_error(capsys):
    assert main([]) == 1


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "solve" in out and "verify-paper" in out
