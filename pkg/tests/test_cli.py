import json

import pytest

from lrcav import cli
from lrcav.constructions import CompositeCode, LinearCode


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "24", "--k", "12",
                       "--r", "3", "--t", "2")
    assert code == 0
    assert "wang_rawat" in out and " 9" in out
    assert "shortening_singleton" in out and " 8" in out
    assert "tbf" in out and "yaakobi" in out and "rate_cap_k" in out


def test_bounds_rejects_bad_t(capsys):
    code, _, err = run(capsys, "bounds", "--n", "10", "--k", "5",
                       "--r", "2", "--t", "0")
    assert code == 2 and "error" in err


def test_curves_csv(tmp_path, capsys):
    out_path = tmp_path / "curves.csv"
    code, out, _ = run(capsys, "curves", "--r", "6", "--t", "3",
                       "--grid", "50", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "delta,upper_new,upper_tbf,lower_expander,lower_concat,rate_cap"
    assert len(lines) == 51
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert "crossover" in out


def test_construct_wzl_roundtrip(tmp_path, capsys):
    path = tmp_path / "wzl.json"
    code, out, _ = run(capsys, "construct", "wzl", "--r", "3", "--t", "2",
                       "--out", str(path))
    assert code == 0 and "n=10 k=6" in out
    doc, loaded = cli.load_artifact(str(path))
    assert doc["format_version"] == "1"
    assert isinstance(loaded, LinearCode)
    assert (loaded.n, loaded.k) == (10, 6)


def test_construct_concat_with_target_distance(tmp_path, capsys):
    path = tmp_path / "concat.json"
    code, out, _ = run(capsys, "construct", "concat", "--r", "3", "--t", "2",
                       "--blocks", "3", "--d", "15", "--out", str(path))
    assert code == 0 and "k=9" in out
    doc, loaded = cli.load_artifact(str(path))
    assert isinstance(loaded, CompositeCode)
    assert (loaded.n, loaded.k) == (30, 9)
    assert doc["params"]["n_I"] == 10 and doc["params"]["k_I"] == 6


def test_construct_concat_needs_k_or_d(capsys, tmp_path):
    code, _, err = run(capsys, "construct", "concat", "--r", "3", "--t", "2",
                       "--blocks", "3", "--out", str(tmp_path / "x.json"))
    assert code == 2 and "error" in err


def test_construct_expander_roundtrip(tmp_path, capsys):
    path = tmp_path / "exp.json"
    code, out, _ = run(capsys, "construct", "expander", "--n", "14",
                       "--r", "6", "--t", "3", "--w", "4", "--k", "4",
                       "--min-girth", "4", "--seed", "7", "--out", str(path))
    assert code == 0
    doc, loaded = cli.load_artifact(str(path))
    assert isinstance(loaded, CompositeCode)
    assert loaded.n == 14 and loaded.k == 4


def test_construct_expander_too_dense_for_girth6(tmp_path, capsys):
    code, _, err = run(capsys, "construct", "expander", "--n", "14",
                       "--r", "6", "--t", "3", "--w", "4", "--seed", "7",
                       "--out", str(tmp_path / "x.json"))
    assert code == 2 and "error" in err


def test_verify_wzl_distance_and_availability(tmp_path, capsys):
    path = tmp_path / "wzl.json"
    run(capsys, "construct", "wzl", "--r", "2", "--t", "2", "--out", str(path))
    code, out, _ = run(capsys, "verify", "--code", str(path),
                       "--distance", "--availability")
    assert code == 0
    report = json.loads(out)
    assert report["distance"] == 3
    assert report["availability"]["pass"] is True
    assert len(report["availability"]["witness_sets"]) == 6


def test_verify_erasures_composite(tmp_path, capsys):
    path = tmp_path / "concat.json"
    run(capsys, "construct", "concat", "--r", "3", "--t", "2",
        "--blocks", "3", "--k", "9", "--out", str(path))
    code, out, _ = run(capsys, "verify", "--code", str(path),
                       "--erasures", "14", "--trials", "50", "--seed", "1")
    assert code == 0
    report = json.loads(out)
    assert report["erasures"]["successes"] == 50
    assert report["erasures"]["adversarial_success"] is True


def test_verify_erasures_requires_seed(tmp_path, capsys):
    path = tmp_path / "wzl.json"
    run(capsys, "construct", "wzl", "--r", "2", "--t", "2", "--out", str(path))
    code, _, err = run(capsys, "verify", "--code", str(path), "--erasures", "2")
    assert code == 2 and "error" in err


def test_verify_erasures_failure_exit(tmp_path, capsys):
    # erasing more than d-1 coordinates of the WZL(2,2) code must fail
    path = tmp_path / "wzl.json"
    run(capsys, "construct", "wzl", "--r", "2", "--t", "2", "--out", str(path))
    code, out, _ = run(capsys, "verify", "--code", str(path),
                       "--erasures", "4", "--trials", "50", "--seed", "2")
    assert code == 1
    report = json.loads(out)
    assert report["erasures"]["successes"] < 50


def test_verify_truncated_artifact(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"format_version": "1", "kind":')
    code, _, err = run(capsys, "verify", "--code", str(path), "--distance")
    assert code == 2 and "error" in err


def test_verify_unknown_kind(tmp_path, capsys):
    path = tmp_path / "weird.json"
    path.write_text(json.dumps({"format_version": "1", "kind": "mystery",
                                "field": {"w": 1}}))
    code, _, err = run(capsys, "verify", "--code", str(path), "--distance")
    assert code == 2 and "error" in err


def test_verify_wrong_format_version(tmp_path, capsys):
    path = tmp_path / "old.json"
    path.write_text(json.dumps({"format_version": "0", "kind": "wzl"}))
    code, _, err = run(capsys, "verify", "--code", str(path), "--distance")
    assert code == 2 and "error" in err


def test_shorten_reports_sets_and_bounds(tmp_path, capsys):
    path = tmp_path / "wzl.json"
    run(capsys, "construct", "wzl", "--r", "2", "--t", "2", "--out", str(path))
    code, out, _ = run(capsys, "shorten", "--code", str(path),
                       "--r", "2", "--s", "2")
    assert code == 0
    report = json.loads(out)
    assert len(report["I"]) <= 1 + (2 - 1) * 2
    assert len(report["Cl_I"]) >= min(1 + 2 * 2, 6)
    assert report["bounds"]["d_upper"] is not None
    for row in report["per_s"]:
        assert row["size_I"] <= row["k_bound_cap"]
        assert row["size_Cl"] >= min(row["cl_floor"], 6)


def test_no_command_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
