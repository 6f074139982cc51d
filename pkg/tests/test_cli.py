import csv
import json
import subprocess
import sys

import pytest

from enhanced_brauer.cli import ALL_CHECKS, main


def run(tmp_path, *args, name="out.json"):
    out = tmp_path / name
    code = main(["--out", str(out), "--quiet", *args])
    return code, json.loads(out.read_text())


def test_single_scenario_passes(tmp_path):
    code, doc = run(tmp_path, "--form", "orthogonal", "--n", "4", "--r", "2", "--checks", "dims,brauer,levi")
    assert code == 0 and doc["passed"]
    assert [r["check"] for r in doc["reports"]] == ["dims", "brauer", "levi"]
    assert all(r["elapsed_ms"] is None for r in doc["reports"])


def test_failing_check_gives_exit_one_and_still_writes(tmp_path):
    code, doc = run(tmp_path, "--form", "symplectic", "--n", "6", "--r", "2", "--checks", "parabolic")
    assert code == 1 and doc["failed"] == 1
    assert doc["reports"][0]["passed"] is False


def test_checks_run_in_fixed_order(tmp_path):
    _, doc = run(tmp_path, "--form", "orthogonal", "--n", "4", "--r", "2", "--checks", "levi,dims")
    assert [r["check"] for r in doc["reports"]] == ["dims", "levi"]


def test_subset_matches_full_run(tmp_path):
    _, full = run(tmp_path, "--suite", "default", name="full.json")
    _, part = run(tmp_path, "--suite", "default", "--checks", "restricted,annihilation", name="part.json")
    index = {(r["check"], r["scenario"]): r for r in full["reports"]}
    assert part["reports"]
    for r in part["reports"]:
        assert r == index[(r["check"], r["scenario"])]


def test_timings_flag(tmp_path):
    _, doc = run(tmp_path, "--form", "orthogonal", "--n", "4", "--r", "2", "--checks", "dims", "--timings")
    assert doc["reports"][0]["elapsed_ms"] is not None


def test_degree_three_enhanced_commutant_needs_stress(tmp_path):
    code, doc = run(tmp_path, "--form", "orthogonal", "--n", "6", "--r", "3", "--checks", "levi")
    assert code == 0
    assert doc["reports"][0]["passed"] is None
    assert "--stress" in doc["reports"][0]["notes"][0]


def test_csv_export(tmp_path):
    path = tmp_path / "dims.csv"
    main(["--out", str(tmp_path / "o.json"), "--quiet", "--form", "symplectic", "--n", "6", "--r", "2",
          "--checks", "dims", "--csv", str(path)])
    rows = list(csv.DictReader(path.open()))
    assert [r["dim"] for r in rows] == ["1", "4", "3", "8"]
    assert all(r["match"] == "True" for r in rows)


@pytest.mark.parametrize("args", [
    ["--form", "symplectic", "--n", "5", "--r", "2"],
    ["--form", "orthogonal", "--n", "4"],
    ["--checks", "dims,bogus"],
    ["--suite", "default", "--form", "orthogonal", "--n", "4", "--r", "2"],
    ["--form", "orthogonal", "--n", "0", "--r", "2"],
])
def test_usage_errors_exit_two(args, capsys):
    with pytest.raises(SystemExit) as e:
        main(args)
    assert e.value.code == 2


def test_all_checks_listed():
    assert set(ALL_CHECKS) == {"dims", "brauer", "identities", "mulformula", "sanity-gl", "restricted", "levi",
                               "parabolic", "filtration", "annihilation"}


def test_module_entry_point(tmp_path):
    out = tmp_path / "m.json"
    proc = subprocess.run([sys.executable, "-m", "enhanced_brauer", "--form", "orthogonal", "--n", "4", "--r", "1",
                           "--checks", "dims", "--out", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[PASS] dims O(4), r=1" in proc.stderr
    assert json.loads(out.read_text())["passed"]
