import json
import os

import pytest

from partgap.cli import main

TABLE1_CSV = (
    "n,p,k2,k3,k4\n"
    "10,42,6,15,26\n"
    "20,627,2,102,2\n"
    "30,5604,21,228,957\n"
    "40,37338,89,1401,1078\n"
    "50,204226,78,1153,9745\n"
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pn(capsys):
    code, out, _ = run(capsys, "pn", "50")
    assert code == 0
    assert out == "204226\n"


def test_pn_zero(capsys):
    code, out, _ = run(capsys, "pn", "0")
    assert code == 0
    assert out == "1\n"


def test_pn_estimate(capsys):
    code, out, _ = run(capsys, "pn", "100", "--estimate")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "190569292"
    assert lines[1].startswith("estimate=")


def test_pn_export(capsys, tmp_path):
    target = tmp_path / "values.txt"
    code, out, _ = run(capsys, "pn", "30", "--export", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert len(lines) == 31
    assert lines[-1] == out.strip() == "5604"


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "30", "2")
    assert code == 0
    assert out == "21\n"


def test_delta_verbose(capsys):
    code, out, _ = run(capsys, "delta", "30", "2", "--verbose")
    assert code == 0
    assert out == "n=30 k=2 nearest_base=75 distance=21\n"


def test_table1_csv_golden(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    assert out == TABLE1_CSV


def test_table1_deterministic(capsys):
    _, first, _ = run(capsys, "table1")
    _, second, _ = run(capsys, "table1")
    assert first == second


def test_table1_json(capsys):
    code, out, _ = run(capsys, "table1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["rows"][0] == [10, 42, 6, 15, 26]


def test_table1_text(capsys):
    code, out, _ = run(capsys, "table1", "--format", "text")
    assert code == 0
    assert "204226" in out


def test_table1_check_passes(capsys):
    code, out, _ = run(capsys, "table1", "--check")
    assert code == 0
    assert "table1: OK" in out


def test_table2_shape_small(capsys):
    code, out, _ = run(capsys, "table2", "--n-max", "300")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d,k2,k3,k4,k5,k6,k7,k8,k50,k100"
    assert len(lines) == 17
    assert lines[1].startswith("0,")
    assert lines[-1].startswith("1" + "0" * 70 + ",")


def test_table2_deterministic(capsys):
    _, first, _ = run(capsys, "table2", "--n-max", "300")
    _, second, _ = run(capsys, "table2", "--n-max", "300")
    assert first == second


def test_check_fault_injection(capsys):
    # a short table cannot reproduce the published grid
    code, out, _ = run(capsys, "table2", "--check", "--n-max", "200")
    assert code == 1
    assert "MISMATCH" in out
    assert "FAILED" in out


def test_table3_shape_small(capsys):
    code, out, _ = run(capsys, "table3", "--n-max", "300")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[1] == "0,1,1,1,1,1,1,1,1,1"


def test_table4_small(capsys):
    code, out, _ = run(capsys, "table4", "--n-max", "300", "--d-max", "100")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d_lo,d_hi,n_d"
    assert lines[1].startswith("0,")
    spans = [ln.split(",") for ln in lines[1:]]
    total = sum(int(hi) - int(lo) + 1 for lo, hi, _ in spans)
    assert total == 101


def test_figure_data_text(capsys):
    code, out, _ = run(
        capsys, "figure-data", "--n-max", "300", "--k", "2,50", "--d-exp", "0..3"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("k=2: (0,")
    assert lines[1].startswith("k=50: (0,")


def test_figure_data_csv(capsys):
    code, out, _ = run(
        capsys,
        "figure-data",
        "--n-max",
        "300",
        "--k",
        "2,50",
        "--d-exp",
        "0..3",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i,k2,k50"
    assert len(lines) == 5


def test_figure_data_json(capsys):
    code, out, _ = run(
        capsys,
        "figure-data",
        "--n-max",
        "300",
        "--k",
        "3",
        "--d-exp",
        "0,2",
        "--format",
        "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["d_exponents"] == [0, 2]
    assert "3" in obj["series"]


def test_figure_data_check_needs_default_grid(capsys):
    code, _, err = run(
        capsys, "figure-data", "--check", "--k", "2", "--d-exp", "0..5"
    )
    assert code == 2
    assert "0..70" in err


def test_s_check_covered_range(capsys):
    code, out, _ = run(capsys, "s-check", "--range", "3", "15")
    assert code == 0
    assert "covered 13/13" in out


def test_s_check_uncovered(capsys):
    code, out, _ = run(capsys, "s-check", "16")
    assert code == 1
    assert "n=16 uncovered" in out


def test_s_check_argument_exclusivity(capsys):
    code, _, err = run(capsys, "s-check")
    assert code == 2
    code, _, err = run(capsys, "s-check", "5", "--range", "3", "9")
    assert code == 2


def test_missed(capsys):
    code, out, _ = run(capsys, "missed", "--bound", "176")
    assert code == 0
    assert out.split() == "1 2 37 64 121 136 139 156 165 166".split()


def test_verify_bs_bundled(capsys):
    code, out, _ = run(capsys, "verify-bs")
    assert code == 0
    assert "all clear" in out
    assert out.count("not a partition number") == 6


def test_verify_bs_custom_list(capsys, tmp_path):
    path = tmp_path / "list.txt"
    path.write_text("# one entry\n2 1 3 3\n")
    code, out, _ = run(capsys, "verify-bs", "--bs-list", str(path))
    assert code == 0
    assert out.count("not a partition number") == 1


def test_verify_bs_malformed_list(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 1 3\n")
    code, _, err = run(capsys, "verify-bs", "--bs-list", str(path))
    assert code == 2
    assert "line 1" in err


def test_verify_bs_missing_file(capsys):
    code, _, err = run(capsys, "verify-bs", "--bs-list", "/no/such/file")
    assert code == 2
    assert err.startswith("error:")


def test_sun_scan(capsys):
    code, out, _ = run(capsys, "sun-scan", "--n-max", "500")
    assert code == 0
    assert "no perfect powers" in out


def test_fit_json(capsys):
    code, out, _ = run(
        capsys,
        "fit",
        "--k",
        "2",
        "--degree",
        "2",
        "--n-max",
        "300",
        "--d-exp",
        "0..8",
        "--eval",
        "10^4",
        "--format",
        "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["degree"] == 2
    assert len(obj["coefficients"]) == 3
    assert obj["window_exponent"] == 8
    assert obj["evaluations"][0][0] == 10**4


def test_fit_text_deterministic(capsys):
    args = ("fit", "--k", "2", "--degree", "1", "--n-max", "300", "--d-exp", "0..5")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert first.splitlines()[0].startswith("k=2 degree=1 window_exponent=5")


def test_cache_created_and_reused(capsys, tmp_path):
    cache = tmp_path / "cache"
    code, out, _ = run(capsys, "pn", "300", "--cache", str(cache))
    assert code == 0
    files = os.listdir(cache)
    assert files == ["ptable_300.txt"]
    stamp = (cache / "ptable_300.txt").stat().st_mtime_ns
    code, out, _ = run(capsys, "pn", "100", "--cache", str(cache))
    assert code == 0
    assert out == "190569292\n"
    assert os.listdir(cache) == ["ptable_300.txt"]
    assert (cache / "ptable_300.txt").stat().st_mtime_ns == stamp


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("PARTGAP_CACHE_DIR", str(tmp_path))
    code, out, _ = run(capsys, "pn", "40")
    assert code == 0
    assert out == "37338\n"
    assert os.listdir(tmp_path) == ["ptable_40.txt"]


def test_cache_flag_beats_env(capsys, tmp_path, monkeypatch):
    env_dir = tmp_path / "env"
    flag_dir = tmp_path / "flag"
    monkeypatch.setenv("PARTGAP_CACHE_DIR", str(env_dir))
    code, _, _ = run(capsys, "pn", "40", "--cache", str(flag_dir))
    assert code == 0
    assert not env_dir.exists()
    assert os.listdir(flag_dir) == ["ptable_40.txt"]


def test_cache_corrupt_file(capsys, tmp_path):
    (tmp_path / "ptable_500.txt").write_text("500\n1\n1\nbogus\n")
    code, _, err = run(capsys, "pn", "400", "--cache", str(tmp_path))
    assert code == 2
    assert err.startswith("error:")


def test_usage_errors(capsys):
    assert run(capsys, "unknown-command")[0] == 2
    assert run(capsys, "pn")[0] == 2
    assert run(capsys, "pn", "notanint")[0] == 2
    assert run(capsys, "delta", "5", "1")[0] == 2
    assert run(capsys, "table2", "--n-max", "0")[0] == 2
    assert run(capsys, "figure-data", "--k", "2,x")[0] == 2
    assert run(capsys, "figure-data", "--d-exp", "9..2")[0] == 2
    assert run(capsys, "fit", "--degree", "0", "--n-max", "300")[0] == 2
    assert run(capsys, "missed")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "pn", "--help")[0] == 0
