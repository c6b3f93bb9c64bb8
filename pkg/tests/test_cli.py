import json
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import validate

from conftest import subprocess_env

from snpd.cli import main

CLI_SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "schemas" / "cli.schema.json").read_text()
)


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *args):
    code, out = run_cli(capsys, *args, "--format", "json")
    payload = json.loads(out)
    validate(payload, CLI_SCHEMA)
    return code, payload


def test_degrees_s7(capsys):
    code, out = run_cli(capsys, "degrees", "S", "7")
    assert code == 0
    assert "cd(S_7) = {1, 6, 14, 15, 20, 21, 35}" in out
    assert "(4,1,1,1)" in out and "2^2*5" in out


def test_degrees_a5(capsys):
    code, out = run_cli(capsys, "degrees", "A", "5")
    assert code == 0
    assert "cd(A_5) = {1, 3, 4, 5}" in out
    assert "splits" in out  # the hook shape splits on restriction


def test_degrees_s1(capsys):
    code, out = run_cli(capsys, "degrees", "S", "1")
    assert code == 0
    assert "cd(S_1) = {1}" in out


def test_degrees_a2(capsys):
    code, out = run_cli(capsys, "degrees", "A", "2")
    assert code == 0
    assert "cd(A_2) = {1}" in out


def test_out_flag_unwritable_path(tmp_path, capsys):
    bad = tmp_path / "missing" / "deep" / "report.txt"
    assert main(["snpd", "A_7", "--out", str(bad)]) == 2
    capsys.readouterr()


def test_degrees_out_of_range(capsys):
    assert main(["degrees", "S", "0"]) == 2
    assert main(["degrees", "A", "1"]) == 2
    assert main(["degrees", "S", "61"]) == 2  # default cap is 60
    assert main(["degrees", "S", "12", "--cap", "10"]) == 2
    assert main(["degrees", "S", "12", "--cap", "12"]) == 0
    capsys.readouterr()


def test_degrees_large_n_prints_factored_by_default(capsys):
    code, out = run_cli(capsys, "degrees", "S", "25")
    assert code == 0
    assert " = " not in out.split("\n")[1]  # no decimal column without --decimal
    code, out = run_cli(capsys, "degrees", "S", "25", "--decimal")
    assert "24 = " in out.replace("\n", " ")


def test_degrees_json(capsys):
    code, payload = run_json(capsys, "degrees", "S", "7")
    assert code == 0
    assert payload["cd"][-1] == {"value": "35", "factorization": "5*7"}
    assert len(payload["entries"]) == 15


def test_degrees_a_json_counts(capsys):
    code, payload = run_json(capsys, "degrees", "A", "7")
    assert code == 0
    split = [e for e in payload["entries"] if e["kind"] == "splits"]
    assert split == [
        {
            "partition": "(4,1,1,1)",
            "kind": "splits",
            "count": 2,
            "degree": "10",
            "factorization": "2*5",
        }
    ]


def test_snpd_group(capsys):
    code, out = run_cli(capsys, "snpd", "A_7")
    assert code == 0
    assert "SNPD: yes, common omega = 2" in out
    assert "rho = {2, 3, 5, 7}" in out
    assert "sigma = 2" in out


def test_snpd_degree_list(capsys):
    code, out = run_cli(capsys, "snpd", "1,11,55")
    assert code == 0
    assert "witness (11, 55)" in out


def test_snpd_single_one(capsys):
    code, out = run_cli(capsys, "snpd", "1")
    assert code == 0
    assert "vacuously" in out


def test_snpd_sporadic_pair_and_unicode_alias(capsys):
    code, out = run_cli(capsys, "snpd", "M_11")
    assert code == 0
    assert "witness (11, 55)" in out
    code, out = run_cli(capsys, "snpd", "²F₄(2)′")
    assert code == 0
    assert "witness (300, 675)" in out


def test_snpd_json(capsys):
    code, payload = run_json(capsys, "snpd", "L_2(8)")
    assert code == 0
    assert payload["is_snpd"] is True
    assert payload["common_omega"] == 1
    assert payload["rho"] == [2, 3, 7]
    assert payload["sigma"] == 1


def test_snpd_bad_inputs(capsys):
    assert main(["snpd", "Foo"]) == 2
    assert main(["snpd", "0,3"]) == 2
    capsys.readouterr()


def test_search_range(capsys):
    code, out = run_cli(capsys, "search", "8", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert [line.split()[1].rstrip(":") for line in lines] == [
        "branch=even",
        "branch=four_divides_nm1",
        "branch=even",
        "branch=div3_nm2",
        "branch=even",
    ]


def test_search_single_values(capsys):
    code, out = run_cli(capsys, "search", "9", "9")
    assert code == 0
    assert "8=2^3 (omega=1) < 28=2^2*7 (omega=2)" in out
    code, out = run_cli(capsys, "search", "19", "19")
    assert "(omega=2) < " in out and "(omega=4)" in out


def test_search_large_n_factored_form(capsys):
    code, out = run_cli(capsys, "search", "1001", "1001")
    assert code == 0
    assert "1001=" not in out  # factored only above the decimal threshold
    assert "2^3*5^3" in out  # 1000 = 2^3 * 5^3
    code, out = run_cli(capsys, "search", "1001", "1001", "--decimal")
    assert "1000=2^3*5^3" in out


def test_search_json(capsys):
    code, payload = run_json(capsys, "search", "8", "12")
    assert code == 0
    assert payload["passed"] is True
    assert [case["n"] for case in payload["cases"]] == [8, 9, 10, 11, 12]


def test_search_bad_range(capsys):
    assert main(["search", "7", "9"]) == 2
    assert main(["search", "12", "9"]) == 2
    capsys.readouterr()


def test_verify_single_suites(capsys):
    for suite in ("sporadic", "covers", "corollary", "table2"):
        code, out = run_cli(capsys, "verify", suite)
        assert code == 0, suite
        assert "overall: PASS" in out


def test_verify_theorem12_small_range(capsys):
    code, out = run_cli(capsys, "verify", "theorem12", "--n-max", "100")
    assert code == 0
    assert "suite theorem12: 93/93 passed" in out


def test_verify_theorem12_json(capsys):
    code, payload = run_json(capsys, "verify", "theorem12", "--n-max", "50")
    assert code == 0
    suites = {s["suite"]: s for s in payload["suites"]}
    assert suites["integrity"]["passed"] is True
    assert suites["theorem12"]["checked"] == 43
    assert payload["passed"] is True


def test_verify_bad_n_max(capsys):
    assert main(["verify", "theorem12", "--n-max", "5"]) == 2
    capsys.readouterr()


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_csv(capsys):
    code, out = run_cli(capsys, "verify", "table2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,item,result,detail"
    assert sum(1 for line in lines if line.startswith("table2,")) == 4


def test_verify_output_deterministic(capsys):
    _, first = run_cli(capsys, "verify", "covers", "--format", "json")
    _, second = run_cli(capsys, "verify", "covers", "--format", "json")
    assert first == second


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run_cli(capsys, "verify", "table2", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["passed"] is True


def test_export_json(tmp_path, capsys):
    out_file = tmp_path / "dataset.json"
    code, out = run_cli(capsys, "export", "json", str(out_file))
    assert code == 0
    assert "groups: 8 records" in out
    assert "sporadic_pairs: 27 records" in out
    data = json.loads(out_file.read_text())
    assert len(data["cover_families"]) == 6


def test_export_csv(tmp_path, capsys):
    code, out = run_cli(capsys, "export", "csv", str(tmp_path / "data"))
    assert code == 0
    assert (tmp_path / "data" / "groups.csv").exists()
    assert "maximal_subgroups: 4 records" in out


def test_export_bad_destination(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "out.json"
    assert main(["export", "json", str(missing)]) == 2
    capsys.readouterr()


def test_console_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "snpd.cli", "snpd", "A_7"],
        capture_output=True,
        text=True,
        env=subprocess_env(),
    )
    assert result.returncode == 0
    assert "common omega = 2" in result.stdout
