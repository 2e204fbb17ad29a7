import json

import pytest

from bernsym import cli


def run_cli(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run_cli(capsys, argv + ["--format", "json"])
    return code, json.loads(out)


def test_chars_counts(capsys):
    code, doc = run_json(capsys, ["chars", "--modulus", "5"])
    assert code == 0
    assert len(doc["records"]) == 4

    code, doc = run_json(capsys, ["chars", "--modulus", "1"])
    assert code == 0
    assert len(doc["records"]) == 1
    assert doc["records"][0]["conductor"] == 1


def test_chars_mod8_conductors(capsys):
    code, doc = run_json(capsys, ["chars", "--modulus", "8"])
    assert code == 0
    assert sorted(r["conductor"] for r in doc["records"]) == [1, 4, 8, 8]


def test_chars_rejects_zero_modulus(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["chars", "--modulus", "0"])
    assert exc.value.code == 2


def test_compute_bernoulli_number(capsys):
    code, doc = run_json(
        capsys, ["compute", "bernoulli-number", "--modulus", "1", "--char", "0", "-n", "4"]
    )
    assert code == 0
    assert doc["records"][0]["value"] == "-1/30"

    code, doc = run_json(
        capsys, ["compute", "bernoulli-number", "--modulus", "4", "--char", "1", "-n", "3"]
    )
    assert code == 0
    assert doc["records"][0]["value"] == "3/2"
    assert doc["records"][0]["rational"] == "3/2"


def test_compute_power_sum(capsys):
    code, doc = run_json(
        capsys,
        ["compute", "power-sum", "--modulus", "4", "--char", "1", "-k", "2", "-n", "7"],
    )
    assert code == 0
    assert doc["records"][0]["value"] == "-32"


def test_compute_bernoulli_poly(capsys):
    code, doc = run_json(
        capsys,
        ["compute", "bernoulli-poly", "--modulus", "1", "--char", "0", "-n", "2", "--x", "1/2"],
    )
    assert code == 0
    assert doc["records"][0]["value"] == "-1/12"


def test_compute_unknown_label_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "bernoulli-number", "--modulus", "4", "--char", "9", "-n", "3"])
    assert exc.value.code == 2


def test_lambda_routes_agree(capsys):
    code, doc = run_json(
        capsys,
        [
            "lambda", "--family", "L23", "--index", "1", "--modulus", "4",
            "--char", "1", "--weights", "1,2,3", "--ys", "0,1/2",
            "--order", "8", "--route", "both",
        ],
    )
    assert code == 0
    assert doc["summary"]["routes_agree"] is True
    assert len(doc["records"]) == 9


def test_lambda_matches_library(capsys):
    from fractions import Fraction

    from bernsym.characters import enumerate_characters
    from bernsym.identities import LambdaSpec, lambda_series

    code, doc = run_json(
        capsys,
        [
            "lambda", "--family", "L12", "--index", "0", "--modulus", "3",
            "--char", "1", "--weights", "2,3,5", "--ys", "1/2", "--order", "6",
        ],
    )
    assert code == 0
    chi = enumerate_characters(3)[1]
    series = lambda_series(LambdaSpec("L12", 0, (2, 3, 5), (Fraction(1, 2),)), chi, 6)
    for rec in doc["records"]:
        assert rec["egf_coeff"] == str(series.egf_coeff(rec["n"]))


def test_verify_single_instance_passes(capsys):
    code, out = run_cli(
        capsys,
        ["verify", "--theorem", "T1", "--modulus", "4", "--char", "1",
         "--n-max", "0", "--weights", "1,1,1"],
    )
    assert code == 0
    assert "PASS" in out
    assert "0 failures" in out


def test_verify_perturbed_fails_with_detail(capsys):
    code, doc = run_json(
        capsys,
        ["verify", "--theorem", "T2", "--modulus", "1", "--n-max", "2",
         "--weights", "1,2,3", "--ys", "1/2,2/3", "--perturb"],
    )
    assert code == 1
    assert doc["summary"]["failures"] > 0
    failed = [r for r in doc["records"] if not r["all_equal"]]
    assert failed and failed[0]["first_mismatch"] is not None
    assert failed[0]["first_mismatch"]["left"] != failed[0]["first_mismatch"]["right"]


def test_verify_all_theorems_small(capsys):
    code, doc = run_json(
        capsys,
        ["verify", "--theorem", ",".join(cli.THEOREM_IDS), "--modulus", "5",
         "--n-max", "2", "--weights", "1,2,3", "--ys", "1/2"],
    )
    assert code == 0
    assert doc["summary"]["failures"] == 0
    # all primitive characters mod 5 were exercised
    assert {r["char"] for r in doc["records"]} == {1, 2, 3}


def test_sweep_small_grid(capsys):
    args = ["sweep", "--moduli", "4", "--theorems", "T7,T8", "--n-max", "3",
            "--weights", "1,2,3", "--ys", "0,1/2"]
    code, doc = run_json(capsys, args)
    assert code == 0
    assert doc["summary"]["failures"] == 0
    assert doc["summary"]["instances"] == len(doc["records"])
    assert doc["config"]["moduli"] == [4]


def test_sweep_report_is_deterministic(capsys):
    args = ["sweep", "--moduli", "3", "--theorems", "T4", "--n-max", "2",
            "--weights", "1,2,3", "--ys", "0,1/2", "--format", "json"]
    code1, out1 = run_cli(capsys, args)
    code2, out2 = run_cli(capsys, args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_sweep_config_round_trip(tmp_path, capsys):
    args = ["sweep", "--moduli", "4", "--theorems", "T6", "--n-max", "2",
            "--weights", "1,2,3;2,3,5", "--ys", "0,1/2"]
    code, doc = run_json(capsys, args)
    assert code == 0
    report_path = tmp_path / "report.json"
    report_path.write_text(json.dumps(doc), encoding="utf-8")
    # rerunning from the echoed config reproduces the verdicts
    code2, doc2 = run_json(capsys, ["sweep", "--config", str(report_path)])
    assert code2 == 0
    assert doc2["config"] == doc["config"]
    assert doc2["records"] == doc["records"]


def test_sweep_t3_finding_emitted(capsys):
    code, out = run_cli(
        capsys,
        ["sweep", "--moduli", "4", "--theorems", "T3", "--n-max", "2",
         "--weights", "1,2,3", "--ys", "0,1/2"],
    )
    assert code == 0
    assert "finding: printed fifth-line variant of T3" in out
    code, doc = run_json(
        capsys,
        ["sweep", "--moduli", "4", "--theorems", "T3", "--n-max", "2",
         "--weights", "1,2,3", "--ys", "0,1/2"],
    )
    assert "t3_printed_line5" in doc["summary"]
    assert doc["summary"]["t3_printed_line5"]["applicable"] > 0


def test_csv_output(capsys):
    code, out = run_cli(
        capsys,
        ["verify", "--theorem", "T8", "--modulus", "1", "--n-max", "1",
         "--weights", "1,2,3", "--format", "csv"],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("theorem,")
    assert len(lines) == 3  # header + two instances


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
