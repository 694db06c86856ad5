"""CLI contract: commands, exit codes, determinism, config handling."""

import json

from springer_rca.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fixed_points_json(capsys):
    code, out, _ = run_cli(
        capsys, "fixed-points", "--n", "2", "--k", "3", "--max-degree", "3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "fixed-points"
    assert payload["params"] == {"n": 2, "k": 3, "max_degree": 3}
    assert payload["results"]["counts"] == [1, 1, 2, 2]
    assert payload["results"]["strata"][2]["labels"] == [[0, 2], [1, 1]]
    assert "version" in payload


def test_fixed_points_degree_zero(capsys):
    code, out, _ = run_cli(
        capsys, "fixed-points", "--n", "2", "--k", "3", "--max-degree", "0"
    )
    assert code == 0
    assert json.loads(out)["results"]["strata"][0]["labels"] == [[0, 0]]


def test_fixed_points_non_coprime_exits_3(capsys):
    code, _, err = run_cli(
        capsys, "fixed-points", "--n", "2", "--k", "4", "--max-degree", "3"
    )
    assert code == 3
    assert "not isolated" in err


def test_fixed_points_csv(capsys):
    code, out, _ = run_cli(
        capsys, "fixed-points", "--n", "2", "--k", "3", "--max-degree", "2",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "degree,index,label"
    assert lines[1] == "0,0,0 0"
    assert lines[-1] == "2,1,1 1"


def test_operator_x_blocks(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--op", "X", "--n", "2", "--k", "3",
        "--max-degree", "2",
    )
    assert code == 0
    payload = json.loads(out)
    blocks = payload["results"]["blocks"]
    assert blocks[0] == {"degree": 0, "rows": 1, "cols": 1, "entries": [[0, 0, "2"]]}
    assert payload["results"]["shift"] == 1


def test_operator_h_wrong_rank_exits_3(capsys):
    code, _, err = run_cli(
        capsys, "operator", "--op", "H", "--n", "3", "--k", "4", "--max-degree", "2"
    )
    assert code == 3
    assert "requires n = 2" in err


def test_operator_commutator_diagonal(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--op", "commutator-XY", "--n", "2", "--k", "3",
        "--max-degree", "4",
    )
    assert code == 0
    blocks = json.loads(out)["results"]["blocks"]
    for block in blocks:
        assert all(i == j and v == "2" for i, j, v in block["entries"])


def test_operator_fr_with_dressing(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--op", "Fr", "--r", "2", "--dress", "e1",
        "--n", "3", "--k", "4", "--max-degree", "4",
    )
    assert code == 0
    assert json.loads(out)["results"]["shift"] == -2


def test_operator_monopole_coweight(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--op", "monopole", "--coweight", "1,0",
        "--n", "2", "--k", "3", "--max-degree", "3",
    )
    assert code == 0
    x_code, x_out, _ = run_cli(
        capsys, "operator", "--op", "X", "--n", "2", "--k", "3", "--max-degree", "3"
    )
    assert json.loads(out)["results"]["blocks"] == json.loads(x_out)["results"]["blocks"]


def test_operator_usage_errors(capsys):
    code, _, err = run_cli(
        capsys, "operator", "--op", "Er", "--n", "2", "--k", "3", "--max-degree", "2"
    )
    assert code == 2 and "--r" in err
    code, _, err = run_cli(
        capsys, "operator", "--op", "monopole", "--coweight", "1,-1",
        "--n", "2", "--k", "3", "--max-degree", "2",
    )
    assert code == 2
    code, _, err = run_cli(
        capsys, "operator", "--op", "X", "--dress", "e1",
        "--n", "2", "--k", "3", "--max-degree", "2",
    )
    assert code == 2 and "dressing" in err


def test_bad_operator_name_exits_2(capsys):
    code = main(
        ["operator", "--op", "Q", "--n", "2", "--k", "3", "--max-degree", "2"]
    )
    capsys.readouterr()
    assert code == 2


def test_missing_required_option_exits_2(capsys):
    code, _, err = run_cli(capsys, "fixed-points", "--n", "2", "--k", "3")
    assert code == 2
    assert "--max-degree" in err


def test_verify_all_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "all", "--n", "2", "--k", "3",
        "--max-degree", "10",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["all_passed"] is True
    names = [entry["suite"] for entry in payload["results"]["suites"]]
    assert names == [
        "weyl", "sl2", "singular", "kernel-y", "appendix-b",
        "stabilizer", "euler", "oracle",
    ]


def test_verify_all_skips_rank_two_suites(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "all", "--n", "3", "--k", "4",
        "--max-degree", "9",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["skipped_suites"] == ["sl2", "appendix-b"]


def test_verify_under_truncation_exits_4(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--suite", "kernel-y", "--n", "4", "--k", "5",
        "--max-degree", "8",
    )
    assert code == 4
    assert "16" in err


def test_verify_oracle(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "oracle", "--n", "3", "--k", "4",
        "--max-degree", "6",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["suites"][0]["details"]["ideal_counts"] == [
        1, 1, 2, 3, 4, 4, 5,
    ]


def test_verify_output_deterministic_across_threads(capsys, monkeypatch):
    args = ["verify", "--suite", "all", "--n", "2", "--k", "3", "--max-degree", "8"]
    code, out1, _ = run_cli(capsys, *args, "--threads", "1")
    assert code == 0
    code, out4, _ = run_cli(capsys, *args, "--threads", "4")
    assert code == 0
    assert out1 == out4
    monkeypatch.setenv("SPRINGER_RCA_THREADS", "1")
    code, capped, _ = run_cli(capsys, *args, "--threads", "4")
    assert code == 0
    assert capped == out1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "fixed-points", "--n", "2", "--k", "3", "--max-degree", "2",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["results"]["counts"] == [1, 1, 2]


def test_config_file(tmp_path, capsys):
    config = tmp_path / "run.cfg"
    config.write_text("n = 2\nk = 3\nmax_degree = 3\nformat = json\n# comment\n")
    code, out, _ = run_cli(capsys, "fixed-points", "--config", str(config))
    assert code == 0
    assert json.loads(out)["results"]["counts"] == [1, 1, 2, 2]
    # explicit flags win over the config file
    code, out, _ = run_cli(
        capsys, "fixed-points", "--config", str(config), "--max-degree", "1"
    )
    assert json.loads(out)["results"]["counts"] == [1, 1]


def test_config_file_bad_key(tmp_path, capsys):
    config = tmp_path / "run.cfg"
    config.write_text("nope = 1\n")
    code, _, err = run_cli(capsys, "fixed-points", "--config", str(config))
    assert code == 2
    assert "nope" in err


def test_verify_csv(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "weyl", "--n", "2", "--k", "3",
        "--max-degree", "8", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,status,claim"
    assert lines[1].startswith("weyl,pass,")
