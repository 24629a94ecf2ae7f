import json

import pytest

import uvicorn

from plethyst.cli import (
    EXIT_BOUNDS,
    EXIT_CHECK_FAILED,
    EXIT_IO,
    EXIT_OK,
    EXIT_PARSE,
    build_parser,
    main,
)
from plethyst.sweep import sweep_pairs


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_schur_text(capsys):
    code, out, err = run_cli(capsys, "expand", "--lambda", "2", "--mu", "2")
    assert code == EXIT_OK
    assert out == "s[4] + s[2,2]\n"
    assert err == ""


def test_expand_monomial_text(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--lambda", "2", "--mu", "2", "--basis", "monomial"
    )
    assert code == EXIT_OK
    assert out == "m[4] + m[3,1] + 2·m[2,2] + 2·m[2,1,1] + 3·m[1,1,1,1]\n"


def test_expand_json(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--lambda", "1,1", "--mu", "2", "--format", "json"
    )
    assert code == EXIT_OK
    body = json.loads(out)
    assert body["basis"] == "s"
    assert body["degree"] == 4
    assert body["terms"] == [{"partition": [3, 1], "coeff": "1"}]


def test_first_term_text(capsys):
    code, out, _ = run_cli(capsys, "first-term", "--lambda", "3,1", "--mu", "3,2")
    assert code == EXIT_OK
    assert out == "12,7,1\n"


def test_first_term_verified(capsys):
    code, out, _ = run_cli(
        capsys, "first-term", "--lambda", "2", "--mu", "2", "--verify"
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "4"
    assert "predicted_equals_observed_first_term: pass" in lines
    assert "first_term_coefficient_is_one: pass" in lines
    assert not any("FAIL" in line for line in lines)


def test_first_term_verified_with_oracle_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "first-term",
        "--lambda",
        "2,1",
        "--mu",
        "1,1",
        "--verify",
        "--oracle",
        "--format",
        "json",
    )
    assert code == EXIT_OK
    body = json.loads(out)
    assert body["first_term"] == [3, 2, 1]
    assert body["report"]["checks"]["oracle_agrees"] is True


def test_verify_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-product", "4")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "pairs checked: %d" % len(sweep_pairs(4))
    assert lines[1] == "failures: 0"


def test_verify_zero_is_vacuous_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-product", "0")
    assert code == EXIT_OK
    assert "pairs checked: 0" in out


def test_verify_jobs_do_not_change_output(capsys):
    _, serial, _ = run_cli(
        capsys, "verify", "--max-product", "4", "--format", "json"
    )
    _, parallel, _ = run_cli(
        capsys, "verify", "--max-product", "4", "--format", "json", "--jobs", "2"
    )
    assert json.loads(serial) == json.loads(parallel)


def test_parse_error_exit_code(capsys):
    code, out, err = run_cli(capsys, "expand", "--lambda", "2,x", "--mu", "1")
    assert code == EXIT_PARSE
    assert out == ""
    assert err.startswith("error:")


def test_increasing_partition_is_a_parse_error(capsys):
    code, _, err = run_cli(capsys, "first-term", "--lambda", "1,2", "--mu", "1")
    assert code == EXIT_PARSE
    assert "error:" in err


def test_bounds_exit_code(capsys):
    code, _, err = run_cli(capsys, "expand", "--lambda", "5", "--mu", "4")
    assert code == EXIT_BOUNDS
    assert "error:" in err


def test_env_degree_cap_is_honored(capsys, monkeypatch):
    monkeypatch.setenv("PLETHYST_MAX_N", "4")
    code, _, err = run_cli(capsys, "expand", "--lambda", "3", "--mu", "2")
    assert code == EXIT_BOUNDS
    assert "error:" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    code, out, _ = run_cli(
        capsys,
        "expand",
        "--lambda",
        "2",
        "--mu",
        "2",
        "--out",
        str(target),
    )
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text(encoding="utf-8") == "s[4] + s[2,2]\n"


def test_unwritable_out_is_an_io_error(tmp_path, capsys):
    target = tmp_path / "missing" / "deep" / "result.txt"
    code, _, err = run_cli(
        capsys,
        "expand",
        "--lambda",
        "2",
        "--mu",
        "2",
        "--out",
        str(target),
    )
    assert code == EXIT_IO
    assert "cannot write" in err


def test_unreachable_server_is_an_io_error(capsys):
    code, _, err = run_cli(
        capsys,
        "expand",
        "--lambda",
        "2",
        "--mu",
        "2",
        "--server",
        "http://127.0.0.1:9",
    )
    assert code == EXIT_IO
    assert "request failed" in err


def test_server_env_variable_is_honored(capsys, monkeypatch):
    monkeypatch.setenv("PLETHYST_SERVER", "http://127.0.0.1:9")
    code, _, err = run_cli(capsys, "expand", "--lambda", "2", "--mu", "2")
    assert code == EXIT_IO
    assert "request failed" in err


def test_failing_check_exit_code(capsys, monkeypatch):
    import plethyst.plethysm as plethysm_mod

    monkeypatch.setattr(
        plethysm_mod, "first_term", lambda lam, mu: (99,), raising=True
    )
    # the service route resolves the symbol at import time, so patch there too
    import plethyst.service.app as app_mod

    monkeypatch.setattr(app_mod, "first_term", lambda lam, mu: (99,))
    code, out, _ = run_cli(
        capsys, "first-term", "--lambda", "2", "--mu", "2", "--verify"
    )
    assert code == EXIT_CHECK_FAILED
    assert "FAIL" in out


def test_serve_invokes_uvicorn(capsys, monkeypatch):
    recorded = {}

    def fake_run(target, host=None, port=None):
        recorded["target"] = target
        recorded["host"] = host
        recorded["port"] = port

    monkeypatch.setattr(uvicorn, "run", fake_run)
    code = main(["serve", "--host", "0.0.0.0", "--port", "9999"])
    assert code == EXIT_OK
    assert recorded == {
        "target": "plethyst.service.app:app",
        "host": "0.0.0.0",
        "port": 9999,
    }


def test_missing_command_is_a_usage_error():
    with pytest.raises(SystemExit):
        main([])


def test_parser_exposes_documented_flags():
    parser = build_parser()
    args = parser.parse_args(
        ["expand", "--lambda", "2,1", "--mu", "3", "--basis", "monomial"]
    )
    assert args.lam == "2,1"
    assert args.mu == "3"
    assert args.basis == "monomial"
    args = parser.parse_args(
        ["verify", "--max-product", "10", "--jobs", "4", "--oracle"]
    )
    assert args.max_product == 10
    assert args.jobs == 4
    assert args.oracle is True
