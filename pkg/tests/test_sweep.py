import json

import pytest

import plethyst.sweep as sweep_mod
from plethyst import (
    BoundExceededError,
    SweepConfig,
    partitions_of,
    run_sweep,
    sweep_pairs,
)


def test_sweep_pairs_covers_expected_grid():
    pairs = list(sweep_pairs(6))
    expected = []
    for m in range(1, 7):
        for n in range(1, 7):
            if m * n > 6:
                continue
            for lam in partitions_of(m):
                for mu in partitions_of(n):
                    expected.append((lam, mu))
    assert pairs == expected
    assert list(sweep_pairs(0)) == []


def test_config_validation():
    cfg = SweepConfig(max_product=4)
    assert cfg.parallelism == 1
    assert cfg.format == "text"
    with pytest.raises(ValueError):
        SweepConfig(max_product=4, parallelism=0)
    with pytest.raises(ValueError):
        SweepConfig(max_product=4, format="xml")
    with pytest.raises(BoundExceededError):
        SweepConfig(max_product=99)


def test_run_sweep_small_grid_passes():
    result = run_sweep(SweepConfig(max_product=6))
    assert result.all_passed
    assert result.failure_count == 0
    assert result.pair_count == len(list(sweep_pairs(6)))
    assert result.failures == []


def test_run_sweep_zero_is_vacuous():
    result = run_sweep(SweepConfig(max_product=0))
    assert result.all_passed
    assert result.pair_count == 0


def test_run_sweep_parallel_matches_serial():
    serial = run_sweep(SweepConfig(max_product=6, parallelism=1))
    parallel = run_sweep(SweepConfig(max_product=6, parallelism=2))
    assert json.dumps(serial.to_json_dict(), sort_keys=True) == json.dumps(
        parallel.to_json_dict(), sort_keys=True
    )


def test_result_json_shape():
    result = run_sweep(SweepConfig(max_product=4))
    payload = result.to_json_dict()
    assert payload["schema"] == 1
    assert payload["max_product"] == 4
    assert payload["oracle"] is False
    assert payload["pair_count"] == result.pair_count
    assert payload["failures"] == []
    json.dumps(payload)  # must be serializable as-is


def test_result_summary_text_pass():
    result = run_sweep(SweepConfig(max_product=4))
    text = result.summary_text()
    assert "pairs checked: %d" % result.pair_count in text
    assert "failures: 0" in text
    assert "counterexample" not in text


def test_run_sweep_reports_failures(monkeypatch):
    real_verify = sweep_mod.verify_first_term

    def broken_verify(lam, mu, use_oracle=False):
        report = real_verify(lam, mu, use_oracle=use_oracle)
        if (lam, mu) == ((2,), (2,)):
            report.checks["first_term_coefficient_is_one"] = False
        return report

    monkeypatch.setattr(sweep_mod, "verify_first_term", broken_verify)
    result = run_sweep(SweepConfig(max_product=4))
    assert not result.all_passed
    assert result.failure_count == 1
    failing = result.failures[0].to_json_dict()
    assert failing["lambda"] == [2]
    assert failing["mu"] == [2]
    assert failing["passed"] is False
    text = result.summary_text()
    assert "failures: 1" in text
    assert "counterexample:" in text


def test_run_sweep_with_oracle_small():
    result = run_sweep(SweepConfig(max_product=5, oracle=True))
    assert result.all_passed
    assert result.to_json_dict()["oracle"] is True
