"""Exhaustive first-term verification over ranges of shape pairs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BoundExceededError
from .limits import max_degree
from .partitions import Partition, partitions_of
from .plethysm import ExpansionReport, verify_first_term

REPORT_SCHEMA_VERSION = 1


@dataclass
class SweepConfig:
    """What to sweep and how to run it.

    Pairs (lam, mu) with |lam| * |mu| <= max_product are checked;
    max_product itself is capped by the PLETHYST_MAX_N hard limit.
    """

    max_product: int
    oracle: bool = False
    parallelism: int = 1
    output_path: str | None = None
    format: str = "text"

    def __post_init__(self):
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be >= 1, got {self.parallelism}")
        if self.format not in ("text", "json"):
            raise ValueError(f"format must be 'text' or 'json', got {self.format!r}")
        cap = max_degree()
        if self.max_product > cap:
            raise BoundExceededError(
                f"max_product {self.max_product} exceeds the cap {cap}"
            )


@dataclass
class SweepResult:
    max_product: int
    oracle: bool
    pair_count: int
    failures: list = field(default_factory=list)

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA_VERSION,
            "max_product": self.max_product,
            "oracle": self.oracle,
            "pair_count": self.pair_count,
            "failure_count": self.failure_count,
            "all_passed": self.all_passed,
            "failures": [r.to_json_dict() for r in self.failures],
        }

    def summary_text(self) -> str:
        import json

        lines = [
            f"pairs checked: {self.pair_count}",
            f"failures: {self.failure_count}",
        ]
        for report in self.failures:
            lines.append("counterexample:")
            lines.append(json.dumps(report.to_json_dict(), indent=2))
        return "\n".join(lines)


def sweep_pairs(max_product: int) -> list[tuple[Partition, Partition]]:
    """All (lam, mu) with |lam| * |mu| <= max_product, deterministic order."""
    pairs = []
    for m in range(1, max_product + 1):
        for n in range(1, max_product // m + 1):
            for lam in partitions_of(m):
                for mu in partitions_of(n):
                    pairs.append((lam, mu))
    return pairs


def _run_pair(item) -> ExpansionReport:
    lam, mu, use_oracle = item
    return verify_first_term(lam, mu, use_oracle=use_oracle)


def run_sweep(config: SweepConfig) -> SweepResult:
    pairs = sweep_pairs(config.max_product)
    jobs = [(lam, mu, config.oracle) for lam, mu in pairs]
    if config.parallelism > 1 and jobs:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            reports = list(pool.map(_run_pair, jobs, chunksize=8))
    else:
        reports = [_run_pair(job) for job in jobs]
    failures = [r for r in reports if not r.passed]
    return SweepResult(
        max_product=config.max_product,
        oracle=config.oracle,
        pair_count=len(pairs),
        failures=failures,
    )
