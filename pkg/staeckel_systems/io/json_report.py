"""Versioned JSON reports for verification runs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from staeckel_systems.quantum.systems import QuantumVerdict
from staeckel_systems.validation.commutation import BracketReport
from staeckel_systems.validation.independence import PASS_FRACTION, RankReport
from staeckel_systems.validation.traces import TraceReport

SCHEMA_VERSION = 1


@dataclass
class CheckRecord:
    """One row of the report's ``checks`` array."""
    name: str
    kind: str
    max_residual: float
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "max_residual": self.max_residual,
            "tol": self.tol,
            "pass": self.passed,
        }


def checks_from_brackets(reports: list[BracketReport], oracle_tol: float | None = None) -> list[CheckRecord]:
    """Bracket relations, plus one oracle row when finite-difference gaps were recorded."""
    records = [
        CheckRecord(r.label, "commutation", r.max_normalized, r.tol, r.passed) for r in reports
    ]
    gaps = [r.oracle_gap for r in reports if r.oracle_gap is not None]
    if gaps and oracle_tol is not None:
        worst = max(gaps)
        records.append(CheckRecord("fd-oracle", "oracle", worst, oracle_tol, worst <= oracle_tol))
    return records


def checks_from_traces(reports: list[TraceReport]) -> list[CheckRecord]:
    return [CheckRecord(r.identity, "identity", r.max_deviation, r.tol, r.passed) for r in reports]


def check_from_rank(report: RankReport) -> CheckRecord:
    """Rank test as a record: residual is the share of rank-deficient samples."""
    return CheckRecord(
        name=f"rank {report.expected_rank} of {{{', '.join(report.labels)}}}",
        kind="rank",
        max_residual=1.0 - report.full_rank_fraction,
        tol=1.0 - PASS_FRACTION,
        passed=report.passed,
    )


def checks_from_quantum(verdicts: list[QuantumVerdict]) -> list[CheckRecord]:
    return [CheckRecord(v.name, v.kind, v.max_residual, v.tol, v.passed) for v in verdicts]


def build_report(
    system: str,
    dim: int,
    params: dict[str, float],
    seed: int,
    trials: int,
    checks: list[CheckRecord],
    notes: list[str] | None = None,
    generated_at: str | None = None,
) -> dict:
    """Report dictionary; identical inputs give identical output apart from ``generated_at``."""
    return {
        "schema_version": SCHEMA_VERSION,
        "generated_at": generated_at or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "system": system,
        "dim": dim,
        "params": dict(params),
        "seed": seed,
        "trials": trials,
        "checks": [c.as_dict() for c in checks],
        "notes": list(notes or []),
    }


def all_passed(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def write_json(report: dict, path: str | Path | None = None) -> str:
    """Serialize the report, writing it to ``path`` when given. Returns the text."""
    text = render_json(report)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
