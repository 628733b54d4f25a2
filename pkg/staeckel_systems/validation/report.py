"""Plain-text summaries of verification runs."""

from __future__ import annotations

from staeckel_systems.models.system import SystemSpec
from staeckel_systems.validation.commutation import BracketReport
from staeckel_systems.validation.independence import RankReport
from staeckel_systems.validation.traces import TraceReport


def format_report(
    spec: SystemSpec,
    brackets: list[BracketReport],
    traces: list[TraceReport],
    rank: RankReport | None = None,
    max_lines: int = 20,
) -> str:
    """Summary of one system's suites.

    Sections:
    1. Poisson commutation
    2. Trace / sum identities
    3. Functional independence
    """
    params = ", ".join(f"{k}={v:g}" for k, v in spec.params.as_dict().items() if v != 0)
    lines = []
    lines.append("=" * 70)
    lines.append(f"VERIFICATION REPORT: {spec.label} N={spec.dim} ({params or 'no parameters'})")
    lines.append("=" * 70)

    # 1. Commutation
    failed = [b for b in brackets if not b.passed]
    lines.append(f"\n## COMMUTATION ({len(brackets)} relations, {len(failed)} failed)")
    if failed:
        for b in failed[:max_lines]:
            lines.append(
                f"  {b.label}: residual/scale={b.max_normalized:.3e} (tol {b.tol:.0e})"
            )
        if len(failed) > max_lines:
            lines.append(f"  ... and {len(failed) - max_lines} more")
    elif brackets:
        worst = max(brackets, key=lambda b: b.max_normalized)
        lines.append(f"  All relations hold. Worst: {worst.label} at {worst.max_normalized:.3e}")
    gaps = [b.oracle_gap for b in brackets if b.oracle_gap is not None]
    if gaps:
        lines.append(f"  Finite-difference oracle gap: {max(gaps):.3e}")

    # 2. Identities
    failed_traces = [t for t in traces if not t.passed]
    lines.append(f"\n## IDENTITIES ({len(traces)} checked, {len(failed_traces)} failed)")
    for t in traces:
        status = "ok" if t.passed else "FAIL"
        lines.append(f"  [{status}] {t.identity}: max deviation {t.max_deviation:.3e}")

    # 3. Independence
    if rank is not None:
        status = "ok" if rank.passed else "FAIL"
        lines.append(f"\n## INDEPENDENCE [{status}]")
        lines.append(f"  Set: {', '.join(rank.labels)}")
        lines.append(
            f"  Rank {rank.expected_rank} at {rank.full_rank_fraction:.0%} of {len(rank.ranks)} samples; "
            f"worst sigma_min/sigma_max = {rank.worst_ratio:.3e}"
        )
    return "\n".join(lines)
