"""CSV tables for trajectories and geometry grids (pandas)."""

from __future__ import annotations

import io
import math
from pathlib import Path

import pandas as pd

from staeckel_systems.solver.integrator import Trajectory

SCHEMA_LINE = "# schema_version: 1"
GEOMETRY_COLUMNS = ["r", "f", "R_closed", "R_oracle", "u_kc", "u_o"]


def trajectory_columns(dim: int, labels: list[str]) -> list[str]:
    """t, q1..qN, p1..pN, H, then the extra observable labels."""
    return (
        ["t"]
        + [f"q{i}" for i in range(1, dim + 1)]
        + [f"p{i}" for i in range(1, dim + 1)]
        + ["H"]
        + [label for label in labels if label != "H"]
    )


def trajectory_frame(traj: Trajectory, dim: int, drift: dict[str, float] | None = None) -> pd.DataFrame:
    """One row per accepted step; a final row with t="drift" when drifts are given."""
    labels = [label for label in traj.series if label != "H"]
    columns = trajectory_columns(dim, labels)
    rows = []
    for k, (t, x) in enumerate(zip(traj.times, traj.states)):
        row = [t, *x.q, *x.p, traj.series["H"][k]]
        row += [traj.series[label][k] for label in labels]
        rows.append(row)
    frame = pd.DataFrame(rows, columns=columns)
    if drift is not None:
        summary = {c: "" for c in columns}
        summary["t"] = "drift"
        for label, value in drift.items():
            if label in summary:
                summary[label] = value
        frame = pd.concat([frame, pd.DataFrame([summary], columns=columns)], ignore_index=True)
    return frame


def geometry_frame(rows: list[dict[str, float]]) -> pd.DataFrame:
    """Rows keyed by GEOMETRY_COLUMNS; missing values become NaN."""
    return pd.DataFrame(
        [[row.get(c, math.nan) for c in GEOMETRY_COLUMNS] for row in rows],
        columns=GEOMETRY_COLUMNS,
    )


def render_csv(frame: pd.DataFrame) -> str:
    """Schema comment line followed by the CSV table."""
    buf = io.StringIO()
    buf.write(SCHEMA_LINE + "\n")
    frame.to_csv(buf, index=False, float_format="%.17g", lineterminator="\n")
    return buf.getvalue()


def write_csv(frame: pd.DataFrame, path: str | Path | None = None) -> str:
    text = render_csv(frame)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_csv(path_or_text: str | Path) -> pd.DataFrame:
    """Load a table written by ``write_csv`` (the schema line is skipped)."""
    source = path_or_text
    if isinstance(source, str) and "\n" in source:
        source = io.StringIO(source)
    return pd.read_csv(source, comment="#")
