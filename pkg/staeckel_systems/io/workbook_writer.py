"""Spreadsheet export of a verification report (openpyxl)."""

from __future__ import annotations

from pathlib import Path

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side

# ── Fills ──────────────────────────────────────────────────────────
FILL_RED = PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid")
FILL_GREEN = PatternFill(start_color="C6EFCE", end_color="C6EFCE", fill_type="solid")
FILL_HEADER = PatternFill(start_color="D9E1F2", end_color="D9E1F2", fill_type="solid")
FONT_BOLD = Font(bold=True)
ALIGN_CENTER = Alignment(horizontal="center", vertical="center")
THIN_BORDER = Border(
    left=Side(style="thin"), right=Side(style="thin"),
    top=Side(style="thin"), bottom=Side(style="thin"),
)

CHECK_HEADERS = ["Check", "Kind", "Max residual", "Tolerance", "Result"]


def _header_row(ws, headers: list[str]) -> None:
    for col, h in enumerate(headers, 1):
        cell = ws.cell(row=1, column=col, value=h)
        cell.font = FONT_BOLD
        cell.fill = FILL_HEADER
        cell.alignment = ALIGN_CENTER
        cell.border = THIN_BORDER


# ── Sheet 1: Checks ────────────────────────────────────────────────

def _write_checks_sheet(ws, checks: list[dict]) -> None:
    _header_row(ws, CHECK_HEADERS)
    ws.column_dimensions["A"].width = 60
    ws.column_dimensions["B"].width = 14
    ws.column_dimensions["C"].width = 16
    ws.column_dimensions["D"].width = 12
    ws.column_dimensions["E"].width = 8
    for i, check in enumerate(checks):
        row = i + 2
        ws.cell(row=row, column=1, value=check["name"])
        ws.cell(row=row, column=2, value=check["kind"])
        ws.cell(row=row, column=3, value=check["max_residual"]).number_format = "0.000E+00"
        ws.cell(row=row, column=4, value=check["tol"]).number_format = "0.0E+00"
        result = ws.cell(row=row, column=5, value="PASS" if check["pass"] else "FAIL")
        result.alignment = ALIGN_CENTER
        result.fill = FILL_GREEN if check["pass"] else FILL_RED


# ── Sheet 2: Run ───────────────────────────────────────────────────

def _write_run_sheet(ws, report: dict) -> None:
    _header_row(ws, ["Field", "Value"])
    ws.column_dimensions["A"].width = 18
    ws.column_dimensions["B"].width = 70
    rows = [
        ("schema_version", report["schema_version"]),
        ("generated_at", report["generated_at"]),
        ("system", report["system"]),
        ("dim", report["dim"]),
        ("seed", report["seed"]),
        ("trials", report["trials"]),
    ]
    rows += [(f"param {k}", v) for k, v in sorted(report["params"].items())]
    rows += [("note", note) for note in report["notes"]]
    for i, (field_name, value) in enumerate(rows):
        ws.cell(row=i + 2, column=1, value=field_name).font = FONT_BOLD
        ws.cell(row=i + 2, column=2, value=value)


# ── Public API ─────────────────────────────────────────────────────

def write_report_xlsx(path: str | Path, report: dict) -> Path:
    """Write a verification report as a workbook.

    Creates two sheets:
      1. Checks: one row per check with PASS/FAIL fill
      2. Run: system, parameters, seed and notes

    Returns the path written to.
    """
    path = Path(path)
    wb = Workbook()

    ws_checks = wb.active
    ws_checks.title = "Checks"
    _write_checks_sheet(ws_checks, report["checks"])

    ws_run = wb.create_sheet("Run")
    _write_run_sheet(ws_run, report)

    wb.save(path)
    return path
