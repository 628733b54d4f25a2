from .json_report import (
    SCHEMA_VERSION, CheckRecord, build_report, render_json, write_json, all_passed,
    checks_from_brackets, checks_from_traces, check_from_rank, checks_from_quantum,
)
from .csv_writer import (
    GEOMETRY_COLUMNS, trajectory_columns, trajectory_frame, geometry_frame,
    render_csv, write_csv, read_csv,
)
from .workbook_writer import write_report_xlsx

__all__ = [
    "SCHEMA_VERSION", "CheckRecord", "build_report", "render_json", "write_json", "all_passed",
    "checks_from_brackets", "checks_from_traces", "check_from_rank", "checks_from_quantum",
    "GEOMETRY_COLUMNS", "trajectory_columns", "trajectory_frame", "geometry_frame",
    "render_csv", "write_csv", "read_csv",
    "write_report_xlsx",
]
