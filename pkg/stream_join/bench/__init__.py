"""Benchmark harness - 원본 대비 축약 실험, DRF 스윕, 리포트"""

from .harness import (
    CalibrationResult,
    OutlierScore,
    calibrate_delta,
    matched_pct_for_delta,
    reduced_window,
    run_drf_sweep,
    run_reduction_experiment,
    score_outliers,
)
from .report import REPORT_COLUMNS, ExperimentReport, read_report, report_emit
from .spec_file import ExperimentSpec, StreamSource, load_experiment_spec, spec_from_mapping

__all__ = [
    "CalibrationResult",
    "OutlierScore",
    "calibrate_delta",
    "matched_pct_for_delta",
    "reduced_window",
    "run_drf_sweep",
    "run_reduction_experiment",
    "score_outliers",
    "REPORT_COLUMNS",
    "ExperimentReport",
    "read_report",
    "report_emit",
    "ExperimentSpec",
    "StreamSource",
    "load_experiment_spec",
    "spec_from_mapping",
]
