"""Experiment Report - 실험 결과 행과 CSV / 텍스트 표 출력

CSV 열 순서는 REPORT_COLUMNS로 고정된다. 실행 시간 열은 요청할 때만 붙여
기본 출력이 바이트 단위로 재현되도록 한다.
"""

import math
from dataclasses import MISSING, asdict, dataclass, field, fields
from io import StringIO
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import pandas as pd
from rich import box
from rich.console import Console
from rich.table import Table

from ..data.csv_io import load_frame, atomic_path, write_frame
from ..utils.errors import DataFormatError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass
class ExperimentReport:
    """원본 대비 축약 실험 한 건의 결과"""
    label: str
    seg_size: int
    levels: int
    drf: float
    delta: float
    size_original: int
    size_reduced: int
    wsize_original: int
    wsize_reduced: int
    decisions_reduced: int
    matched_pct_reduced: float
    cross_checks_reduced: int
    # compare_original=False 이면 원본 쪽은 비어 있다
    decisions_original: Optional[int] = None
    matched_pct_original: Optional[float] = None
    cross_checks_original: Optional[int] = None
    # 주입된 이상치가 있을 때만
    outlier_precision: Optional[float] = None
    outlier_recall: Optional[float] = None
    wall_time_original: Optional[float] = field(default=None, compare=False)
    wall_time_reduced: Optional[float] = field(default=None, compare=False)

    @property
    def matched_pct_gap(self) -> Optional[float]:
        """|원본 매칭률 - 축약 매칭률|"""
        if self.matched_pct_original is None:
            return None
        return abs(self.matched_pct_original - self.matched_pct_reduced)

    @property
    def cross_check_ratio(self) -> Optional[float]:
        """축약 / 원본 가지치기 검사 횟수"""
        if not self.cross_checks_original:
            return None
        return self.cross_checks_reduced / self.cross_checks_original


REPORT_COLUMNS = [
    "label",
    "seg_size",
    "levels",
    "drf",
    "delta",
    "size_original",
    "size_reduced",
    "wsize_original",
    "wsize_reduced",
    "decisions_original",
    "decisions_reduced",
    "matched_pct_original",
    "matched_pct_reduced",
    "cross_checks_original",
    "cross_checks_reduced",
    "outlier_precision",
    "outlier_recall",
]
TIMING_COLUMNS = ["wall_time_original", "wall_time_reduced"]

_INT_FIELDS = {
    "seg_size", "levels", "size_original", "size_reduced", "wsize_original", "wsize_reduced",
    "decisions_original", "decisions_reduced", "cross_checks_original", "cross_checks_reduced",
}
_STR_FIELDS = {"label"}


def report_table(reports: Sequence[ExperimentReport], title: str = "DRF 실험 결과") -> Table:
    """사람이 읽는 요약 표"""
    table = Table(title=title, box=box.ASCII)
    table.add_column("데이터")
    table.add_column("seg_size", justify="right")
    table.add_column("DRF", justify="right")
    table.add_column("크기 (원본/축약)", justify="right")
    table.add_column("윈도우 (원본/축약)", justify="right")
    table.add_column("δ", justify="right")
    table.add_column("매칭 % 원본", justify="right")
    table.add_column("매칭 % 축약", justify="right")
    table.add_column("검사 횟수 비율", justify="right")

    for r in reports:
        ratio = r.cross_check_ratio
        table.add_row(
            r.label,
            str(r.seg_size),
            f"1/{round(1 / r.drf)}",
            f"{r.size_original}/{r.size_reduced}",
            f"{r.wsize_original}/{r.wsize_reduced}",
            f"{r.delta:.4g}",
            "-" if r.matched_pct_original is None else f"{r.matched_pct_original:.2f}",
            f"{r.matched_pct_reduced:.2f}",
            "-" if ratio is None else f"{ratio:.6f}",
        )
    return table


def render_text(reports: Sequence[ExperimentReport]) -> str:
    """고정 폭, 색 없는 표 문자열"""
    buffer = StringIO()
    console = Console(
        file=buffer,
        width=140,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
    )
    console.print(report_table(reports))
    return buffer.getvalue()


def text_path(path: Union[str, Path]) -> Path:
    """report.csv → report.txt"""
    return Path(path).with_suffix(".txt")


def report_emit(
    reports: Union[ExperimentReport, Iterable[ExperimentReport]],
    path: Union[str, Path],
    include_timings: bool = False
) -> None:
    """CSV(기계용)와 .txt 표(사람용)를 원자적으로 저장"""
    if isinstance(reports, ExperimentReport):
        reports = [reports]
    reports = list(reports)

    columns = REPORT_COLUMNS + (TIMING_COLUMNS if include_timings else [])
    frame = pd.DataFrame([asdict(r) for r in reports], columns=columns)
    write_frame(frame, path)

    with atomic_path(text_path(path)) as tmp:
        tmp.write_text(render_text(reports), encoding="utf-8", newline="\n")
    logger.info(f"리포트 저장: {path} ({len(reports)}행)")


def _convert(name: str, text: str, line: int):
    if text == "":
        return None
    if name in _STR_FIELDS:
        return text
    try:
        value = float(text)
    except ValueError:
        raise DataFormatError(f"cannot parse '{text}' in column '{name}'", line=line)
    if not math.isfinite(value):
        raise DataFormatError(f"non-finite value in column '{name}'", line=line)
    if name in _INT_FIELDS:
        if value != int(value):
            raise DataFormatError(f"non-integer value in column '{name}'", line=line)
        return int(value)
    return value


def read_report(path: Union[str, Path]) -> List[ExperimentReport]:
    """report_emit가 쓴 CSV 읽기"""
    frame = load_frame(path)
    columns = list(frame.columns)
    if columns not in (REPORT_COLUMNS, REPORT_COLUMNS + TIMING_COLUMNS):
        raise DataFormatError("unexpected report header", line=1)

    required = {f.name for f in fields(ExperimentReport) if f.default is MISSING}
    reports = []
    for row, record in enumerate(frame.to_dict(orient="records")):
        values = {name: _convert(name, str(text), row + 2) for name, text in record.items()}
        missing = [name for name in REPORT_COLUMNS if name in required and values.get(name) is None]
        if missing:
            raise DataFormatError(f"missing value in column '{missing[0]}'", line=row + 2)
        reports.append(ExperimentReport(**values))
    return reports
