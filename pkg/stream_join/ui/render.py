"""Rich rendering - CLI 설정/결과 표"""

from typing import Any, Iterable, Sequence, Tuple

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..bench.report import ExperimentReport, report_table
from ..bench.spec_file import ExperimentSpec, StreamSource
from ..core.reduction.msm import drf
from ..data.generators import GeneratorKind, GeneratorSpec
from ..models.decisions import JoinStats, PairDecision
from ..models.series import ReducedSeries

console = Console(highlight=False)
error_console = Console(stderr=True, highlight=False)

_KIND_FIELDS = {
    GeneratorKind.RANDOM_WALK: (
        "scale", "radial", "perimeter", "trajectory_seed", "observation_noise", "spike_count", "spike_height",
    ),
    GeneratorKind.SENSOR: ("baseline", "amplitude", "period", "noise", "spike_count", "spike_height"),
    GeneratorKind.GPS: ("waypoints", "jitter", "excursion_count", "excursion_distance"),
}


def _format(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6g}"
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def config_table(title: str, rows: Iterable[Tuple[str, Any]]) -> Table:
    """키-값 설정 표"""
    table = Table(title=title, box=box.SIMPLE, show_header=False)
    table.add_column("항목", style="cyan")
    table.add_column("값", justify="right")
    for key, value in rows:
        table.add_row(key, _format(value))
    return table


def generator_rows(spec: GeneratorSpec) -> Sequence[Tuple[str, Any]]:
    """종류에 해당하는 필드만"""
    rows = [("kind", spec.kind), ("n", spec.n), ("seed", spec.seed)]
    rows += [(name, getattr(spec, name)) for name in _KIND_FIELDS[spec.kind]]
    return rows


def _source_rows(name: str, source: StreamSource) -> Sequence[Tuple[str, Any]]:
    if source.path is not None:
        return [(f"{name}.path", str(source.path))]
    return [(f"{name}.{key}", value) for key, value in generator_rows(source.generator)]


def experiment_rows(spec: ExperimentSpec) -> Sequence[Tuple[str, Any]]:
    rows = list(_source_rows("stream1", spec.stream1))
    if spec.stream2 is not None:
        rows += _source_rows("stream2", spec.stream2)
    else:
        rows.append(("stream2", "stream1, seed + 1"))
    rows += [
        ("msm.seg_size", spec.msm.seg_size),
        ("msm.levels", spec.msm.levels),
        ("drf", f"1/{spec.msm.block_size}"),
        ("join.delta", spec.delta),
        ("target_pct", spec.target_pct),
        ("join.wsize", spec.wsize_original),
        ("join.quantifier", spec.window_quantifier),
        ("compare_original", spec.compare_original),
    ]
    return rows


def stats_table(stats: JoinStats) -> Table:
    """조인 누적 통계"""
    table = Table(title="조인 결과", box=box.SIMPLE)
    table.add_column("판정 쌍", justify="right")
    table.add_column("매칭", justify="right", style="green")
    table.add_column("가지치기", justify="right", style="yellow")
    table.add_column("거리 탈락", justify="right", style="red")
    table.add_column("검사 횟수", justify="right")
    table.add_column("매칭률", justify="right")
    table.add_row(
        str(stats.pairs_seen),
        str(stats.pairs_matched),
        str(stats.pairs_pruned),
        str(stats.pairs_distance_rejected),
        str(stats.total_cross_checks),
        f"{stats.matched_pct:.2f}%",
    )
    return table


def outlier_panel(decisions: Sequence[PairDecision], limit: int = 10) -> Panel:
    """이상치 후보 구간 요약 (앞쪽 limit개)"""
    outliers = [d for d in decisions if d.is_outlier]
    lines = [
        f"#{d.index}  원본 [{d.raw_start}, {d.raw_start + d.raw_count})  {d.verdict.value}"
        f"  거리 {d.pair_distance:.4g}"
        for d in outliers[:limit]
    ]
    if len(outliers) > limit:
        lines.append(f"... 외 {len(outliers) - limit}건")
    body = "\n".join(lines) if lines else "이상치 후보 없음"
    return Panel(body, title=f"이상치 후보 {len(outliers)}건", border_style="yellow")


def reduction_table(source_len: int, reduced: ReducedSeries) -> Table:
    table = Table(title="MSM 축약", box=box.SIMPLE)
    table.add_column("원본", justify="right")
    table.add_column("축약", justify="right")
    table.add_column("DRF", justify="right")
    table.add_column("최대 반경", justify="right")
    table.add_column("누적 횟수", justify="right")
    rate = "-" if reduced.config is None else f"1/{reduced.config.block_size} ({drf(reduced.config):.6g})"
    table.add_row(
        str(source_len),
        str(len(reduced)),
        rate,
        f"{float(reduced.radii.max()):.6g}",
        str(reduced.accumulations),
    )
    return table


def print_config(title: str, rows: Iterable[Tuple[str, Any]]) -> None:
    console.print(config_table(title, rows))


def print_reports(reports: Sequence[ExperimentReport]) -> None:
    console.print(report_table(reports))
