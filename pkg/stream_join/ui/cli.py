"""Stream Join CLI - gen / reduce / join / bench / sweep

종료 코드: 0 성공, 1 사용법 오류, 2 데이터 오류.
모든 명령은 실행 전에 확정된 설정을 표로 출력한다.
"""

import math
import sys
from typing import Any, Dict, List, Optional, Sequence

import click
import pandas as pd
from pydantic import ValidationError

from . import render
from .. import __version__
from ..bench.harness import run_drf_sweep, run_reduction_experiment
from ..bench.report import report_emit
from ..bench.spec_file import load_experiment_spec, parse_waypoints
from ..core.join.similarity_join import run_join
from ..core.reduction.msm import lift_raw, msm_reduce
from ..data.csv_io import (
    is_reduced_csv,
    outlier_sidecar_path,
    read_csv,
    read_reduced_csv,
    write_csv,
    write_frame,
    write_outlier_index,
)
from ..data.generators import GeneratorKind, GeneratorSpec, generate
from ..models.config import JoinConfig, MsmConfig, WindowQuantifier
from ..models.series import ReducedSeries
from ..utils.errors import SpecFileError, StreamJoinError
from ..utils.logger import set_level, setup_logger
from ..utils.settings import settings

logger = setup_logger(__name__)

DECISION_COLUMNS = [
    "index", "raw_start", "raw_count", "verdict", "pair_distance", "cross_checks", "pruned_cross_pairs",
]

# 종류별 전용 옵션 (다른 종류에 주면 사용법 오류)
_KIND_OPTIONS = {
    "scale": (GeneratorKind.RANDOM_WALK,),
    "radial": (GeneratorKind.RANDOM_WALK,),
    "perimeter": (GeneratorKind.RANDOM_WALK,),
    "noise": (GeneratorKind.SENSOR,),
    "spike_count": (GeneratorKind.SENSOR, GeneratorKind.RANDOM_WALK),
    "waypoints": (GeneratorKind.GPS,),
    "jitter": (GeneratorKind.GPS,),
    "excursion_count": (GeneratorKind.GPS,),
}

class FiniteFloatRange(click.FloatRange):
    """범위 검사 + nan / inf 거부"""

    name = "finite float range"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Any:
        rv = super().convert(value, param, ctx)
        if not math.isfinite(rv):
            self.fail(f"{value!r} is not a finite number.", param, ctx)
        return rv


_POSITIVE = FiniteFloatRange(min=0, min_open=True)
_NON_NEGATIVE = FiniteFloatRange(min=0)


@click.group()
@click.version_option(__version__, prog_name="stream-join")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="로그 레벨 (기본값: STREAM_JOIN_LOG_LEVEL)",
)
def cli(log_level: Optional[str]):
    """MSM 축약 기반 시계열 스트림 유사도 조인"""
    if log_level is not None:
        set_level(log_level)


@cli.command()
@click.option("--kind", type=click.Choice([k.value for k in GeneratorKind]), required=True, help="데이터 종류")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="포인트 수")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_path", required=True, help="출력 CSV")
@click.option("--scale", type=_NON_NEGATIVE, default=None, help="[random-walk] 스텝 크기")
@click.option("--radial", is_flag=True, default=False, help="[random-walk] 2차원 워크의 원점 거리")
@click.option("--perimeter", type=_POSITIVE, default=None, help="[random-walk] 이상치 경계 거리")
@click.option("--noise", type=_NON_NEGATIVE, default=None, help="[sensor] 잡음 표준편차")
@click.option("--spikes", "spike_count", type=click.IntRange(min=0), default=None, help="[sensor, random-walk] 스파이크 수")
@click.option("--waypoints", default=None, help='[gps] 경유점 "x0:y0,x1:y1,..."')
@click.option("--jitter", type=_NON_NEGATIVE, default=None, help="[gps] 지터 표준편차")
@click.option("--excursions", "excursion_count", type=click.IntRange(min=0), default=None, help="[gps] 경로 이탈 수")
def gen(kind: str, n: int, seed: int, out_path: str, **options: Any):
    """재현 가능한 합성 시계열 생성"""
    generator_kind = GeneratorKind(kind)
    fields: Dict[str, Any] = {"kind": generator_kind, "n": n, "seed": seed}
    for name, value in options.items():
        if value is None or value is False:
            continue
        kinds = _KIND_OPTIONS[name]
        if generator_kind not in kinds:
            flag = {"spike_count": "spikes", "excursion_count": "excursions"}.get(name, name)
            allowed = " or ".join(k.value for k in kinds)
            raise click.UsageError(f"--{flag} only applies to --kind {allowed}")
        fields[name] = value
    if "waypoints" in fields:
        try:
            fields["waypoints"] = parse_waypoints(fields["waypoints"])
        except SpecFileError as e:
            raise click.BadParameter(e.message, param_hint="--waypoints")

    spec = GeneratorSpec(**fields)
    render.print_config("gen", render.generator_rows(spec) + [("out", out_path)])

    series = generate(spec)
    write_csv(series, out_path)
    if spec.perimeter is not None or spec.spike_count or spec.excursion_count:
        sidecar = outlier_sidecar_path(out_path)
        write_outlier_index(series.outliers, sidecar)
        render.console.print(f"이상치 {len(series.outliers)}건 → {sidecar}")
    render.console.print(f"[green]생성 완료[/green]: {len(series)}행 × {series.dim}차원 → {out_path}")


@cli.command()
@click.option("--in", "in_path", required=True, help="원본 CSV")
@click.option("--out", "out_path", required=True, help="축약 CSV")
@click.option("--seg-size", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("--levels", type=click.IntRange(min=1), default=3, show_default=True)
def reduce(in_path: str, out_path: str, seg_size: int, levels: int):
    """원본 시계열을 MSM으로 축약"""
    config = MsmConfig(seg_size=seg_size, levels=levels)
    render.print_config("reduce", [
        ("in", in_path), ("out", out_path), ("seg_size", seg_size), ("levels", levels),
        ("drf", f"1/{config.block_size}"),
    ])

    series = read_csv(in_path)
    reduced = msm_reduce(series, config)
    write_csv(reduced, out_path)
    render.console.print(render.reduction_table(len(series), reduced))


def _load_stream(path: str) -> ReducedSeries:
    """축약 CSV면 그대로, 원본 CSV면 반경 0으로 올려서"""
    if is_reduced_csv(path):
        return read_reduced_csv(path)
    return lift_raw(read_csv(path))


@cli.command()
@click.option("--in1", "in1", required=True, help="스트림 1 CSV (원본 또는 축약)")
@click.option("--in2", "in2", required=True, help="스트림 2 CSV (원본 또는 축약)")
@click.option("--delta", type=_POSITIVE, required=True, help="거리 임계값 δ")
@click.option("--window", type=click.IntRange(min=1), default=settings.default_wsize, show_default=True)
@click.option(
    "--quantifier",
    type=click.Choice([q.value for q in WindowQuantifier]),
    default=settings.default_quantifier,
    show_default=True,
)
@click.option("--out", "out_path", default=None, help="판정 CSV")
def join(in1: str, in2: str, delta: float, window: int, quantifier: str, out_path: Optional[str]):
    """두 스트림 유사도 조인과 이상치 후보 보고"""
    cfg = JoinConfig(delta=delta, wsize=window, window_quantifier=WindowQuantifier(quantifier))
    render.print_config("join", [
        ("in1", in1), ("in2", in2), ("delta", cfg.delta), ("window", cfg.wsize),
        ("quantifier", cfg.window_quantifier), ("out", out_path),
    ])

    result = run_join(_load_stream(in1), _load_stream(in2), cfg)
    if out_path is not None:
        frame = pd.DataFrame([d.to_dict() for d in result.decisions], columns=DECISION_COLUMNS)
        write_frame(frame, out_path)
    render.console.print(render.stats_table(result.stats))
    render.console.print(render.outlier_panel(result.decisions))


@cli.command()
@click.option("--spec", "spec_path", required=True, help="실험 spec 파일 (key=value)")
@click.option("--out", "out_path", default=None, help="리포트 CSV (.txt 표도 함께 저장)")
@click.option("--timings", is_flag=True, default=False, help="실행 시간 열 포함 (출력이 재현되지 않음)")
def bench(spec_path: str, out_path: Optional[str], timings: bool):
    """원본 대비 축약 실험 한 건"""
    spec = load_experiment_spec(spec_path)
    render.print_config("bench", render.experiment_rows(spec))

    report = run_reduction_experiment(spec)
    render.print_reports([report])
    if out_path is not None:
        report_emit(report, out_path, include_timings=timings)


def _parse_seg_sizes(ctx: click.Context, param: click.Parameter, value: str) -> List[int]:
    try:
        sizes = [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma-separated list of integers")
    if not sizes or any(size < 2 for size in sizes):
        raise click.BadParameter("seg sizes must be integers >= 2")
    return sizes


@cli.command()
@click.option("--spec", "spec_path", required=True, help="실험 spec 파일 (key=value)")
@click.option("--seg-sizes", callback=_parse_seg_sizes, default="2,3,4", show_default=True)
@click.option("--out", "out_path", default=None, help="리포트 CSV (.txt 표도 함께 저장)")
@click.option("--timings", is_flag=True, default=False, help="실행 시간 열 포함 (출력이 재현되지 않음)")
def sweep(spec_path: str, seg_sizes: List[int], out_path: Optional[str], timings: bool):
    """seg_size별 DRF 스윕 (levels는 spec의 msm.levels)"""
    spec = load_experiment_spec(spec_path)
    render.print_config("sweep", list(render.experiment_rows(spec)) + [
        ("seg_sizes", ",".join(str(s) for s in seg_sizes)),
    ])

    reports = run_drf_sweep(spec, seg_sizes, spec.msm.levels)
    render.print_reports(reports)
    if out_path is not None:
        report_emit(reports, out_path, include_timings=timings)


def _usage_failure(error: click.UsageError) -> None:
    context = error.ctx
    synopsis = context.get_usage() if context is not None else "Usage: stream-join [OPTIONS] COMMAND [ARGS]..."
    render.error_console.print(f"error: {error.format_message()}", markup=False)
    render.error_console.print(synopsis, markup=False)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI 실행 후 종료 코드 반환"""
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        result = cli.main(args=args, prog_name="stream-join", standalone_mode=False)
    except click.UsageError as e:
        _usage_failure(e)
        return 1
    except click.Abort:
        render.error_console.print("aborted", markup=False)
        return 1
    except (StreamJoinError, ValidationError, OSError) as e:
        logger.error(f"실행 실패: {e}")
        render.error_console.print(f"error: {_one_line(e)}", markup=False)
        return 2
    # --help / --version 은 종료 코드를 그대로 돌려준다
    return result if isinstance(result, int) else 0


def _one_line(error: Exception) -> str:
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        return f"invalid value for {location}: {first['msg']}"
    return str(error).splitlines()[0] if str(error) else type(error).__name__


def run() -> None:
    """콘솔 스크립트 진입점"""
    sys.exit(main())


if __name__ == "__main__":
    run()
