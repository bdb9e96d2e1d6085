"""Benchmark Harness - 원본 대비 축약 조인 실험

원본 스트림(반경 0, 윈도우 wsize_original)과 MSM 축약 스트림
(윈도우 round(drf * wsize_original))에 같은 δ로 조인을 돌려
매칭률과 가지치기 검사 횟수를 비교한다.
"""

import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .report import ExperimentReport
from .spec_file import ExperimentSpec
from ..core.join.similarity_join import run_join
from ..core.reduction.msm import drf, lift_raw, msm_reduce
from ..models.config import JoinConfig, MsmConfig, WindowQuantifier
from ..models.decisions import JoinResult, PairDecision
from ..models.series import RawSeries, ReducedSeries
from ..utils.errors import EmptySeriesError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class CalibrationResult:
    """δ 보정 결과"""
    delta: float
    matched_pct: float
    converged: bool
    iterations: int


@dataclass(frozen=True)
class OutlierScore:
    """주입된 이상치 대비 판정 품질"""
    precision: float    # 이상치 판정 중 실제 이상치 구간을 포함한 비율
    recall: float       # 실제 이상치 중 이상치 판정 구간에 들어간 비율
    flagged: int
    detected: int


@dataclass
class _RunOutcome:
    result: JoinResult
    size: int
    wsize: int
    wall_time: float


def reduced_window(wsize_original: int, msm: MsmConfig) -> int:
    """축약 실행의 윈도우 크기 round(drf * wsize_original), 최소 1"""
    return max(1, round(drf(msm) * wsize_original))


def _timed_join(reduced1: ReducedSeries, reduced2: ReducedSeries, cfg: JoinConfig) -> Tuple[JoinResult, float]:
    started = time.perf_counter()
    result = run_join(reduced1, reduced2, cfg)
    return result, time.perf_counter() - started


def matched_pct_for_delta(
    stream1: RawSeries,
    stream2: RawSeries,
    delta: float,
    wsize: int,
    quantifier: WindowQuantifier = WindowQuantifier.EXISTS
) -> float:
    """원본 스트림 조인 한 번의 매칭률 (%)"""
    cfg = JoinConfig(delta=delta, wsize=wsize, window_quantifier=quantifier)
    return run_join(lift_raw(stream1), lift_raw(stream2), cfg).stats.matched_pct


def _search_ceiling(stream1: RawSeries, stream2: RawSeries) -> float:
    """모든 쌍 거리보다 큰 δ (두 스트림 값 범위의 대각선 + 1)"""
    values = np.vstack([stream1.values, stream2.values])
    span = values.max(axis=0) - values.min(axis=0)
    return float(np.linalg.norm(span)) + 1.0


def calibrate_delta(
    stream1: RawSeries,
    stream2: RawSeries,
    target_pct: float,
    wsize: int,
    quantifier: WindowQuantifier = WindowQuantifier.EXISTS,
    tolerance: float = 1.0,
    max_iter: int = 60
) -> CalibrationResult:
    """
    원본 스트림 매칭률이 target_pct ± tolerance가 되는 δ를 이분 탐색

    가지치기 때문에 매칭률이 δ에 단조롭지 않을 수 있다. 수렴하지 못하면
    목표에 가장 가까웠던 δ를 converged=False로 돌려준다.
    """
    if not 0.0 <= target_pct <= 100.0:
        raise ValueError("target_pct must be within [0, 100]")
    if len(stream1) == 0 or len(stream2) == 0:
        raise EmptySeriesError()

    lifted1, lifted2 = lift_raw(stream1), lift_raw(stream2)
    lo, hi = 0.0, _search_ceiling(stream1, stream2)
    best: Optional[Tuple[float, float]] = None

    for iteration in range(1, max_iter + 1):
        mid = (lo + hi) / 2.0
        cfg = JoinConfig(delta=mid, wsize=wsize, window_quantifier=quantifier)
        pct = run_join(lifted1, lifted2, cfg).stats.matched_pct
        logger.debug(f"δ 보정 {iteration}: δ={mid:.6g} → {pct:.2f}%")

        if abs(pct - target_pct) <= tolerance:
            return CalibrationResult(delta=mid, matched_pct=pct, converged=True, iterations=iteration)
        if best is None or abs(pct - target_pct) < abs(best[1] - target_pct):
            best = (mid, pct)
        if pct < target_pct:
            lo = mid
        else:
            hi = mid

    logger.warning(
        f"δ 보정 실패: 목표 {target_pct:.2f}%에 도달하지 못함 "
        f"(최선 δ={best[0]:.6g}, {best[1]:.2f}%)"
    )
    return CalibrationResult(delta=best[0], matched_pct=best[1], converged=False, iterations=max_iter)


def score_outliers(decisions: Sequence[PairDecision], truth: Iterable[int]) -> OutlierScore:
    """이상치 판정 구간과 실제 이상치 시점 비교

    판정이 없으면 precision 0, 실제 이상치가 없으면 recall 0.
    """
    ticks = np.array(sorted(set(truth)), dtype=np.int64)
    flagged = [d for d in decisions if d.is_outlier]
    starts = np.array([d.raw_start for d in flagged], dtype=np.int64)
    stops = np.array([d.raw_start + d.raw_count for d in flagged], dtype=np.int64)

    hits = np.searchsorted(ticks, stops) - np.searchsorted(ticks, starts)
    true_flags = int(np.count_nonzero(hits > 0))

    # 판정 구간은 서로 겹치지 않고 인덱스 순으로 정렬되어 있다
    detected = 0
    if starts.size and ticks.size:
        slot = np.searchsorted(starts, ticks, side="right") - 1
        inside = (slot >= 0) & (ticks < stops[np.maximum(slot, 0)])
        detected = int(np.count_nonzero(inside))

    return OutlierScore(
        precision=true_flags / len(flagged) if flagged else 0.0,
        recall=detected / ticks.size if ticks.size else 0.0,
        flagged=len(flagged),
        detected=detected,
    )


def _truth(raw1: RawSeries, raw2: RawSeries) -> List[int]:
    return sorted(set(raw1.outliers) | set(raw2.outliers))


def _resolve_delta(spec: ExperimentSpec, raw1: RawSeries, raw2: RawSeries) -> float:
    if spec.delta is not None:
        return spec.delta
    calibration = calibrate_delta(
        raw1, raw2, spec.target_pct, spec.wsize_original, spec.window_quantifier
    )
    logger.info(
        f"δ 보정: 목표 {spec.target_pct:.2f}% → δ={calibration.delta:.6g} "
        f"({calibration.matched_pct:.2f}%, {calibration.iterations}회)"
    )
    return calibration.delta


def _run_original(spec: ExperimentSpec, raw1: RawSeries, raw2: RawSeries, delta: float) -> _RunOutcome:
    result, wall = _timed_join(lift_raw(raw1), lift_raw(raw2), spec.join_config(delta))
    return _RunOutcome(result=result, size=len(raw1), wsize=spec.wsize_original, wall_time=wall)


def _run_reduced(spec: ExperimentSpec, raw1: RawSeries, raw2: RawSeries, delta: float) -> _RunOutcome:
    wsize = reduced_window(spec.wsize_original, spec.msm)
    started = time.perf_counter()
    reduced1 = msm_reduce(raw1, spec.msm)
    reduced2 = msm_reduce(raw2, spec.msm)
    result = run_join(reduced1, reduced2, spec.join_config(delta, wsize=wsize))
    return _RunOutcome(result=result, size=len(reduced1), wsize=wsize, wall_time=time.perf_counter() - started)


def _build_report(
    spec: ExperimentSpec,
    delta: float,
    size_original: int,
    truth: List[int],
    reduced: _RunOutcome,
    original: Optional[_RunOutcome]
) -> ExperimentReport:
    score = score_outliers(reduced.result.decisions, truth) if truth else None
    stats = reduced.result.stats
    report = ExperimentReport(
        label=spec.label,
        seg_size=spec.msm.seg_size,
        levels=spec.msm.levels,
        drf=drf(spec.msm),
        delta=delta,
        size_original=size_original,
        size_reduced=reduced.size,
        wsize_original=spec.wsize_original,
        wsize_reduced=reduced.wsize,
        decisions_reduced=stats.pairs_seen,
        matched_pct_reduced=stats.matched_pct,
        cross_checks_reduced=stats.total_cross_checks,
        outlier_precision=score.precision if score else None,
        outlier_recall=score.recall if score else None,
        wall_time_reduced=reduced.wall_time,
    )
    if original is not None:
        report.decisions_original = original.result.stats.pairs_seen
        report.matched_pct_original = original.result.stats.matched_pct
        report.cross_checks_original = original.result.stats.total_cross_checks
        report.wall_time_original = original.wall_time
    return report


def run_reduction_experiment(
    spec: ExperimentSpec,
    streams: Optional[Tuple[RawSeries, RawSeries]] = None
) -> ExperimentReport:
    """원본 실행과 축약 실행을 비교한 리포트 한 건

    δ가 spec에 없으면 원본 스트림에서 target_pct로 보정한다.
    """
    raw1, raw2 = streams if streams is not None else spec.load_streams()
    delta = _resolve_delta(spec, raw1, raw2)

    original = _run_original(spec, raw1, raw2, delta) if spec.compare_original else None
    reduced = _run_reduced(spec, raw1, raw2, delta)
    report = _build_report(spec, delta, len(raw1), _truth(raw1, raw2), reduced, original)

    logger.info(
        f"실험 완료 [{spec.label}] DRF=1/{spec.msm.block_size}: "
        f"원본 {'-' if original is None else f'{report.matched_pct_original:.2f}%'} / "
        f"축약 {report.matched_pct_reduced:.2f}%"
    )
    return report


def run_drf_sweep(
    base_spec: ExperimentSpec,
    seg_sizes: Sequence[int],
    levels: int,
    streams: Optional[Tuple[RawSeries, RawSeries]] = None
) -> List[ExperimentReport]:
    """seg_size별 실험 (δ와 원본 실행은 한 번만), DRF 내림차순 정렬"""
    if not seg_sizes:
        raise ValueError("seg_sizes must not be empty")
    raw1, raw2 = streams if streams is not None else base_spec.load_streams()
    delta = _resolve_delta(base_spec, raw1, raw2)
    truth = _truth(raw1, raw2)

    original = _run_original(base_spec, raw1, raw2, delta) if base_spec.compare_original else None

    reports = []
    for seg_size in sorted(set(seg_sizes)):
        spec = base_spec.with_msm(MsmConfig(seg_size=seg_size, levels=levels))
        report = _build_report(spec, delta, len(raw1), truth, _run_reduced(spec, raw1, raw2, delta), original)
        reports.append(report)

    reports.sort(key=lambda r: r.drf, reverse=True)
    logger.info(f"DRF 스윕 완료: {len(reports)}건 (δ={delta:.6g})")
    return reports
