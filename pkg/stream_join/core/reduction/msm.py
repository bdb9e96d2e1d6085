"""MSM Reduction - 다단계 세그먼트 평균(Multi-level Segment Mean) 축약

원본 시계열을 seg_size 크기의 구간 평균으로 levels번 반복 축약한다.
축약 포인트 k는 원본 [k*B, min((k+1)*B, n)) 구간을 요약한다 (B = seg_size**levels).
"""

from math import ceil
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from ..distance import row_norms
from ...models.config import MsmConfig
from ...models.series import PointLike, RawSeries, ReducedSeries, as_points
from ...utils.logger import setup_logger

logger = setup_logger(__name__)


def _compensated_sums(blocks: np.ndarray) -> np.ndarray:
    """(k, s, d) 블록을 두 번째 축으로 Kahan 보정 합산 → (k, d)"""
    total = np.zeros((blocks.shape[0], blocks.shape[2]), dtype=np.float64)
    carry = np.zeros_like(total)
    for j in range(blocks.shape[1]):
        y = blocks[:, j, :] - carry
        t = total + y
        carry = (t - total) - y
        total = t
    return total


def _block_means(blocks: np.ndarray) -> np.ndarray:
    means = _compensated_sums(blocks) / blocks.shape[1]
    # 반올림 오차로 구간 범위를 벗어나지 않도록 고정 (상수 구간은 정확히 그 값)
    return np.clip(means, blocks.min(axis=1), blocks.max(axis=1))


def _segment_means(values: np.ndarray, seg_size: int) -> Tuple[np.ndarray, int]:
    """한 단계 구간 평균. (평균 배열, 이번 단계에서 누적한 값의 수) 반환"""
    n, d = values.shape
    full = n // seg_size
    rest = n - full * seg_size

    out = np.empty((full + (1 if rest else 0), d), dtype=np.float64)
    if full:
        out[:full] = _block_means(values[: full * seg_size].reshape(full, seg_size, d))
    if rest:
        # 마지막 부분 구간은 실제 크기로 평균
        out[full] = _block_means(values[full * seg_size:].reshape(1, rest, d))[0]
    return out, n


def segment_means(
    series: Union[Iterable[PointLike], np.ndarray],
    seg_size: int
) -> np.ndarray:
    """연속된 seg_size개 포인트마다 좌표별 산술 평균을 구한다

    Returns:
        ceil(n / seg_size)개의 포인트, shape (m, d)
    """
    if seg_size < 2:
        raise ValueError("seg_size must be >= 2")
    values = as_points(series)
    means, _ = _segment_means(values, seg_size)
    return means


def dim_reduced_len(source_len: int, config: MsmConfig) -> int:
    """msm_reduce 결과 길이 (단계마다 올림)"""
    if source_len < 1:
        raise ValueError("source_len must be >= 1")
    n = source_len
    for _ in range(config.levels):
        n = ceil(n / config.seg_size)
    return n


def drf(config: MsmConfig) -> float:
    """차원 축약 비율 DRF = 1 / seg_size**levels"""
    return 1.0 / config.block_size


def _reduce_values(values: np.ndarray, config: MsmConfig) -> Tuple[np.ndarray, np.ndarray, int]:
    """(n, d) 원본 → (중심, 반경, 누적 횟수)"""
    centers = values
    accumulations = 0
    for _ in range(config.levels):
        centers, count = _segment_means(centers, config.seg_size)
        accumulations += count

    n, d = values.shape
    block = config.block_size
    full = n // block
    radii = np.empty(centers.shape[0], dtype=np.float64)
    if full:
        spans = values[: full * block].reshape(full, block, d)
        radii[:full] = row_norms(spans - centers[:full, None, :]).max(axis=1)
    if full < centers.shape[0]:
        tail = values[full * block:]
        radii[full] = row_norms(tail - centers[full]).max()
    return centers, radii, accumulations


def msm_reduce(series: Union[RawSeries, Sequence[PointLike], np.ndarray], config: MsmConfig) -> ReducedSeries:
    """원본 시계열을 MSM으로 축약 (levels번 segment_means 적용)

    각 축약 포인트는 원본 구간과, 최종 중심에서 구간 내 원본 포인트까지의
    최대 거리(반경)를 함께 기록한다.
    """
    values = series.values if isinstance(series, RawSeries) else as_points(series)
    values = as_points(values)

    centers, radii, accumulations = _reduce_values(values, config)

    n = values.shape[0]
    block = config.block_size
    starts = np.arange(centers.shape[0], dtype=np.int64) * block
    counts = np.minimum(starts + block, n) - starts

    reduced = ReducedSeries(
        centers=centers,
        radii=radii,
        raw_starts=starts,
        raw_counts=counts,
        config=config,
        source_len=n,
        accumulations=accumulations,
    )
    logger.debug(
        f"MSM 축약 완료: {n} → {len(reduced)} (seg_size={config.seg_size}, "
        f"levels={config.levels}, DRF={drf(config):.6g})"
    )
    return reduced


def lift_raw(series: Union[RawSeries, Sequence[PointLike], np.ndarray]) -> ReducedSeries:
    """원본을 축약 없이 그대로 올림 (반경 0, 포인트당 원본 1개)"""
    values = series.values if isinstance(series, RawSeries) else as_points(series)
    values = as_points(values)
    n = values.shape[0]
    return ReducedSeries(
        centers=values,
        radii=np.zeros(n),
        raw_starts=np.arange(n, dtype=np.int64),
        raw_counts=np.ones(n, dtype=np.int64),
        config=None,
        source_len=n,
    )


def variance_retention(series: Union[RawSeries, np.ndarray], config: MsmConfig) -> float:
    """축약 중심의 분산 / 원본 분산 (좌표별 분산 합 기준)"""
    values = series.values if isinstance(series, RawSeries) else as_points(series)
    raw_var = float(np.var(values, axis=0).sum())
    if raw_var == 0.0:
        return 1.0
    centers, _, _ = _reduce_values(as_points(values), config)
    return float(np.var(centers, axis=0).sum()) / raw_var


def suggest_seg_size(
    series: Union[RawSeries, np.ndarray],
    levels: int,
    candidates: Sequence[int] = (2, 3, 4),
    min_retention: float = 0.9
) -> int:
    """분산 보존률이 min_retention 이상인 가장 큰 seg_size 추천

    분산이 작은 데이터는 큰 seg_size에도 패턴 손실이 적고,
    분산이 큰 데이터는 작은 seg_size가 필요하다.
    """
    ordered = sorted(set(candidates))
    if not ordered:
        raise ValueError("no seg_size candidates")
    for seg_size in reversed(ordered):
        retention = variance_retention(series, MsmConfig(seg_size=seg_size, levels=levels))
        if retention >= min_retention:
            return seg_size
    logger.info(f"분산 보존 기준({min_retention})을 만족하는 seg_size 없음 - 최소값 사용")
    return ordered[0]
