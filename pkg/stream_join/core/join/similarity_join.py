"""Similarity Matching and Pruning Engine - 유클리드 거리 매칭 + 초구 가지치기

새로 들어온 쌍 {x_new, y_new}에 대해:
1. 쌍 거리 검사 (> δ 이면 거리 탈락)
2. 상대 스트림 윈도우의 각 포인트와 가지치기 보조정리 적용
   dist(Cen(p), Cen(q)) - Rad(p) - Rad(q) > δ 이면 (p, q) 가지치기
3. 매칭되면 두 윈도우를 한 칸씩 이동, 아니면 이상치 후보로 보고
"""

from typing import List, Optional

import numpy as np

from .window import SlidingWindow
from ..distance import euclidean_dist, row_norms
from ...models.config import JoinConfig, WindowQuantifier
from ...models.decisions import JoinResult, JoinStats, PairDecision, Verdict
from ...models.series import ReducedPoint, ReducedSeries
from ...utils.errors import DimensionMismatchError, EmptySeriesError
from ...utils.logger import setup_logger

logger = setup_logger(__name__)


def is_prunable(p: ReducedPoint, q: ReducedPoint, delta: float) -> bool:
    """가지치기 보조정리: 중심 거리에서 두 반경을 뺀 하한이 δ를 넘으면 True

    반경이 요약 구간의 모든 원본 포인트를 감싸므로 True인 경우
    두 구간의 어떤 원본 쌍도 δ 이내일 수 없다 (삼각 부등식).
    """
    if p.dim != q.dim:
        raise DimensionMismatchError(p.dim, q.dim)
    return euclidean_dist(p.center, q.center) - p.radius - q.radius > delta


def _check_dims(x_new: ReducedPoint, y_new: ReducedPoint, win1: SlidingWindow, win2: SlidingWindow) -> None:
    for dim in (y_new.dim, win1.dim, win2.dim):
        if dim != x_new.dim:
            raise DimensionMismatchError(x_new.dim, dim)


def process_pair(
    x_new: ReducedPoint,
    y_new: ReducedPoint,
    win1: SlidingWindow,
    win2: SlidingWindow,
    cfg: JoinConfig,
    index: int = -1
) -> PairDecision:
    """새 쌍 하나를 판정하고, 매칭이면 윈도우를 이동한다"""
    _check_dims(x_new, y_new, win1, win2)

    pair_distance = float(row_norms(x_new.center - y_new.center))
    if pair_distance > cfg.delta:
        return PairDecision(
            verdict=Verdict.DISTANCE_REJECTED,
            pair_distance=pair_distance,
            cross_checks=0,
            pruned_cross_pairs=0,
            index=index,
            raw_start=x_new.raw_start,
            raw_count=x_new.raw_count,
        )

    # {x_new, y_i}: y_i ∈ Win(T2)
    bound_y = row_norms(x_new.center - win2.centers) - x_new.radius - win2.radii
    pruned_y = bound_y > cfg.delta
    # {x_j, y_new}: x_j ∈ Win(T1)
    bound_x = row_norms(win1.centers - y_new.center) - win1.radii - y_new.radius
    pruned_x = bound_x > cfg.delta

    cross_checks = len(win1) + len(win2)
    pruned_count = int(np.count_nonzero(pruned_y) + np.count_nonzero(pruned_x))

    if cfg.window_quantifier is WindowQuantifier.ALL:
        matched = pruned_count == 0
    else:
        # 빈 윈도우 쪽은 검사 대상이 없으므로 통과로 본다
        survives_y = win2.is_empty() or not bool(pruned_y.all())
        survives_x = win1.is_empty() or not bool(pruned_x.all())
        matched = survives_y and survives_x

    if matched:
        win1.append(x_new)
        win2.append(y_new)

    return PairDecision(
        verdict=Verdict.MATCHED if matched else Verdict.PRUNED,
        pair_distance=pair_distance,
        cross_checks=cross_checks,
        pruned_cross_pairs=pruned_count,
        index=index,
        raw_start=x_new.raw_start,
        raw_count=x_new.raw_count,
    )


class JoinSession:
    """두 스트림의 윈도우와 누적 통계를 소유하는 조인 세션 (단일 스레드)"""

    def __init__(self, cfg: JoinConfig, dim: Optional[int] = None):
        self.cfg = cfg
        self.stats = JoinStats()
        self.win1: Optional[SlidingWindow] = None
        self.win2: Optional[SlidingWindow] = None
        self.outliers: List[PairDecision] = []
        self._seeded = 0
        if dim is not None:
            self._open(dim)

    def _open(self, dim: int) -> None:
        self.win1 = SlidingWindow(self.cfg.wsize, dim)
        self.win2 = SlidingWindow(self.cfg.wsize, dim)

    def _ensure_open(self, x: ReducedPoint, y: ReducedPoint) -> None:
        if x.dim != y.dim:
            raise DimensionMismatchError(x.dim, y.dim)
        if self.win1 is None:
            self._open(x.dim)

    @property
    def warming_up(self) -> bool:
        """시드 포인트로 윈도우를 채우는 중인지"""
        return self._seeded < self.cfg.wsize

    def seed(self, x: ReducedPoint, y: ReducedPoint) -> None:
        """판정 없이 윈도우에 시드 쌍 추가"""
        self._ensure_open(x, y)
        self.win1.append(x)
        self.win2.append(y)
        self._seeded += 1

    def offer(self, x: ReducedPoint, y: ReducedPoint, index: int = -1) -> PairDecision:
        """새 쌍 판정 후 통계 반영"""
        self._ensure_open(x, y)
        decision = process_pair(x, y, self.win1, self.win2, self.cfg, index=index)
        self.stats.record(decision)
        if decision.is_outlier:
            self.outliers.append(decision)
        return decision


def run_join(reduced1: ReducedSeries, reduced2: ReducedSeries, cfg: JoinConfig) -> JoinResult:
    """두 축약 스트림 전체에 대해 조인 실행

    처음 wsize개 쌍은 윈도우 시드로만 쓰이고 판정을 만들지 않는다.
    길이가 다르면 짧은 쪽에 맞춘다.
    """
    if len(reduced1) == 0 or len(reduced2) == 0:
        raise EmptySeriesError()
    if reduced1.dim != reduced2.dim:
        raise DimensionMismatchError(reduced1.dim, reduced2.dim)

    n = min(len(reduced1), len(reduced2))
    if len(reduced1) != len(reduced2):
        logger.warning(f"스트림 길이 불일치 ({len(reduced1)} vs {len(reduced2)}) - {n}개로 맞춤")

    session = JoinSession(cfg, dim=reduced1.dim)
    seed_count = min(cfg.wsize, n)
    for i in range(seed_count):
        session.seed(reduced1[i], reduced2[i])

    result = JoinResult(stats=session.stats)
    for i in range(seed_count, n):
        result.decisions.append(session.offer(reduced1[i], reduced2[i], index=i))

    logger.info(
        f"조인 완료: 판정 {result.stats.pairs_seen}건, 매칭 {result.stats.matched_pct:.2f}% "
        f"(δ={cfg.delta:.6g}, wsize={cfg.wsize}, {cfg.window_quantifier.value})"
    )
    return result
