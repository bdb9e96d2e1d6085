"""DRSP Pipeline - 1단계(MSM 축약) + 2단계(유사도 매칭과 가지치기)"""

from collections import deque
from typing import Deque, List, Optional

from .join.similarity_join import JoinSession, run_join
from .reduction.msm import msm_reduce
from .reduction.streaming import MsmStreamReducer
from ..models.config import JoinConfig, MsmConfig
from ..models.decisions import JoinResult, PairDecision
from ..models.series import PointLike, RawSeries, ReducedPoint
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def drsp(raw1: RawSeries, raw2: RawSeries, msm: MsmConfig, join: JoinConfig) -> JoinResult:
    """두 원본 스트림을 축약한 뒤 조인 (배치)"""
    reduced1 = msm_reduce(raw1, msm)
    reduced2 = msm_reduce(raw2, msm)
    logger.debug(f"DRSP 1단계 완료: {len(raw1)}/{len(raw2)} → {len(reduced1)}/{len(reduced2)}")
    return run_join(reduced1, reduced2, join)


class StreamingDrsp:
    """
    원본 포인트 쌍을 하나씩 받아 처리하는 스트리밍 DRSP

    각 스트림을 MsmStreamReducer로 축약하고, 축약 쌍이 준비될 때마다
    조인 세션에 넣는다. 처음 wsize개 축약 쌍은 윈도우 시드로 쓰인다.
    """

    def __init__(self, msm: MsmConfig, join: JoinConfig):
        self.msm = msm
        self.join = join
        self.reducer1 = MsmStreamReducer(msm)
        self.reducer2 = MsmStreamReducer(msm)
        self.session = JoinSession(join)
        self.decisions: List[PairDecision] = []
        self._pending1: Deque[ReducedPoint] = deque()
        self._pending2: Deque[ReducedPoint] = deque()
        self._next_index = 0

    def push(self, p1: PointLike, p2: PointLike) -> List[PairDecision]:
        """원본 쌍 하나 입력, 새로 나온 판정 목록 반환"""
        self._enqueue(self.reducer1.push(p1), self.reducer2.push(p2))
        return self._drain()

    def finish(self) -> List[PairDecision]:
        """남은 부분 블록을 내보내고 마지막 판정 반환"""
        self._enqueue(self.reducer1.flush(), self.reducer2.flush())
        return self._drain()

    def _enqueue(self, r1: Optional[ReducedPoint], r2: Optional[ReducedPoint]) -> None:
        if r1 is not None:
            self._pending1.append(r1)
        if r2 is not None:
            self._pending2.append(r2)

    def _drain(self) -> List[PairDecision]:
        emitted = []
        while self._pending1 and self._pending2:
            x = self._pending1.popleft()
            y = self._pending2.popleft()
            if self._next_index < self.join.wsize:
                self.session.seed(x, y)
            else:
                decision = self.session.offer(x, y, index=self._next_index)
                self.decisions.append(decision)
                emitted.append(decision)
            self._next_index += 1
        return emitted

    @property
    def stats(self):
        return self.session.stats

    def result(self) -> JoinResult:
        return JoinResult(decisions=list(self.decisions), stats=self.session.stats)
