"""Streaming MSM - 블록 버퍼 기반 점진적 축약

seg_size**levels개 원본 포인트가 모이면 블록 하나를 배치 msm_reduce와
같은 방식으로 축약해 ReducedPoint 하나를 내보낸다. 각 단계의 구간 경계가
블록 경계와 일치하므로 블록별 결과를 이어 붙이면 배치 결과와 같다.
"""

from typing import List, Optional

import numpy as np

from .msm import _reduce_values
from ...models.config import MsmConfig
from ...models.series import BlockBuffer, PointLike, ReducedPoint, as_point
from ...utils.errors import DimensionMismatchError


def _emit(buffer: BlockBuffer, config: MsmConfig) -> ReducedPoint:
    block = np.vstack(buffer.points)
    centers, radii, _ = _reduce_values(block, config)
    reduced = ReducedPoint(
        center=centers[0],
        raw_start=buffer.next_raw_start,
        raw_count=block.shape[0],
        radius=float(radii[0]),
    )
    buffer.next_raw_start += block.shape[0]
    buffer.points.clear()
    return reduced


def msm_stream_step(
    buffer: BlockBuffer,
    incoming: PointLike,
    config: MsmConfig
) -> Optional[ReducedPoint]:
    """포인트 하나를 버퍼에 추가하고, 블록이 차면 축약 포인트를 반환"""
    point = as_point(incoming)
    if buffer.dim is None:
        buffer.dim = point.shape[0]
    elif point.shape[0] != buffer.dim:
        raise DimensionMismatchError(buffer.dim, point.shape[0])

    buffer.points.append(point)
    if len(buffer.points) >= config.block_size:
        return _emit(buffer, config)
    return None


def msm_stream_flush(buffer: BlockBuffer, config: MsmConfig) -> Optional[ReducedPoint]:
    """남은 부분 블록을 명시적으로 내보낸다 (배치의 부분 구간 규칙과 동일)"""
    if not buffer.points:
        return None
    return _emit(buffer, config)


class MsmStreamReducer:
    """스트림 하나에 대한 MSM 축약기 (단일 스레드, 인스턴스 간 공유 상태 없음)"""

    def __init__(self, config: MsmConfig):
        self.config = config
        self.buffer = BlockBuffer()
        self.emitted_count = 0

    def push(self, point: PointLike) -> Optional[ReducedPoint]:
        reduced = msm_stream_step(self.buffer, point, self.config)
        if reduced is not None:
            self.emitted_count += 1
        return reduced

    def flush(self) -> Optional[ReducedPoint]:
        reduced = msm_stream_flush(self.buffer, self.config)
        if reduced is not None:
            self.emitted_count += 1
        return reduced

    def extend(self, points) -> List[ReducedPoint]:
        """여러 포인트를 넣고 방출된 축약 포인트 목록 반환"""
        emitted = []
        for point in points:
            reduced = self.push(point)
            if reduced is not None:
                emitted.append(reduced)
        return emitted

    @property
    def pending(self) -> int:
        """아직 블록이 닫히지 않은 원본 포인트 수"""
        return len(self.buffer)
