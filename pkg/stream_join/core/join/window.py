"""Sliding Window - 최근 wsize개 축약 포인트를 보관하는 고정 크기 링 버퍼"""

from typing import List, Tuple

import numpy as np

from ...models.series import ReducedPoint
from ...utils.errors import DimensionMismatchError


class SlidingWindow:
    """
    스트림 하나의 슬라이딩 윈도우 Win(T)

    중심/반경을 numpy 링 배열로 보관해 교차 검사를 벡터 연산으로 처리한다.
    가득 찬 상태에서 추가하면 가장 오래된 포인트 하나가 밀려난다.
    """

    def __init__(self, wsize: int, dim: int):
        if wsize < 1:
            raise ValueError("wsize must be >= 1")
        self.wsize = wsize
        self.dim = dim
        self._centers = np.zeros((wsize, dim), dtype=np.float64)
        self._radii = np.zeros(wsize, dtype=np.float64)
        self._raw_starts = np.zeros(wsize, dtype=np.int64)
        self._raw_counts = np.zeros(wsize, dtype=np.int64)
        self._head = 0   # 다음에 쓸 위치 (= 가득 찼을 때 가장 오래된 위치)
        self._count = 0

    def append(self, point: ReducedPoint) -> None:
        if point.dim != self.dim:
            raise DimensionMismatchError(self.dim, point.dim)
        self._centers[self._head] = point.center
        self._radii[self._head] = point.radius
        self._raw_starts[self._head] = point.raw_start
        self._raw_counts[self._head] = point.raw_count
        self._head = (self._head + 1) % self.wsize
        self._count = min(self._count + 1, self.wsize)

    def __len__(self) -> int:
        return self._count

    def is_full(self) -> bool:
        return self._count == self.wsize

    def is_empty(self) -> bool:
        return self._count == 0

    @property
    def centers(self) -> np.ndarray:
        """유효 구간의 중심 (순서 무관 검사용 뷰)"""
        return self._centers[: self._count]

    @property
    def radii(self) -> np.ndarray:
        return self._radii[: self._count]

    def _order(self) -> np.ndarray:
        if self._count < self.wsize:
            return np.arange(self._count)
        return (np.arange(self.wsize) + self._head) % self.wsize

    def items(self) -> List[ReducedPoint]:
        """오래된 것 → 최신 순서의 포인트 목록"""
        return [
            ReducedPoint(
                center=self._centers[i],
                raw_start=int(self._raw_starts[i]),
                raw_count=int(self._raw_counts[i]),
                radius=float(self._radii[i]),
            )
            for i in self._order()
        ]

    def snapshot(self) -> Tuple[bytes, int, int]:
        """윈도우 상태의 바이트 스냅샷 (변경 여부 비교용)"""
        payload = b"".join(
            a.tobytes() for a in (self._centers, self._radii, self._raw_starts, self._raw_counts)
        )
        return payload, self._head, self._count
