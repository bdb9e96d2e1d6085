"""Series models - 원본 / 축약 시계열 데이터 모델"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import MsmConfig
from ..utils.errors import DimensionMismatchError, EmptySeriesError, NonFiniteValueError

PointLike = Union[float, Sequence[float], np.ndarray]


def as_point(value: PointLike) -> np.ndarray:
    """스칼라 또는 좌표 시퀀스를 1차원 float64 배열로 변환"""
    point = np.atleast_1d(np.asarray(value, dtype=np.float64))
    if point.ndim != 1 or point.size == 0:
        raise DimensionMismatchError()
    if not np.all(np.isfinite(point)):
        raise NonFiniteValueError("non-finite coordinate")
    return point


def as_points(values: Union[Iterable[PointLike], np.ndarray]) -> np.ndarray:
    """포인트 목록을 (n, d) float64 배열로 변환 (모든 포인트가 같은 차원이어야 함)"""
    if isinstance(values, np.ndarray):
        array = values.astype(np.float64, copy=False)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
    else:
        rows = [np.atleast_1d(np.asarray(v, dtype=np.float64)) for v in values]
        if not rows:
            raise EmptySeriesError()
        dims = {row.shape for row in rows}
        if len(dims) != 1:
            raise DimensionMismatchError()
        array = np.vstack(rows)

    if array.ndim != 2:
        raise DimensionMismatchError()
    if array.shape[0] == 0:
        raise EmptySeriesError()
    if not np.all(np.isfinite(array)):
        raise NonFiniteValueError("non-finite coordinate")
    return array


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class RawSeries:
    """주기적으로 수집된 d차원 원본 시계열 (인덱스 = 시점 t)"""
    values: np.ndarray
    outliers: Tuple[int, ...] = ()  # 생성기가 주입한 이상치 시점 (ground truth)

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))
        object.__setattr__(self, "outliers", tuple(sorted(int(i) for i in self.outliers)))

    @classmethod
    def from_points(
        cls,
        points: Union[Iterable[PointLike], np.ndarray],
        outliers: Iterable[int] = ()
    ) -> "RawSeries":
        return cls(values=as_points(points), outliers=tuple(outliers))

    @classmethod
    def empty(cls, dim: int) -> "RawSeries":
        """헤더만 있는 CSV 등을 위한 빈 시계열"""
        return cls(values=np.empty((0, dim), dtype=np.float64))

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True, eq=False)
class ReducedPoint:
    """MSM 축약 포인트 - 중심(평균)과 반경으로 이루어진 초구(hypersphere) 요약"""
    center: np.ndarray
    raw_start: int
    raw_count: int
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _frozen(as_point(self.center)))
        if self.radius < 0:
            raise ValueError("radius must be non-negative")

    @property
    def dim(self) -> int:
        return self.center.shape[0]

    @property
    def raw_stop(self) -> int:
        return self.raw_start + self.raw_count

    def same_as(self, other: "ReducedPoint") -> bool:
        """필드 단위 정확 비교"""
        return (
            self.raw_start == other.raw_start
            and self.raw_count == other.raw_count
            and self.radius == other.radius
            and np.array_equal(self.center, other.center)
        )

    def to_dict(self) -> dict:
        return {
            "center": self.center.tolist(),
            "raw_start": self.raw_start,
            "raw_count": self.raw_count,
            "radius": self.radius,
        }


@dataclass(frozen=True, eq=False)
class ReducedSeries:
    """MSM 축약 결과 (열 단위 저장)"""
    centers: np.ndarray         # (m, d)
    radii: np.ndarray           # (m,)
    raw_starts: np.ndarray      # (m,)
    raw_counts: np.ndarray      # (m,)
    config: Optional[MsmConfig]  # 원본을 그대로 올린 경우 None
    source_len: int
    accumulations: int = 0      # 구간 합에 누적한 값의 수 (단계별 입력 길이의 합)

    def __post_init__(self):
        object.__setattr__(self, "centers", _frozen(np.asarray(self.centers, dtype=np.float64)))
        object.__setattr__(self, "radii", _frozen(np.asarray(self.radii, dtype=np.float64)))
        object.__setattr__(self, "raw_starts", _frozen(np.asarray(self.raw_starts, dtype=np.int64)))
        object.__setattr__(self, "raw_counts", _frozen(np.asarray(self.raw_counts, dtype=np.int64)))
        m = self.centers.shape[0]
        if not (self.radii.shape == self.raw_starts.shape == self.raw_counts.shape == (m,)):
            raise ValueError("reduced series columns have inconsistent lengths")

    @classmethod
    def from_points(
        cls,
        points: Sequence[ReducedPoint],
        config: Optional[MsmConfig],
        source_len: Optional[int] = None,
        accumulations: int = 0
    ) -> "ReducedSeries":
        if not points:
            raise EmptySeriesError()
        dims = {p.dim for p in points}
        if len(dims) != 1:
            raise DimensionMismatchError()
        if source_len is None:
            source_len = points[-1].raw_stop
        return cls(
            centers=np.vstack([p.center for p in points]),
            radii=np.array([p.radius for p in points]),
            raw_starts=np.array([p.raw_start for p in points]),
            raw_counts=np.array([p.raw_count for p in points]),
            config=config,
            source_len=source_len,
            accumulations=accumulations,
        )

    def __len__(self) -> int:
        return self.centers.shape[0]

    def __getitem__(self, index: int) -> ReducedPoint:
        return ReducedPoint(
            center=self.centers[index],
            raw_start=int(self.raw_starts[index]),
            raw_count=int(self.raw_counts[index]),
            radius=float(self.radii[index]),
        )

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    @property
    def dim(self) -> int:
        return self.centers.shape[1]


@dataclass
class BlockBuffer:
    """스트리밍 MSM용 누적 버퍼 (열린 블록의 원본 포인트만 보관)"""
    points: List[np.ndarray] = field(default_factory=list)
    next_raw_start: int = 0
    dim: Optional[int] = None

    def __len__(self) -> int:
        return len(self.points)
