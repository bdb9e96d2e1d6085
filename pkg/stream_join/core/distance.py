"""Euclidean distance helpers"""

import numpy as np

from ..models.series import PointLike, as_point
from ..utils.errors import DimensionMismatchError


def row_norms(diff: np.ndarray) -> np.ndarray:
    """마지막 축 기준 유클리드 노름

    좌표별로 순서대로 누적하므로 배열 모양과 무관하게 같은 입력에는
    비트 단위로 같은 값이 나온다 (배치/스트리밍 결과 일치에 필요).
    """
    acc = np.zeros(diff.shape[:-1], dtype=np.float64)
    for c in range(diff.shape[-1]):
        acc += diff[..., c] * diff[..., c]
    return np.sqrt(acc)


def euclidean_dist(a: PointLike, b: PointLike) -> float:
    """두 d차원 포인트 사이의 유클리드 거리"""
    pa = as_point(a)
    pb = as_point(b)
    if pa.shape != pb.shape:
        raise DimensionMismatchError(pa.shape[0], pb.shape[0])
    return float(row_norms(pa - pb))
