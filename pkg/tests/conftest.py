"""Pytest fixtures for Stream Join tests"""

from pathlib import Path
from typing import Sequence

import numpy as np
import pytest

from stream_join.models.config import JoinConfig, MsmConfig
from stream_join.models.series import RawSeries, ReducedPoint


def make_point(center: Sequence[float], radius: float = 0.0, raw_start: int = 0, raw_count: int = 1) -> ReducedPoint:
    """테스트용 축약 포인트"""
    return ReducedPoint(
        center=np.atleast_1d(np.asarray(center, dtype=np.float64)),
        raw_start=raw_start,
        raw_count=raw_count,
        radius=radius,
    )


def write_text(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8", newline="\n")
    return path


@pytest.fixture
def rng():
    """고정 시드 난수 생성기"""
    return np.random.default_rng(20240611)


@pytest.fixture
def eight_points():
    """[1, 2, ..., 8] (d=1)"""
    return RawSeries.from_points([1, 2, 3, 4, 5, 6, 7, 8])


@pytest.fixture
def msm_2x2():
    return MsmConfig(seg_size=2, levels=2)


@pytest.fixture
def msm_2x3():
    return MsmConfig(seg_size=2, levels=3)


@pytest.fixture
def join_cfg():
    return JoinConfig(delta=1.0, wsize=4)


@pytest.fixture
def raw_csv(tmp_path):
    """8포인트 원본 CSV 파일"""
    rows = "".join(f"{t},{t + 1}\n" for t in range(8))
    return write_text(tmp_path / "raw.csv", "t,v1\n" + rows)
