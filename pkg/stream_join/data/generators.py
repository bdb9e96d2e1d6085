"""Synthetic Streams - 재현 가능한 합성 시계열 생성기

랜덤 워크, 센서(온도), GPS 궤적 세 종류를 시드로 결정적으로 생성한다.
주입된 이상치 시점은 RawSeries.outliers에 기록되어 탐지 성능 평가에 쓰인다.
난수원은 numpy PCG64 (numpy.random.default_rng).
"""

from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..models.series import RawSeries
from ..utils.errors import GeneratorSpecError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


class GeneratorKind(Enum):
    """합성 데이터 종류"""
    RANDOM_WALK = "random-walk"
    SENSOR = "sensor"
    GPS = "gps"


class GeneratorSpec(BaseModel):
    """생성기 설정 (같은 spec → 같은 출력)"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: GeneratorKind
    n: int = Field(ge=1)
    seed: int = 0

    # 랜덤 워크
    scale: float = Field(default=1.0, ge=0)
    radial: bool = False                      # 2차원 워크의 원점 거리
    perimeter: Optional[float] = Field(default=None, gt=0)
    trajectory_seed: Optional[int] = None     # 워크 경로 시드 (None이면 seed)
    observation_noise: float = Field(default=0.0, ge=0)

    # 센서 (spike_count, spike_height는 랜덤 워크도 사용)
    baseline: float = 20.0
    amplitude: float = Field(default=5.0, ge=0)
    period: float = Field(default=500.0, gt=0)
    noise: float = Field(default=0.5, ge=0)
    spike_count: int = Field(default=0, ge=0)
    spike_height: float = 15.0

    # GPS
    waypoints: List[Tuple[float, float]] = Field(
        default_factory=lambda: [(0.0, 0.0), (1000.0, 0.0), (1000.0, 800.0)]
    )
    jitter: float = Field(default=1.0, ge=0)
    excursion_count: int = Field(default=0, ge=0)
    excursion_distance: float = 50.0

    def with_seed(self, seed: int) -> "GeneratorSpec":
        return self.model_copy(update={"seed": seed})


def _pick_positions(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    if count == 0:
        return np.empty(0, dtype=np.int64)
    return np.sort(rng.choice(n, size=min(count, n), replace=False))


def gen_random_walk(spec: GeneratorSpec) -> RawSeries:
    """x0 = 0, x_{t+1} = x_t + U[-scale, +scale]

    radial=True 이면 2차원 워크의 원점 거리를 값으로 쓰고,
    perimeter를 넘는 시점을 이상치로 기록한다.

    trajectory_seed를 주면 워크 경로는 그 시드로 만들고 관측 잡음과
    스파이크만 seed를 따른다. 같은 trajectory_seed의 두 스트림은 한
    물체를 따로 관측한 값이 된다.
    """
    if spec.kind is not GeneratorKind.RANDOM_WALK:
        raise GeneratorSpecError(f"expected random-walk spec, got {spec.kind.value}")
    rng = np.random.default_rng(spec.seed)
    walk_rng = rng if spec.trajectory_seed is None else np.random.default_rng(spec.trajectory_seed)

    if spec.radial:
        steps = walk_rng.uniform(-spec.scale, spec.scale, size=(spec.n - 1, 2))
        position = np.zeros((spec.n, 2))
        position[1:] = np.cumsum(steps, axis=0)
        values = np.linalg.norm(position, axis=1)
    else:
        steps = walk_rng.uniform(-spec.scale, spec.scale, size=spec.n - 1)
        values = np.zeros(spec.n)
        values[1:] = np.cumsum(steps)
    values = values + 0.0  # -0.0 정리

    if spec.observation_noise > 0:
        values = values + rng.normal(0.0, spec.observation_noise, size=spec.n)
    spikes = _pick_positions(rng, spec.n, spec.spike_count)
    values[spikes] += spec.spike_height

    outliers = set(spikes.tolist())
    if spec.perimeter is not None:
        outliers.update(np.flatnonzero(np.abs(values) > spec.perimeter).tolist())
    return RawSeries(values=values.reshape(-1, 1), outliers=tuple(sorted(outliers)))


def gen_sensor(spec: GeneratorSpec) -> RawSeries:
    """느리게 변하는 기준선 + 가우시안 잡음 + 선택적 스파이크 (스파이크 = 이상치)"""
    if spec.kind is not GeneratorKind.SENSOR:
        raise GeneratorSpecError(f"expected sensor spec, got {spec.kind.value}")
    rng = np.random.default_rng(spec.seed)

    t = np.arange(spec.n, dtype=np.float64)
    values = spec.baseline + spec.amplitude * np.sin(2.0 * np.pi * t / spec.period)
    if spec.noise > 0:
        values = values + rng.normal(0.0, spec.noise, size=spec.n)

    spikes = _pick_positions(rng, spec.n, spec.spike_count)
    values[spikes] += spec.spike_height
    return RawSeries(values=values.reshape(-1, 1), outliers=tuple(spikes.tolist()))


def _path_through(waypoints: np.ndarray, n: int) -> np.ndarray:
    """경유점을 잇는 꺾은선 위에 호 길이 기준으로 균등한 n개 점"""
    lengths = np.linalg.norm(np.diff(waypoints, axis=0), axis=1)
    cumulative = np.concatenate([[0.0], np.cumsum(lengths)])
    total = cumulative[-1]
    if total == 0.0 or n == 1:
        return np.repeat(waypoints[:1], n, axis=0)
    s = np.linspace(0.0, total, n)
    return np.column_stack([
        np.interp(s, cumulative, waypoints[:, 0]),
        np.interp(s, cumulative, waypoints[:, 1]),
    ])


def gen_gps_trajectory(spec: GeneratorSpec) -> RawSeries:
    """경유점을 잇는 궤적 + 지터 + 경로 수직 방향 이탈 (이탈 = 이상치)"""
    if spec.kind is not GeneratorKind.GPS:
        raise GeneratorSpecError(f"expected gps spec, got {spec.kind.value}")
    if len(spec.waypoints) < 2:
        raise GeneratorSpecError("gps trajectory needs at least 2 waypoints")
    waypoints = np.asarray(spec.waypoints, dtype=np.float64)
    if not np.all(np.isfinite(waypoints)):
        raise GeneratorSpecError("waypoints must be finite")
    rng = np.random.default_rng(spec.seed)

    clean = _path_through(waypoints, spec.n)
    values = clean.copy()
    if spec.jitter > 0:
        values += rng.normal(0.0, spec.jitter, size=(spec.n, 2))

    excursions = _pick_positions(rng, spec.n, spec.excursion_count)
    for i in excursions:
        tangent = clean[min(i + 1, spec.n - 1)] - clean[max(i - 1, 0)]
        norm = np.linalg.norm(tangent)
        normal = np.array([0.0, 1.0]) if norm == 0 else np.array([-tangent[1], tangent[0]]) / norm
        values[i] += spec.excursion_distance * normal
    return RawSeries(values=values, outliers=tuple(excursions.tolist()))


GENERATORS = {
    GeneratorKind.RANDOM_WALK: gen_random_walk,
    GeneratorKind.SENSOR: gen_sensor,
    GeneratorKind.GPS: gen_gps_trajectory,
}


def generate(spec: GeneratorSpec) -> RawSeries:
    """spec.kind에 맞는 생성기 실행"""
    series = GENERATORS[spec.kind](spec)
    logger.debug(f"합성 데이터 생성: {spec.kind.value} n={spec.n} seed={spec.seed} 이상치={len(series.outliers)}")
    return series


def gen_stream_pair(
    spec: GeneratorSpec,
    second: Optional[GeneratorSpec] = None
) -> Tuple[RawSeries, RawSeries]:
    """조인용 스트림 두 개 생성 (두 번째 기본값: 같은 설정, seed + 1)"""
    if second is None:
        second = spec.with_seed(spec.seed + 1)
    return generate(spec), generate(second)
