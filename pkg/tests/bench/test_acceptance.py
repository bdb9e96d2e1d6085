"""통계적 인수 검사 (느림, 기본 실행에서 제외: pytest -m slow)"""

from typing import Any, Dict

import numpy as np
import pytest

from stream_join.bench.harness import run_drf_sweep
from stream_join.bench.spec_file import ExperimentSpec, StreamSource
from stream_join.data.generators import GeneratorKind, GeneratorSpec
from stream_join.models.config import MsmConfig

SEEDS = [1, 2, 3, 4, 5]

# 두 스트림이 같은 신호를 관측하고 잡음과 드문 큰 이상치만 다른 설정.
# 이상치가 없으면 구간 평균이 잡음을 지워 축약 매칭률이 100%에 붙는다.
OUTLIER_STREAMS: Dict[GeneratorKind, Dict[str, Any]] = {
    GeneratorKind.RANDOM_WALK: dict(observation_noise=2.0, spike_count=60, spike_height=300.0),
    GeneratorKind.SENSOR: dict(spike_count=60, spike_height=100.0),
    # 짧은 경로: 축약 블록 하나의 이동 거리가 δ + 반경보다 충분히 작다
    GeneratorKind.GPS: dict(
        waypoints=[(0.0, 0.0), (100.0, 0.0), (100.0, 80.0)], excursion_count=60, excursion_distance=200.0
    ),
}


def sweep(generator: GeneratorSpec):
    """DRF 1/8, 1/27 두 건 (δ는 원본 매칭률 85%로 보정)"""
    spec = ExperimentSpec(
        stream1=StreamSource(generator=generator),
        msm=MsmConfig(seg_size=2, levels=3),
        wsize_original=800,
        target_pct=85.0,
    )
    return run_drf_sweep(spec, [2, 3], levels=3)


def outlier_stream(kind: GeneratorKind, seed: int) -> GeneratorSpec:
    fields = dict(OUTLIER_STREAMS[kind])
    if kind is GeneratorKind.RANDOM_WALK:
        fields["trajectory_seed"] = 1000 + seed
    return GeneratorSpec(kind=kind, n=6000, seed=seed, **fields)


@pytest.mark.slow
class TestMatchedPercentage:
    """원본과 축약 매칭률 비교"""

    def test_random_walk_gap(self):
        """DRF 1/8 에서 |원본 - 축약| 평균 ≤ 5pp"""
        gaps = []
        for seed in SEEDS:
            eighth, _ = sweep(GeneratorSpec(kind=GeneratorKind.RANDOM_WALK, n=6000, seed=seed))
            assert eighth.drf == 0.125
            assert 80.0 <= eighth.matched_pct_original <= 95.0
            gaps.append(eighth.matched_pct_gap)
        assert float(np.mean(gaps)) <= 5.0

    @pytest.mark.parametrize("kind", list(GeneratorKind))
    def test_degradation_trend(self, kind):
        """DRF 1/27 평균 매칭률은 1/8 보다 낮다"""
        eighth, twenty_seventh = [], []
        for seed in SEEDS:
            a, b = sweep(outlier_stream(kind, seed))
            assert 80.0 <= a.matched_pct_original <= 95.0
            eighth.append(a.matched_pct_reduced)
            twenty_seventh.append(b.matched_pct_reduced)

        assert float(np.mean(eighth)) < 99.0
        assert float(np.mean(twenty_seventh)) < float(np.mean(eighth))
