"""DRSP 파이프라인 테스트"""

import numpy as np

from stream_join.core.join.similarity_join import run_join
from stream_join.core.pipeline import StreamingDrsp, drsp
from stream_join.core.reduction.msm import msm_reduce
from stream_join.models.config import JoinConfig, MsmConfig, WindowQuantifier
from stream_join.models.series import RawSeries


def walk_pair(rng, n, d=1):
    first = np.cumsum(rng.uniform(-1, 1, size=(n, d)), axis=0)
    second = first + rng.normal(scale=0.7, size=(n, d))
    return RawSeries(values=first), RawSeries(values=second)


class TestDrsp:
    """배치 파이프라인"""

    def test_equals_reduce_then_join(self, rng):
        raw1, raw2 = walk_pair(rng, 1000)
        msm = MsmConfig(seg_size=2, levels=3)
        cfg = JoinConfig(delta=1.5, wsize=8)

        result = drsp(raw1, raw2, msm, cfg)
        expected = run_join(msm_reduce(raw1, msm), msm_reduce(raw2, msm), cfg)

        assert result.decisions == expected.decisions
        assert result.stats == expected.stats


class TestStreamingDrsp:
    """포인트 단위 스트리밍 파이프라인"""

    def test_matches_batch_with_partial_tail(self, rng):
        """부분 블록이 남는 길이에서도 배치와 같은 판정"""
        raw1, raw2 = walk_pair(rng, 1003, d=2)
        msm = MsmConfig(seg_size=3, levels=2)
        cfg = JoinConfig(delta=2.0, wsize=6, window_quantifier=WindowQuantifier.ALL)

        engine = StreamingDrsp(msm, cfg)
        emitted = []
        for p1, p2 in zip(raw1.values, raw2.values):
            emitted.extend(engine.push(p1, p2))
        emitted.extend(engine.finish())

        batch = drsp(raw1, raw2, msm, cfg)
        assert emitted == batch.decisions
        assert engine.result().decisions == batch.decisions
        assert engine.stats == batch.stats

    def test_decisions_arrive_per_block(self, rng):
        """블록이 닫힐 때만 판정이 나온다"""
        raw1, raw2 = walk_pair(rng, 64)
        msm = MsmConfig(seg_size=2, levels=2)
        engine = StreamingDrsp(msm, JoinConfig(delta=5.0, wsize=2))

        counts = [len(engine.push(p1, p2)) for p1, p2 in zip(raw1.values, raw2.values)]

        # 처음 두 블록(8포인트)은 시드
        assert sum(counts[:8]) == 0
        assert all(c == (1 if (i + 1) % 4 == 0 else 0) for i, c in enumerate(counts[8:], start=8))
        assert engine.finish() == []
        assert engine.stats.pairs_seen == 14
