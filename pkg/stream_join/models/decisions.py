"""Join decision models - 쌍 판정 결과와 집계 통계"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List


class Verdict(Enum):
    """새로 들어온 쌍에 대한 판정"""
    MATCHED = "matched"                     # 거리 검사 + 윈도우 가지치기 통과
    DISTANCE_REJECTED = "distance_rejected"  # 쌍 거리 > δ
    PRUNED = "pruned"                       # 최근 윈도우 대비 가지치기됨


@dataclass(frozen=True)
class PairDecision:
    """쌍 하나에 대한 판정 결과 (생성 후 불변)"""
    verdict: Verdict
    pair_distance: float
    cross_checks: int           # 가지치기 보조정리 평가 횟수
    pruned_cross_pairs: int     # 그 중 가지치기된 교차 쌍 수
    index: int = -1             # 축약 스트림상의 위치
    raw_start: int = -1         # x_new가 요약하는 원본 구간
    raw_count: int = 0

    @property
    def is_outlier(self) -> bool:
        return self.verdict is not Verdict.MATCHED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "raw_start": self.raw_start,
            "raw_count": self.raw_count,
            "verdict": self.verdict.value,
            "pair_distance": self.pair_distance,
            "cross_checks": self.cross_checks,
            "pruned_cross_pairs": self.pruned_cross_pairs,
        }


@dataclass
class JoinStats:
    """조인 세션 누적 통계"""
    pairs_seen: int = 0
    pairs_matched: int = 0
    pairs_pruned: int = 0
    pairs_distance_rejected: int = 0
    total_cross_checks: int = 0

    @property
    def matched_pct(self) -> float:
        if self.pairs_seen == 0:
            return 0.0
        return 100.0 * self.pairs_matched / self.pairs_seen

    def record(self, decision: PairDecision) -> None:
        self.pairs_seen += 1
        self.total_cross_checks += decision.cross_checks
        if decision.verdict is Verdict.MATCHED:
            self.pairs_matched += 1
        elif decision.verdict is Verdict.PRUNED:
            self.pairs_pruned += 1
        else:
            self.pairs_distance_rejected += 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pairs_seen": self.pairs_seen,
            "pairs_matched": self.pairs_matched,
            "pairs_pruned": self.pairs_pruned,
            "pairs_distance_rejected": self.pairs_distance_rejected,
            "total_cross_checks": self.total_cross_checks,
            "matched_pct": self.matched_pct,
        }


@dataclass
class JoinResult:
    """run_join / drsp 결과 묶음"""
    decisions: List[PairDecision] = field(default_factory=list)
    stats: JoinStats = field(default_factory=JoinStats)

    @property
    def outlier_indices(self) -> List[int]:
        return [d.index for d in self.decisions if d.is_outlier]

    def __iter__(self):
        # (decisions, stats) 형태로 언패킹 가능
        yield self.decisions
        yield self.stats
