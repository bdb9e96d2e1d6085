"""Domain models"""

from .config import JoinConfig, MsmConfig, WindowQuantifier
from .decisions import JoinResult, JoinStats, PairDecision, Verdict
from .series import BlockBuffer, RawSeries, ReducedPoint, ReducedSeries, as_point, as_points

__all__ = [
    "JoinConfig",
    "MsmConfig",
    "WindowQuantifier",
    "JoinResult",
    "JoinStats",
    "PairDecision",
    "Verdict",
    "BlockBuffer",
    "RawSeries",
    "ReducedPoint",
    "ReducedSeries",
    "as_point",
    "as_points",
]
