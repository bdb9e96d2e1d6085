"""Dimension Reduction Engine - MSM 축약"""

from .msm import (
    dim_reduced_len,
    drf,
    lift_raw,
    msm_reduce,
    segment_means,
    suggest_seg_size,
    variance_retention,
)
from .streaming import MsmStreamReducer, msm_stream_flush, msm_stream_step

__all__ = [
    "dim_reduced_len",
    "drf",
    "lift_raw",
    "msm_reduce",
    "segment_means",
    "suggest_seg_size",
    "variance_retention",
    "MsmStreamReducer",
    "msm_stream_flush",
    "msm_stream_step",
]
