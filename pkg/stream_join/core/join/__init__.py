"""Similarity Matching and Pruning Engine"""

from .similarity_join import JoinSession, is_prunable, process_pair, run_join
from .window import SlidingWindow
from ..distance import euclidean_dist

__all__ = [
    "JoinSession",
    "SlidingWindow",
    "euclidean_dist",
    "is_prunable",
    "process_pair",
    "run_join",
]
