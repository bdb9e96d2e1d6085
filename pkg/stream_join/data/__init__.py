"""Data I/O and synthetic streams"""

from .csv_io import (
    is_reduced_csv,
    outlier_sidecar_path,
    read_csv,
    read_outlier_index,
    read_reduced_csv,
    write_csv,
    write_outlier_index,
)
from .generators import (
    GeneratorKind,
    GeneratorSpec,
    gen_gps_trajectory,
    gen_random_walk,
    gen_sensor,
    gen_stream_pair,
    generate,
)

__all__ = [
    "is_reduced_csv",
    "outlier_sidecar_path",
    "read_csv",
    "read_outlier_index",
    "read_reduced_csv",
    "write_csv",
    "write_outlier_index",
    "GeneratorKind",
    "GeneratorSpec",
    "gen_gps_trajectory",
    "gen_random_walk",
    "gen_sensor",
    "gen_stream_pair",
    "generate",
]
