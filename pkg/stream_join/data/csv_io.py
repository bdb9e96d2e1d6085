"""CSV I/O - 시계열 CSV 입출력

스키마 (UTF-8, LF, 헤더 필수):
    원본:  t,v1[,v2,...]
    축약:  t,v1[,v2,...],radius,raw_start,raw_count
    이상치 사이드카: t
"""

import os
import re
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator, List, Union

import numpy as np
import pandas as pd

from ..models.series import RawSeries, ReducedSeries
from ..utils.errors import DataFormatError, NonFiniteValueError
from ..utils.logger import setup_logger
from ..utils.settings import settings

logger = setup_logger(__name__)

PathLike = Union[str, Path]

REDUCED_EXTRA_COLUMNS = ["radius", "raw_start", "raw_count"]


@contextmanager
def atomic_path(path: PathLike) -> Iterator[Path]:
    """임시 파일에 쓰고 성공 시에만 대상 경로로 교체 (실패 시 부분 파일 없음)"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    os.close(fd)
    tmp = Path(tmp_name)
    try:
        yield tmp
        os.replace(tmp, target)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def write_frame(frame: pd.DataFrame, path: PathLike) -> None:
    """결정적 포맷으로 DataFrame 저장"""
    with atomic_path(path) as tmp:
        frame.to_csv(
            tmp,
            index=False,
            float_format=settings.float_format,
            lineterminator="\n",
            encoding="utf-8",
        )


def _value_columns(dim: int) -> List[str]:
    return [f"v{i}" for i in range(1, dim + 1)]


def _series_frame(series: Union[RawSeries, ReducedSeries]) -> pd.DataFrame:
    if isinstance(series, ReducedSeries):
        values = series.centers
    else:
        values = series.values
    frame = pd.DataFrame(values, columns=_value_columns(values.shape[1]))
    frame.insert(0, "t", np.arange(values.shape[0], dtype=np.int64))
    if isinstance(series, ReducedSeries):
        frame["radius"] = series.radii
        frame["raw_start"] = series.raw_starts
        frame["raw_count"] = series.raw_counts
    return frame


def write_csv(series: Union[RawSeries, ReducedSeries], path: PathLike) -> None:
    """RawSeries / ReducedSeries를 CSV로 저장"""
    write_frame(_series_frame(series), path)
    logger.debug(f"CSV 저장: {path} ({len(series)}행)")


def load_frame(path: PathLike) -> pd.DataFrame:
    source = Path(path)
    if not source.is_file():
        raise DataFormatError(f"file not found: {source}")
    try:
        return pd.read_csv(source, dtype=str, keep_default_na=False, na_filter=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DataFormatError("missing header row", line=1)
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise DataFormatError(f"malformed row ({e})", line=int(match.group(1)) if match else None)
    except UnicodeDecodeError as e:
        raise DataFormatError(f"not UTF-8 text: {e}")


def _parse_column(frame: pd.DataFrame, column: str, dtype) -> np.ndarray:
    """열 하나를 숫자로 변환. 실패하면 CSV 행 번호(헤더 = 1행)와 함께 오류"""
    texts = frame[column].to_numpy(dtype=object)
    for row, text in enumerate(texts):
        if text is None or (isinstance(text, float) and np.isnan(text)) or str(text).strip() == "":
            raise DataFormatError(f"missing value in column '{column}'", line=row + 2)
    try:
        parsed = texts.astype(np.float64)
    except ValueError:
        parsed = None
    if parsed is None:
        for row, text in enumerate(texts):
            try:
                float(text)
            except ValueError:
                raise DataFormatError(f"cannot parse '{text}' in column '{column}'", line=row + 2)
        raise DataFormatError(f"cannot parse column '{column}'")
    bad = np.flatnonzero(~np.isfinite(parsed))
    if bad.size:
        raise NonFiniteValueError(f"non-finite value in column '{column}'", line=int(bad[0]) + 2)
    if dtype is np.int64:
        if not np.all(parsed == np.round(parsed)):
            row = int(np.flatnonzero(parsed != np.round(parsed))[0])
            raise DataFormatError(f"non-integer value in column '{column}'", line=row + 2)
        return parsed.astype(np.int64)
    return parsed


def _check_ticks(ticks: np.ndarray, path: PathLike) -> None:
    if ticks.size < 2:
        return
    steps = np.diff(ticks)
    if np.any(steps <= 0):
        row = int(np.flatnonzero(steps <= 0)[0]) + 1
        raise DataFormatError("non-monotone ticks", line=row + 2)
    if np.any(steps != 1):
        logger.warning(f"{path}: 시점 간격이 1이 아님 - 0부터 다시 번호를 매김")


def _value_header(columns: List[str], extra: List[str]) -> int:
    """헤더 검증 후 값 차원 d 반환"""
    if not columns or columns[0] != "t":
        raise DataFormatError("header must start with 't'", line=1)
    body = columns[1: len(columns) - len(extra)] if extra else columns[1:]
    if extra and columns[len(columns) - len(extra):] != extra:
        raise DataFormatError(f"header must end with {','.join(extra)}", line=1)
    if not body or body != _value_columns(len(body)):
        raise DataFormatError("header must be t,v1[,v2,...]", line=1)
    return len(body)


def read_csv(path: PathLike) -> RawSeries:
    """원본 시계열 CSV 읽기 (시점은 0부터 다시 매김, d는 헤더에서 추론)"""
    frame = load_frame(path)
    columns = list(frame.columns)
    dim = _value_header(columns, [])

    if len(frame) == 0:
        return RawSeries.empty(dim)

    ticks = _parse_column(frame, "t", np.int64)
    _check_ticks(ticks, path)
    values = np.column_stack([_parse_column(frame, c, np.float64) for c in _value_columns(dim)])
    return RawSeries(values=values)


def read_reduced_csv(path: PathLike) -> ReducedSeries:
    """write_csv로 저장한 축약 시계열 읽기"""
    frame = load_frame(path)
    columns = list(frame.columns)
    dim = _value_header(columns, REDUCED_EXTRA_COLUMNS)
    if len(frame) == 0:
        raise DataFormatError("reduced series file has no rows")

    ticks = _parse_column(frame, "t", np.int64)
    _check_ticks(ticks, path)
    centers = np.column_stack([_parse_column(frame, c, np.float64) for c in _value_columns(dim)])
    radii = _parse_column(frame, "radius", np.float64)
    if np.any(radii < 0):
        row = int(np.flatnonzero(radii < 0)[0])
        raise DataFormatError("negative radius", line=row + 2)
    starts = _parse_column(frame, "raw_start", np.int64)
    counts = _parse_column(frame, "raw_count", np.int64)
    return ReducedSeries(
        centers=centers,
        radii=radii,
        raw_starts=starts,
        raw_counts=counts,
        config=None,
        source_len=int(starts[-1] + counts[-1]),
    )


def is_reduced_csv(path: PathLike) -> bool:
    """헤더에 radius 열이 있으면 축약 시계열 파일"""
    frame = load_frame(path)
    return list(frame.columns)[-len(REDUCED_EXTRA_COLUMNS):] == REDUCED_EXTRA_COLUMNS


def outlier_sidecar_path(path: PathLike) -> Path:
    """a.csv → a.outliers.csv"""
    target = Path(path)
    return target.with_name(f"{target.stem}.outliers.csv")


def write_outlier_index(indices: Iterable[int], path: PathLike) -> None:
    frame = pd.DataFrame({"t": np.array(sorted(indices), dtype=np.int64)})
    write_frame(frame, path)


def read_outlier_index(path: PathLike) -> List[int]:
    frame = load_frame(path)
    if list(frame.columns) != ["t"]:
        raise DataFormatError("outlier index header must be 't'", line=1)
    if len(frame) == 0:
        return []
    return _parse_column(frame, "t", np.int64).tolist()
