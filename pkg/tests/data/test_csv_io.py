"""CSV 입출력 테스트"""

import logging

import numpy as np
import pandas as pd
import pytest

from stream_join.core.reduction.msm import msm_reduce
from stream_join.data.csv_io import (
    is_reduced_csv,
    outlier_sidecar_path,
    read_csv,
    read_outlier_index,
    read_reduced_csv,
    write_csv,
    write_outlier_index,
)
from stream_join.models.config import MsmConfig
from stream_join.models.series import RawSeries
from stream_join.utils.errors import DataFormatError, NonFiniteValueError
from tests.conftest import write_text


class TestReadCsv:
    """원본 CSV 읽기"""

    def test_one_dimension(self, raw_csv):
        series = read_csv(raw_csv)
        assert len(series) == 8
        assert series.dim == 1
        assert series.values[:, 0].tolist() == [1, 2, 3, 4, 5, 6, 7, 8]

    def test_two_dimensions(self, tmp_path):
        path = write_text(tmp_path / "gps.csv", "t,v1,v2\n0,1.5,-2\n1,2.5,-3\n")
        series = read_csv(path)
        assert series.dim == 2
        assert series.values.tolist() == [[1.5, -2.0], [2.5, -3.0]]

    def test_header_only(self, tmp_path):
        series = read_csv(write_text(tmp_path / "empty.csv", "t,v1,v2\n"))
        assert len(series) == 0
        assert series.dim == 2

    def test_tick_gap_warns_and_reindexes(self, tmp_path, caplog):
        caplog.set_level(logging.WARNING)
        series = read_csv(write_text(tmp_path / "gap.csv", "t,v1\n10,1\n12,2\n13,3\n"))
        assert series.values[:, 0].tolist() == [1, 2, 3]
        assert any("시점 간격" in record.getMessage() for record in caplog.records)


class TestReadCsvErrors:
    """형식 오류는 DataFormatError (행 번호 포함)"""

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataFormatError, match="file not found"):
            read_csv(tmp_path / "nope.csv")

    def test_empty_file(self, tmp_path):
        with pytest.raises(DataFormatError, match="missing header"):
            read_csv(write_text(tmp_path / "blank.csv", ""))

    def test_bad_header(self, tmp_path):
        with pytest.raises(DataFormatError, match="line 1"):
            read_csv(write_text(tmp_path / "bad.csv", "time,value\n0,1\n"))

    def test_too_many_fields(self, tmp_path):
        with pytest.raises(DataFormatError, match="line 3"):
            read_csv(write_text(tmp_path / "wide.csv", "t,v1\n0,1\n1,2,3\n"))

    def test_unparsable_value(self, tmp_path):
        with pytest.raises(DataFormatError, match="line 4: cannot parse 'abc'"):
            read_csv(write_text(tmp_path / "text.csv", "t,v1\n0,1\n1,2\n2,abc\n"))

    @pytest.mark.parametrize("token", ["nan", "inf", "-inf"])
    def test_non_finite(self, tmp_path, token):
        path = write_text(tmp_path / "nf.csv", f"t,v1\n0,1\n1,{token}\n")
        with pytest.raises(NonFiniteValueError, match="line 3"):
            read_csv(path)

    def test_non_monotone_ticks(self, tmp_path):
        with pytest.raises(DataFormatError, match="non-monotone"):
            read_csv(write_text(tmp_path / "back.csv", "t,v1\n0,1\n2,2\n1,3\n"))

    def test_error_code(self, tmp_path):
        with pytest.raises(DataFormatError) as info:
            read_csv(tmp_path / "nope.csv")
        assert info.value.to_dict()["error_code"] == "DATA_FORMAT"


class TestWriteCsv:
    """저장 형식과 왕복"""

    def test_raw_round_trip(self, rng, tmp_path):
        series = RawSeries(values=rng.normal(size=(200, 3)) * 1e3)
        path = tmp_path / "raw.csv"
        write_csv(series, path)
        assert np.array_equal(read_csv(path).values, series.values)

    def test_reduced_round_trip(self, rng, tmp_path):
        reduced = msm_reduce(np.cumsum(rng.normal(size=(301, 2)), axis=0), MsmConfig(seg_size=3, levels=2))
        path = tmp_path / "reduced.csv"
        write_csv(reduced, path)

        assert is_reduced_csv(path)
        loaded = read_reduced_csv(path)
        assert np.array_equal(loaded.centers, reduced.centers)
        assert np.array_equal(loaded.radii, reduced.radii)
        assert np.array_equal(loaded.raw_starts, reduced.raw_starts)
        assert np.array_equal(loaded.raw_counts, reduced.raw_counts)
        assert loaded.source_len == 301

    def test_reduced_format(self, eight_points, msm_2x2, tmp_path):
        path = tmp_path / "r.csv"
        write_csv(msm_reduce(eight_points, msm_2x2), path)
        assert path.read_bytes() == b"t,v1,radius,raw_start,raw_count\n0,2.5,1.5,0,4\n1,6.5,1.5,4,4\n"

    def test_empty_series_writes_header(self, tmp_path):
        path = tmp_path / "empty.csv"
        write_csv(RawSeries.empty(2), path)
        assert path.read_text(encoding="utf-8") == "t,v1,v2\n"

    def test_raw_is_not_reduced(self, raw_csv):
        assert not is_reduced_csv(raw_csv)

    def test_byte_determinism(self, rng, tmp_path):
        series = RawSeries(values=rng.normal(size=(50, 2)))
        write_csv(series, tmp_path / "a.csv")
        write_csv(series, tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_failed_write_leaves_nothing(self, tmp_path, monkeypatch):
        """쓰기 도중 실패하면 대상 파일도 임시 파일도 남지 않는다"""
        def broken(self, *args, **kwargs):
            raise OSError("disk full")

        monkeypatch.setattr(pd.DataFrame, "to_csv", broken)
        with pytest.raises(OSError):
            write_csv(RawSeries.from_points([1, 2, 3]), tmp_path / "out.csv")
        assert list(tmp_path.iterdir()) == []

    def test_negative_radius_rejected(self, tmp_path):
        path = write_text(tmp_path / "neg.csv", "t,v1,radius,raw_start,raw_count\n0,1,-0.5,0,4\n")
        with pytest.raises(DataFormatError, match="negative radius"):
            read_reduced_csv(path)


class TestOutlierSidecar:
    """이상치 인덱스 사이드카"""

    def test_path(self, tmp_path):
        assert outlier_sidecar_path(tmp_path / "s.csv") == tmp_path / "s.outliers.csv"

    def test_round_trip_sorted(self, tmp_path):
        path = tmp_path / "s.outliers.csv"
        write_outlier_index([40, 3, 17], path)
        assert read_outlier_index(path) == [3, 17, 40]

    def test_empty(self, tmp_path):
        path = tmp_path / "none.outliers.csv"
        write_outlier_index([], path)
        assert read_outlier_index(path) == []
