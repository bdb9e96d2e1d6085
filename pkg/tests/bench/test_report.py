"""실험 리포트 출력 테스트"""

import pytest

from stream_join.bench.report import (
    REPORT_COLUMNS,
    TIMING_COLUMNS,
    ExperimentReport,
    read_report,
    render_text,
    report_emit,
    text_path,
)
from stream_join.utils.errors import DataFormatError
from tests.conftest import write_text


def make_report(**overrides) -> ExperimentReport:
    values = dict(
        label="random-walk",
        seg_size=3,
        levels=3,
        drf=1 / 27,
        delta=2.718281828459045,
        size_original=4400,
        size_reduced=163,
        wsize_original=800,
        wsize_reduced=30,
        decisions_reduced=133,
        matched_pct_reduced=87.21804511278195,
        cross_checks_reduced=7980,
        decisions_original=3600,
        matched_pct_original=88.30555555555556,
        cross_checks_original=5760000,
        outlier_precision=None,
        outlier_recall=None,
        wall_time_original=1.25,
        wall_time_reduced=0.01,
    )
    values.update(overrides)
    return ExperimentReport(**values)


class TestReportEmit:
    """CSV + 텍스트 표 저장"""

    def test_round_trip(self, tmp_path):
        reports = [make_report(), make_report(seg_size=2, drf=0.125, outlier_precision=0.5, outlier_recall=1.0)]
        path = tmp_path / "report.csv"
        report_emit(reports, path)
        assert read_report(path) == reports

    def test_header_order(self, tmp_path):
        path = tmp_path / "report.csv"
        report_emit(make_report(), path)
        header = path.read_text(encoding="utf-8").splitlines()[0]
        assert header == ",".join(REPORT_COLUMNS)

    def test_text_table_written(self, tmp_path):
        path = tmp_path / "report.csv"
        report_emit(make_report(), path)
        text = text_path(path).read_text(encoding="utf-8")
        assert text_path(path) == tmp_path / "report.txt"
        assert "1/27" in text
        assert "random-walk" in text

    def test_missing_original_round_trips(self, tmp_path):
        report = make_report(decisions_original=None, matched_pct_original=None, cross_checks_original=None)
        path = tmp_path / "report.csv"
        report_emit(report, path)
        (loaded,) = read_report(path)
        assert loaded == report
        assert loaded.cross_check_ratio is None

    def test_timings_only_when_requested(self, tmp_path):
        plain = tmp_path / "plain.csv"
        timed = tmp_path / "timed.csv"
        report_emit(make_report(), plain)
        report_emit(make_report(), timed, include_timings=True)

        assert "wall_time" not in plain.read_text(encoding="utf-8")
        assert timed.read_text(encoding="utf-8").splitlines()[0].endswith(",".join(TIMING_COLUMNS))
        (loaded,) = read_report(timed)
        assert loaded.wall_time_original == 1.25

    def test_byte_determinism(self, tmp_path):
        report_emit([make_report(wall_time_reduced=0.5)], tmp_path / "a.csv")
        report_emit([make_report(wall_time_reduced=9.0)], tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
        assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()


class TestReadReport:
    """리포트 CSV 검증"""

    def test_bad_header(self, tmp_path):
        path = write_text(tmp_path / "r.csv", "label,drf\nx,0.5\n")
        with pytest.raises(DataFormatError, match="line 1"):
            read_report(path)

    def test_missing_required_value(self, tmp_path):
        path = tmp_path / "r.csv"
        report_emit(make_report(), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        fields = lines[1].split(",")
        fields[REPORT_COLUMNS.index("size_reduced")] = ""
        write_text(path, "\n".join([lines[0], ",".join(fields)]) + "\n")
        with pytest.raises(DataFormatError, match="line 2: missing value in column 'size_reduced'"):
            read_report(path)

    def test_non_integer_count(self, tmp_path):
        path = tmp_path / "r.csv"
        report_emit(make_report(), path)
        text = path.read_text(encoding="utf-8").replace(",4400,", ",4400.5,")
        write_text(path, text)
        with pytest.raises(DataFormatError, match="non-integer"):
            read_report(path)


class TestReportProperties:
    """파생 값"""

    def test_gap_and_ratio(self):
        report = make_report(matched_pct_original=90.0, matched_pct_reduced=85.5,
                             cross_checks_original=1000, cross_checks_reduced=25)
        assert report.matched_pct_gap == 4.5
        assert report.cross_check_ratio == 0.025

    def test_render_has_no_colour_codes(self):
        assert "\x1b[" not in render_text([make_report()])
