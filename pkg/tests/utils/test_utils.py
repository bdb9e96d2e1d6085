"""유틸리티 테스트 - 로거, 예외, 설정"""

import logging

import pytest

from stream_join.utils.errors import DataFormatError, DimensionMismatchError, EmptySeriesError, NonFiniteValueError
from stream_join.utils.logger import ROOT_LOGGER, set_level, setup_logger
from stream_join.utils.settings import Settings


@pytest.fixture
def restore_level():
    root = logging.getLogger(ROOT_LOGGER)
    previous = root.level
    yield
    root.setLevel(previous)


class TestLogger:
    """패키지 로거"""

    def test_single_handler(self):
        setup_logger("stream_join.a")
        setup_logger("stream_join.b")
        assert len(logging.getLogger(ROOT_LOGGER).handlers) == 1

    def test_module_logger_name(self):
        assert setup_logger("stream_join.core.x").name == "stream_join.core.x"

    def test_set_level(self, restore_level):
        set_level("warning")
        assert logging.getLogger(ROOT_LOGGER).level == logging.WARNING
        set_level("nonsense")
        assert logging.getLogger(ROOT_LOGGER).level == logging.INFO


class TestErrors:
    """예외 계층과 error_code"""

    def test_codes(self):
        assert EmptySeriesError().to_dict() == {"error_code": "EMPTY_SERIES", "message": "empty series"}
        assert DimensionMismatchError(2, 3).error_code == "DIMENSION_MISMATCH"
        assert str(DimensionMismatchError(2, 3)) == "dimension mismatch: expected 2, got 3"

    def test_line_prefix(self):
        error = NonFiniteValueError("non-finite value", line=7)
        assert isinstance(error, DataFormatError)
        assert error.line == 7
        assert error.message == "line 7: non-finite value"


class TestSettings:
    """환경 변수 기본값"""

    def test_from_env(self, monkeypatch):
        monkeypatch.setenv("STREAM_JOIN_LOG_LEVEL", "debug")
        monkeypatch.setenv("STREAM_JOIN_DEFAULT_WSIZE", "32")
        settings = Settings.from_env()
        assert settings.log_level == "DEBUG"
        assert settings.default_wsize == 32
        assert settings.float_format == "%.17g"
