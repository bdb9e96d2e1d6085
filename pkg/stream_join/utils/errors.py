"""Stream Join 예외 계층

모든 예외는 기계가 읽을 수 있는 error_code 문자열을 가진다.
CLI는 StreamJoinError를 종료 코드 2로 보고한다.
"""

from typing import Optional


class StreamJoinError(Exception):
    """모든 도메인 예외의 기본 클래스"""

    error_code = "STREAM_JOIN_ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict:
        return {"error_code": self.error_code, "message": self.message}


class EmptySeriesError(StreamJoinError):
    """빈 시계열 입력"""

    error_code = "EMPTY_SERIES"

    def __init__(self, message: str = "empty series"):
        super().__init__(message)


class DimensionMismatchError(StreamJoinError):
    """포인트 차원 불일치"""

    error_code = "DIMENSION_MISMATCH"

    def __init__(self, expected: Optional[int] = None, actual: Optional[int] = None):
        message = "dimension mismatch"
        if expected is not None and actual is not None:
            message = f"dimension mismatch: expected {expected}, got {actual}"
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class DataFormatError(StreamJoinError):
    """CSV 등 입력 데이터 형식 오류"""

    error_code = "DATA_FORMAT"

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NonFiniteValueError(DataFormatError):
    """NaN / Inf 값"""

    error_code = "NON_FINITE"


class GeneratorSpecError(StreamJoinError):
    """합성 데이터 생성 파라미터 오류"""

    error_code = "INVALID_GENERATOR"


class SpecFileError(StreamJoinError):
    """실험 spec 파일 오류"""

    error_code = "INVALID_SPEC"
