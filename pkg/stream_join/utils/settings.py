"""Process settings - 환경 변수 기반 기본값"""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

# .env 파일이 있으면 먼저 반영
load_dotenv()


@dataclass(frozen=True)
class Settings:
    """환경 변수에서 읽어오는 실행 기본값"""
    log_level: str = "INFO"
    default_wsize: int = 100
    default_quantifier: str = "exists"
    float_format: str = "%.17g"

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            log_level=os.getenv("STREAM_JOIN_LOG_LEVEL", "INFO").upper(),
            default_wsize=int(os.getenv("STREAM_JOIN_DEFAULT_WSIZE", "100")),
            default_quantifier=os.getenv("STREAM_JOIN_DEFAULT_QUANTIFIER", "exists"),
            float_format=os.getenv("STREAM_JOIN_FLOAT_FORMAT", "%.17g"),
        )


settings = Settings.from_env()
