"""Logger setup

핸들러는 패키지 루트 로거(stream_join)에 한 번만 붙이고,
모듈 로거는 전파로 그 핸들러를 공유한다.
"""

import logging
import sys
from typing import Optional, Union

from .settings import settings

ROOT_LOGGER = "stream_join"
DEFAULT_FORMAT = "[%(asctime)s] %(name)s - %(levelname)s - %(message)s"


def _resolve_level(level: Union[int, str, None]) -> int:
    if level is None:
        level = settings.log_level
    if isinstance(level, str):
        resolved = logging.getLevelName(level.upper())
        return resolved if isinstance(resolved, int) else logging.INFO
    return level


def setup_logger(
    name: str,
    level: Union[int, str, None] = None,
    format_string: Optional[str] = None
) -> logging.Logger:
    """모듈 로거 반환 (stdout은 CLI 결과 출력용이므로 로그는 stderr)"""
    root = logging.getLogger(ROOT_LOGGER)

    # 이미 핸들러가 있으면 그대로 사용
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(format_string or DEFAULT_FORMAT))
        root.addHandler(handler)
        root.setLevel(_resolve_level(level))

    return logging.getLogger(name)


def set_level(level: Union[int, str]) -> None:
    """패키지 전체 로그 레벨 변경"""
    logging.getLogger(ROOT_LOGGER).setLevel(_resolve_level(level))
