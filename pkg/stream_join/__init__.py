"""Stream Join - MSM 축약 기반 시계열 스트림 유사도 조인"""

__version__ = "0.1.0"
