"""Configuration models - MSM / 조인 파라미터"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class WindowQuantifier(Enum):
    """윈도우 교차 검사 판정 방식"""
    EXISTS = "exists"   # 양쪽 윈도우에 가지치기 불가 쌍이 하나라도 있으면 매칭
    ALL = "all"         # 모든 교차 쌍이 가지치기 불가여야 매칭


class MsmConfig(BaseModel):
    """Multi-level Segment Mean 설정"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    seg_size: int = Field(default=2, ge=2)
    levels: int = Field(default=3, ge=1)

    @property
    def block_size(self) -> int:
        """축약 포인트 하나가 요약하는 최대 원본 포인트 수"""
        return self.seg_size ** self.levels


class JoinConfig(BaseModel):
    """유사도 조인 설정 (δ, 윈도우 크기, 판정 방식)"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    delta: float = Field(gt=0, allow_inf_nan=False)
    wsize: int = Field(default=100, ge=1)
    window_quantifier: WindowQuantifier = WindowQuantifier.EXISTS

    # model_copy는 검증을 건너뛰므로 새로 생성한다
    def with_window(self, wsize: int) -> "JoinConfig":
        return JoinConfig(delta=self.delta, wsize=wsize, window_quantifier=self.window_quantifier)
