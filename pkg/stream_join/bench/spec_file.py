"""Experiment spec - 실험 설정 모델과 key=value spec 파일 로더

spec 파일은 python-dotenv 형식의 평면 key=value 파일이다 (README 참고).

    stream1.kind=random-walk
    stream1.n=6000
    stream1.seed=1
    msm.seg_size=2
    msm.levels=3
    join.wsize=800
    join.quantifier=exists
    target_pct=85
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..data.csv_io import read_csv
from ..data.generators import GeneratorSpec, generate
from ..models.config import JoinConfig, MsmConfig, WindowQuantifier
from ..models.series import RawSeries
from ..utils.errors import SpecFileError


class StreamSource(BaseModel):
    """스트림 하나의 출처 - 생성기 설정 또는 CSV 경로 중 하나"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    generator: Optional[GeneratorSpec] = None
    path: Optional[Path] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "StreamSource":
        if (self.generator is None) == (self.path is None):
            raise ValueError("stream source needs exactly one of generator settings or path")
        return self

    def load(self) -> RawSeries:
        if self.generator is not None:
            return generate(self.generator)
        return read_csv(self.path)

    @property
    def label(self) -> str:
        if self.generator is not None:
            return self.generator.kind.value
        return self.path.stem


class ExperimentSpec(BaseModel):
    """원본 대비 축약 실험 설정

    delta가 없으면 원본 스트림에서 target_pct에 맞춰 보정한다.
    축약 실행의 윈도우는 round(drf * wsize_original), 최소 1.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    stream1: StreamSource
    stream2: Optional[StreamSource] = None
    msm: MsmConfig = MsmConfig()
    delta: Optional[float] = Field(default=None, gt=0, allow_inf_nan=False)
    wsize_original: int = Field(default=800, ge=1)
    window_quantifier: WindowQuantifier = WindowQuantifier.EXISTS
    target_pct: Optional[float] = Field(default=None, ge=0, le=100)
    compare_original: bool = True

    @model_validator(mode="after")
    def _delta_or_target(self) -> "ExperimentSpec":
        if self.delta is None and self.target_pct is None:
            raise ValueError("either join.delta or target_pct is required")
        if self.stream2 is None and self.stream1.generator is None:
            raise ValueError("stream2 is required when stream1 is a file")
        return self

    def join_config(self, delta: float, wsize: Optional[int] = None) -> JoinConfig:
        return JoinConfig(
            delta=delta,
            wsize=self.wsize_original if wsize is None else wsize,
            window_quantifier=self.window_quantifier,
        )

    def with_msm(self, msm: MsmConfig) -> "ExperimentSpec":
        return self.model_copy(update={"msm": msm})

    def load_streams(self) -> Tuple[RawSeries, RawSeries]:
        """두 스트림 로드 (stream2가 없으면 stream1 생성기의 seed + 1)"""
        first = self.stream1.load()
        if self.stream2 is not None:
            return first, self.stream2.load()
        second = self.stream1.generator.with_seed(self.stream1.generator.seed + 1)
        return first, generate(second)

    @property
    def label(self) -> str:
        return self.stream1.label


TOP_LEVEL_KEYS = {"target_pct", "compare_original"}
JOIN_KEYS = {"delta": "delta", "wsize": "wsize_original", "quantifier": "window_quantifier"}


def parse_waypoints(text: str) -> List[Tuple[float, float]]:
    """'x0:y0,x1:y1,...' → [(x0, y0), (x1, y1), ...]"""
    points = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            x, y = item.split(":")
            points.append((float(x), float(y)))
        except ValueError:
            raise SpecFileError(f"bad waypoint '{item}' (expected x:y)")
    return points


def _stream_fields(raw: Dict[str, str]) -> Dict[str, Any]:
    fields: Dict[str, Any] = dict(raw)
    if "waypoints" in fields:
        fields["waypoints"] = parse_waypoints(fields["waypoints"])
    return fields


def _stream_source(fields: Dict[str, Any]) -> Dict[str, Any]:
    if "path" in fields:
        extra = set(fields) - {"path"}
        if extra:
            raise SpecFileError(f"file stream does not take {', '.join(sorted(extra))}")
        return {"path": fields["path"]}
    return {"generator": fields}


def spec_from_mapping(values: Dict[str, Optional[str]], base_dir: Optional[Path] = None) -> ExperimentSpec:
    """평면 key=value 매핑 → ExperimentSpec"""
    groups: Dict[str, Dict[str, str]] = {"stream1": {}, "stream2": {}, "msm": {}, "join": {}}
    top: Dict[str, Any] = {}
    for key, value in values.items():
        if value is None:
            raise SpecFileError(f"key '{key}' has no value")
        prefix, _, name = key.partition(".")
        if name and prefix in groups:
            groups[prefix][name] = value.strip()
        elif not name and key in TOP_LEVEL_KEYS:
            top[key] = value.strip()
        else:
            raise SpecFileError(f"unknown key '{key}'")

    if not groups["stream1"]:
        raise SpecFileError("stream1.* keys are required")

    stream1 = _stream_fields(groups["stream1"])
    payload: Dict[str, Any] = dict(top)
    payload["stream1"] = _stream_source(stream1)

    if groups["stream2"]:
        stream2 = _stream_fields(groups["stream2"])
        if "path" not in stream2 and "path" not in stream1 and "kind" not in stream2:
            # 생성기 스트림은 stream1 설정을 물려받고 바뀐 값만 덮어쓴다
            inherited = {k: v for k, v in stream1.items()}
            inherited["seed"] = str(int(stream1.get("seed", 0)) + 1)
            inherited.update(stream2)
            stream2 = inherited
        payload["stream2"] = _stream_source(stream2)

    if groups["msm"]:
        payload["msm"] = groups["msm"]
    for name, value in groups["join"].items():
        if name not in JOIN_KEYS:
            raise SpecFileError(f"unknown key 'join.{name}'")
        payload[JOIN_KEYS[name]] = value

    if base_dir is not None:
        for stream in ("stream1", "stream2"):
            source = payload.get(stream)
            if source and "path" in source and not Path(source["path"]).is_absolute():
                source["path"] = str(base_dir / source["path"])

    try:
        return ExperimentSpec.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise SpecFileError(f"invalid spec ({location}): {first['msg']}")


def load_experiment_spec(path: Union[str, Path]) -> ExperimentSpec:
    """spec 파일 읽기 (상대 경로 스트림은 spec 파일 위치 기준)"""
    source = Path(path)
    if not source.is_file():
        raise SpecFileError(f"spec file not found: {source}")
    return spec_from_mapping(dict(dotenv_values(source)), base_dir=source.parent)
