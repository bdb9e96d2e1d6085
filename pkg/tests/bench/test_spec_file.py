"""실험 spec 파일 테스트"""

from pathlib import Path

import pytest

from stream_join.bench.spec_file import load_experiment_spec, parse_waypoints, spec_from_mapping
from stream_join.data.generators import GeneratorKind
from stream_join.models.config import MsmConfig, WindowQuantifier
from stream_join.utils.errors import SpecFileError
from tests.conftest import write_text

BASE = {
    "stream1.kind": "random-walk",
    "stream1.n": "6000",
    "stream1.seed": "4",
    "join.delta": "2.5",
}


class TestSpecFromMapping:
    """평면 key=value → ExperimentSpec"""

    def test_defaults(self):
        spec = spec_from_mapping(BASE)
        assert spec.stream1.generator.kind is GeneratorKind.RANDOM_WALK
        assert spec.stream1.generator.n == 6000
        assert spec.stream2 is None
        assert spec.delta == 2.5
        assert spec.msm == MsmConfig()
        assert spec.wsize_original == 800
        assert spec.window_quantifier is WindowQuantifier.EXISTS
        assert spec.compare_original is True
        assert spec.label == "random-walk"

    def test_full_mapping(self):
        spec = spec_from_mapping({
            **BASE,
            "msm.seg_size": "3",
            "msm.levels": "2",
            "join.wsize": "120",
            "join.quantifier": "all",
            "compare_original": "false",
        })
        assert spec.msm == MsmConfig(seg_size=3, levels=2)
        assert spec.wsize_original == 120
        assert spec.window_quantifier is WindowQuantifier.ALL
        assert spec.compare_original is False

    def test_stream2_inherits_stream1(self):
        """stream2는 stream1 설정 + seed + 1 위에 덮어쓴다"""
        spec = spec_from_mapping({**BASE, "stream2.scale": "0.5"})
        second = spec.stream2.generator
        assert second.kind is GeneratorKind.RANDOM_WALK
        assert second.n == 6000
        assert second.seed == 5
        assert second.scale == 0.5

    def test_stream2_default_is_next_seed(self):
        spec = spec_from_mapping({**BASE, "stream1.n": "50"})
        first, second = spec.load_streams()
        assert len(first) == len(second) == 50
        assert not (first.values == second.values).all()

    def test_target_instead_of_delta(self):
        mapping = {k: v for k, v in BASE.items() if k != "join.delta"}
        spec = spec_from_mapping({**mapping, "target_pct": "85"})
        assert spec.delta is None
        assert spec.target_pct == 85.0

    def test_waypoints(self):
        spec = spec_from_mapping({
            "stream1.kind": "gps",
            "stream1.n": "100",
            "stream1.waypoints": "0:0, 10:0, 10:5",
            "join.delta": "1",
        })
        assert spec.stream1.generator.waypoints == [(0.0, 0.0), (10.0, 0.0), (10.0, 5.0)]


class TestSpecErrors:
    """잘못된 spec → SpecFileError"""

    @pytest.mark.parametrize("key", ["colour", "join.speed", "stream3.kind", "msm"])
    def test_unknown_key(self, key):
        with pytest.raises(SpecFileError, match="unknown key"):
            spec_from_mapping({**BASE, key: "1"})

    def test_delta_or_target_required(self):
        mapping = {k: v for k, v in BASE.items() if k != "join.delta"}
        with pytest.raises(SpecFileError, match="delta or target_pct"):
            spec_from_mapping(mapping)

    def test_stream1_required(self):
        with pytest.raises(SpecFileError, match="stream1"):
            spec_from_mapping({"join.delta": "1"})

    def test_file_stream_rejects_generator_keys(self):
        with pytest.raises(SpecFileError, match="does not take n"):
            spec_from_mapping({"stream1.path": "a.csv", "stream1.n": "5", "stream2.path": "b.csv", "join.delta": "1"})

    def test_file_stream1_needs_stream2(self):
        with pytest.raises(SpecFileError, match="stream2"):
            spec_from_mapping({"stream1.path": "a.csv", "join.delta": "1"})

    @pytest.mark.parametrize("key,value", [
        ("msm.seg_size", "1"),
        ("join.delta", "-1"),
        ("join.wsize", "0"),
        ("target_pct", "150"),
        ("stream1.n", "zero"),
    ])
    def test_invalid_values(self, key, value):
        with pytest.raises(SpecFileError, match="invalid spec"):
            spec_from_mapping({**BASE, "target_pct": "50", key: value})

    def test_key_without_value(self):
        with pytest.raises(SpecFileError, match="no value"):
            spec_from_mapping({**BASE, "msm.levels": None})

    def test_bad_waypoint(self):
        with pytest.raises(SpecFileError, match="bad waypoint"):
            parse_waypoints("0:0,1-1")


class TestLoadExperimentSpec:
    """파일에서 읽기"""

    def test_load(self, tmp_path):
        path = write_text(tmp_path / "exp.env", "\n".join([
            "# 센서 실험",
            "stream1.kind=sensor",
            "stream1.n=2000",
            "stream1.spike_count=4",
            "msm.seg_size=4",
            "join.wsize=256",
            "join.delta=3",
            "",
        ]))
        spec = load_experiment_spec(path)
        assert spec.stream1.generator.kind is GeneratorKind.SENSOR
        assert spec.stream1.generator.spike_count == 4
        assert spec.msm.seg_size == 4
        assert spec.wsize_original == 256

    def test_relative_paths_resolve_against_spec_dir(self, tmp_path, raw_csv):
        subdir = tmp_path / "specs"
        subdir.mkdir()
        path = write_text(subdir / "files.env", "stream1.path=../raw.csv\nstream2.path=../raw.csv\njoin.delta=1\n")
        spec = load_experiment_spec(path)
        assert spec.stream1.path == subdir / Path("../raw.csv")
        assert spec.label == "raw"
        first, second = spec.load_streams()
        assert len(first) == len(second) == 8

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecFileError, match="not found"):
            load_experiment_spec(tmp_path / "missing.env")
