#!/usr/bin/env python3
"""DRSP Auto Demo - 센서 스트림 축약 + 유사도 조인 자동 데모"""

import sys
from pathlib import Path

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from stream_join.bench.harness import reduced_window, score_outliers
from stream_join.core.join.similarity_join import run_join
from stream_join.core.pipeline import StreamingDrsp
from stream_join.core.reduction.msm import drf, lift_raw, msm_reduce, suggest_seg_size
from stream_join.data.generators import GeneratorKind, GeneratorSpec, gen_stream_pair
from stream_join.models.config import JoinConfig, MsmConfig, WindowQuantifier

console = Console()


class DrspAutoDemo:
    """온도 센서 두 개를 비교하며 이상 구간을 찾는 자동 데모"""

    def __init__(self, n: int = 4096, seed: int = 11):
        self.console = console
        self.spec = GeneratorSpec(
            kind=GeneratorKind.SENSOR,
            n=n,
            seed=seed,
            noise=0.3,
            spike_count=6,
            spike_height=12.0,
        )
        self.wsize_original = 256
        self.delta = 3.0
        self.stream1 = None
        self.stream2 = None
        self.msm = None

    def run(self):
        """자동 데모 실행"""
        self._show_intro()

        self.console.print("\n[bold yellow]📍 1단계: 센서 스트림 생성[/bold yellow]")
        self._generate()

        self.console.print("\n[bold yellow]📍 2단계: seg_size 추천과 MSM 축약[/bold yellow]")
        self._reduce()

        self.console.print("\n[bold yellow]📍 3단계: 원본 vs 축약 조인[/bold yellow]")
        self._compare()

        self.console.print("\n[bold yellow]📍 4단계: 스트리밍 처리[/bold yellow]")
        self._stream()

    def _show_intro(self):
        self.console.print(Panel(
            """
[bold yellow]📡 Stream Join: MSM 축약 기반 유사도 조인[/bold yellow]

두 온도 센서가 같은 건물의 온도를 잽니다.
센서 값이 갑자기 튀면 두 스트림이 더 이상 비슷하지 않게 됩니다.
원본 대신 축약된 스트림으로도 같은 이상 구간을 찾을 수 있을까요?
            """.strip(),
            title="🎮 DRSP 데모",
            border_style="bright_blue"
        ))

    def _generate(self):
        self.stream1, self.stream2 = gen_stream_pair(self.spec)
        table = Table(title="생성된 스트림")
        table.add_column("스트림")
        table.add_column("포인트", justify="right")
        table.add_column("스파이크 시점")
        table.add_row("센서 1", str(len(self.stream1)), ", ".join(map(str, self.stream1.outliers)))
        table.add_row("센서 2", str(len(self.stream2)), ", ".join(map(str, self.stream2.outliers)))
        self.console.print(table)

    def _reduce(self):
        seg_size = suggest_seg_size(self.stream1, levels=3)
        self.msm = MsmConfig(seg_size=seg_size, levels=3)
        reduced = msm_reduce(self.stream1, self.msm)
        self.console.print(Panel(
            f"""
추천 seg_size: {seg_size} (분산 보존 90% 이상 중 최대)
DRF: 1/{self.msm.block_size} ({drf(self.msm):.4f})
크기: {len(self.stream1)} → {len(reduced)}
최대 반경: {float(reduced.radii.max()):.3f}
            """.strip(),
            title="🧩 MSM 축약",
            border_style="cyan"
        ))

    def _compare(self):
        quantifier = WindowQuantifier.EXISTS
        original_cfg = JoinConfig(delta=self.delta, wsize=self.wsize_original, window_quantifier=quantifier)
        reduced_cfg = original_cfg.with_window(reduced_window(self.wsize_original, self.msm))

        original = run_join(lift_raw(self.stream1), lift_raw(self.stream2), original_cfg)
        reduced = run_join(msm_reduce(self.stream1, self.msm), msm_reduce(self.stream2, self.msm), reduced_cfg)
        truth = sorted(set(self.stream1.outliers) | set(self.stream2.outliers))

        table = Table(title=f"δ = {self.delta}")
        table.add_column("")
        table.add_column("윈도우", justify="right")
        table.add_column("매칭률", justify="right")
        table.add_column("검사 횟수", justify="right")
        table.add_column("이상치 재현율", justify="right")
        for name, cfg, result in (("원본", original_cfg, original), ("축약", reduced_cfg, reduced)):
            score = score_outliers(result.decisions, truth)
            table.add_row(
                name,
                str(cfg.wsize),
                f"{result.stats.matched_pct:.2f}%",
                str(result.stats.total_cross_checks),
                f"{score.recall:.0%}",
            )
        self.console.print(table)

    def _stream(self):
        cfg = JoinConfig(delta=self.delta, wsize=reduced_window(self.wsize_original, self.msm))
        engine = StreamingDrsp(self.msm, cfg)
        alerts = []
        for p1, p2 in zip(self.stream1.values, self.stream2.values):
            alerts.extend(d for d in engine.push(p1, p2) if d.is_outlier)
        alerts.extend(d for d in engine.finish() if d.is_outlier)

        lines = [
            f"원본 [{d.raw_start}, {d.raw_start + d.raw_count}) - {d.verdict.value}"
            for d in alerts[:8]
        ]
        self.console.print(Panel(
            "\n".join(lines) if lines else "이상 구간 없음",
            title=f"🚨 실시간 경보 {len(alerts)}건 (매칭률 {engine.stats.matched_pct:.2f}%)",
            border_style="red" if alerts else "green"
        ))


def main():
    demo = DrspAutoDemo()
    demo.run()


if __name__ == "__main__":
    main()
