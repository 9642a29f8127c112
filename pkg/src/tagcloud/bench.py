"""Benchmark harness comparing the layout methods on a set of clouds.

For every cloud each method runs once, and the report records layout
quality (line badness where lines exist, bounding box area, weighted
relation distance when a graph is present) plus wall-clock time and,
for the 2-D placer, how many width retries it needed.  Reruns with the
same seed reproduce everything except the timing column.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .inline import BadnessAggregate, dp_break, greedy_break, line_badnesses
from .metrics import bbox_area, layout_to_placement, weighted_distance
from .mincut import layout_mincut
from .model import Cloud, LineLayout, RelationGraph
from .reorder import RNG_ALGORITHM, ffdh, ffdhw, nfdh, shuffle_best


@dataclass(frozen=True)
class BenchConfig:
    seed: int = 0
    agg: BadnessAggregate = BadnessAggregate.SUM_OF_SQUARES
    shuffles: int = 10
    shape_variants: int = 3


@dataclass(frozen=True)
class BenchRow:
    cloud: str
    method: str
    badness_l1: int | None
    badness_l2: int | None
    area_kpx: float
    weighted_dist: float | None
    time_ms: float
    iterations: int | None


CSV_COLUMNS = ("cloud", "method", "badness_l1", "badness_l2", "area_kpx",
               "weighted_dist", "time_ms", "iterations")


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    config: BenchConfig

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# seed={self.config.seed} agg={self.config.agg.value}"
                  f" shuffles={self.config.shuffles} rng={RNG_ALGORITHM}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow([
                row.cloud,
                row.method,
                _fmt(row.badness_l1),
                _fmt(row.badness_l2),
                _fmt(row.area_kpx),
                _fmt(row.weighted_dist),
                _fmt(row.time_ms),
                _fmt(row.iterations),
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        header = list(CSV_COLUMNS)
        table = [header]
        for row in self.rows:
            table.append([
                row.cloud, row.method, _fmt(row.badness_l1), _fmt(row.badness_l2),
                _fmt(row.area_kpx), _fmt(row.weighted_dist), _fmt(row.time_ms),
                _fmt(row.iterations),
            ])
        widths = [max(len(r[c]) for r in table) for c in range(len(header))]
        lines = []
        for r in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def _alpha_order(cloud: Cloud) -> list[int]:
    return sorted(range(len(cloud.tags)), key=lambda i: (cloud.tags[i].label, i))


def _weight_order(cloud: Cloud) -> list[int]:
    return sorted(range(len(cloud.tags)), key=lambda i: (-cloud.tags[i].weight, i))


def method_table(config: BenchConfig) -> dict[str, Callable]:
    """Inline methods; the 2-D placer is handled separately."""

    agg = config.agg
    return {
        "greedy-alpha": lambda c, g: greedy_break(c, _alpha_order(c)),
        "greedy-weight": lambda c, g: greedy_break(c, _weight_order(c)),
        "dp-alpha": lambda c, g: dp_break(c, _alpha_order(c), agg),
        "dp-weight": lambda c, g: dp_break(c, _weight_order(c), agg),
        f"shuffle{config.shuffles}": lambda c, g: shuffle_best(
            c, config.shuffles, agg, config.seed),
        "nfdh": lambda c, g: nfdh(c),
        "ffdh": lambda c, g: ffdh(c),
        "ffdhw": lambda c, g: ffdhw(c),
    }


def run_benchmark(inputs: Sequence[tuple[str, Cloud, RelationGraph | None]],
                  config: BenchConfig | None = None) -> BenchReport:
    config = config or BenchConfig()
    rows: list[BenchRow] = []
    for name, cloud, graph in inputs:
        for method, fn in method_table(config).items():
            start = time.perf_counter()
            layout: LineLayout = fn(cloud, graph)
            elapsed = (time.perf_counter() - start) * 1000
            badness = line_badnesses(cloud, layout)
            placed = layout_to_placement(layout, cloud)
            rows.append(BenchRow(
                cloud=name,
                method=method,
                badness_l1=sum(badness),
                badness_l2=sum(b * b for b in badness),
                area_kpx=bbox_area(placed),
                weighted_dist=(weighted_distance(placed, graph)
                               if graph and graph.edges else None),
                time_ms=elapsed,
                iterations=None,
            ))
        start = time.perf_counter()
        result = layout_mincut(cloud, graph, seed=config.seed,
                               shape_variants=config.shape_variants)
        elapsed = (time.perf_counter() - start) * 1000
        rows.append(BenchRow(
            cloud=name,
            method="mincut",
            badness_l1=None,  # no lines to score in a 2-D placement
            badness_l2=None,
            area_kpx=bbox_area(result.placed),
            weighted_dist=(weighted_distance(result.placed, graph)
                           if graph and graph.edges else None),
            time_ms=elapsed,
            iterations=result.iterations,
        ))
    return BenchReport(rows=tuple(rows), config=config)
