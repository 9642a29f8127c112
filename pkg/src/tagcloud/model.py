"""Core data types for tag cloud layout.

A cloud is a list of weighted tags with pixel box dimensions, a target
line width, and an inter-tag space width.  Layout results are either a
list of lines (inline layout) or absolute pixel placements (2-D
placement).  Relations between tags are plain weighted graphs over tag
indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


class CloudError(Exception):
    """Base class for layout engine errors."""


class InvalidInputError(CloudError, ValueError):
    """Input data or arguments violate an operation's contract."""


class InfeasibleLineError(InvalidInputError):
    """A line holding two or more tags exceeds the target width."""


class InternalError(CloudError, RuntimeError):
    """An internal invariant broke; indicates a bug, not bad input."""


# Font scale: weight v in 0..9 renders at (8 + 4*v) pt.
WEIGHT_LEVELS = 10
MIN_FONT_PT = 8
FONT_STEP_PT = 4

DEFAULT_SPACE_WIDTH = 4
DEFAULT_TARGET_WIDTH = 550


def font_size_pt(weight: int) -> int:
    return MIN_FONT_PT + FONT_STEP_PT * weight


@dataclass(frozen=True)
class TagBox:
    """One tag: display label, weight level 0..9, and its pixel box.

    ``shapes`` optionally lists alternative (width, height) boxes of
    roughly equal area, used by the 2-D placement pipeline.  The default
    box itself does not need to appear in ``shapes``.
    """

    label: str
    weight: int
    width: int
    height: int
    shapes: tuple[tuple[int, int], ...] = ()

    def area(self) -> int:
        return self.width * self.height


@dataclass(frozen=True)
class Cloud:
    tags: tuple[TagBox, ...]
    target_width: int
    space_width: int = DEFAULT_SPACE_WIDTH


@dataclass(frozen=True)
class RelationGraph:
    """Weighted undirected relations over tag indices.

    Edges are stored normalized as (i, j, strength) with i < j, one
    entry per unordered pair.  Use :meth:`from_edges` to build one from
    raw pairs; parallel contributions are merged by summing strengths.
    """

    edges: tuple[tuple[int, int, float], ...] = ()

    @classmethod
    def from_edges(cls, raw: Iterable[tuple[int, int, float]]) -> "RelationGraph":
        merged: dict[tuple[int, int], float] = {}
        for a, b, s in raw:
            if a == b:
                raise InvalidInputError(f"self-loop on tag {a}")
            if s <= 0:
                raise InvalidInputError(f"edge ({a},{b}): strength must be positive, got {s}")
            if a < 0 or b < 0:
                raise InvalidInputError(f"edge ({a},{b}): negative tag index")
            key = (a, b) if a < b else (b, a)
            merged[key] = merged.get(key, 0) + s
        edges = tuple((i, j, merged[(i, j)]) for i, j in sorted(merged))
        return cls(edges)

    def adjacency(self) -> dict[int, list[tuple[int, float]]]:
        adj: dict[int, list[tuple[int, float]]] = {}
        for i, j, s in self.edges:
            adj.setdefault(i, []).append((j, s))
            adj.setdefault(j, []).append((i, s))
        return adj

    def total_strength(self) -> float:
        return sum(s for _, _, s in self.edges)


@dataclass(frozen=True)
class LineLayout:
    """An inline layout: lines of original tag indices, in display order."""

    lines: tuple[tuple[int, ...], ...]

    def tag_count(self) -> int:
        return sum(len(line) for line in self.lines)


@dataclass(frozen=True)
class Placement:
    tag: int
    x: int
    y: int
    width: int
    height: int


@dataclass(frozen=True)
class PlacedCloud:
    """Absolute placements (origin at the top-left, y grows downward)."""

    placements: tuple[Placement, ...]
    bbox: tuple[int, int]

    def by_tag(self) -> dict[int, Placement]:
        return {p.tag: p for p in self.placements}


def estimate_box(label: str, weight: int) -> TagBox:
    """Estimate a pixel box for a label without touching a renderer.

    Point size is 8 + 4*weight; the box is 1.25 em tall and 0.55 em per
    character wide, converted to pixels at 96 dpi and rounded up.  The
    arithmetic is exact (96/72 == 4/3), so results never drift across
    platforms.
    """

    if not label:
        raise InvalidInputError("label must be non-empty")
    if not 0 <= weight < WEIGHT_LEVELS:
        raise InvalidInputError(f"weight must be in 0..9, got {weight}")
    size = font_size_pt(weight)
    # height = ceil(1.25 * size * 96/72) = ceil(5*size/3)
    height = -(-5 * size // 3)
    # width = ceil(0.55 * size * 96/72 * chars) = ceil(11*size*chars/15)
    width = -(-11 * size * len(label) // 15)
    return TagBox(label=label, weight=weight, width=width, height=height)


def validate_cloud(cloud: Cloud) -> list[str]:
    """Collect every constraint violation instead of failing on the first."""

    problems: list[str] = []
    if not cloud.tags:
        problems.append("tags non-empty: cloud has no tags")
    if cloud.target_width < 1:
        problems.append(f"target_width must be >= 1, got {cloud.target_width}")
    if cloud.space_width < 0:
        problems.append(f"space_width must be >= 0, got {cloud.space_width}")
    for i, tag in enumerate(cloud.tags):
        where = f"tag {i} ({tag.label!r})"
        if not tag.label:
            problems.append(f"{where}: empty label")
        if not 0 <= tag.weight < WEIGHT_LEVELS:
            problems.append(f"{where}: weight range is 0..9, got {tag.weight}")
        if tag.width < 1:
            problems.append(f"{where}: width must be >= 1, got {tag.width}")
        if tag.height < 1:
            problems.append(f"{where}: height must be >= 1, got {tag.height}")
        base = tag.width * tag.height
        for w, h in tag.shapes:
            if w < 1 or h < 1:
                problems.append(f"{where}: degenerate shape ({w},{h})")
            elif base > 0 and abs(w * h - base) > 0.15 * base:
                problems.append(
                    f"{where}: shape ({w},{h}) area off by more than 15% from {tag.width}x{tag.height}"
                )
    return problems


def validate_graph(graph: RelationGraph, n_tags: int) -> list[str]:
    problems = []
    for i, j, s in graph.edges:
        if i == j:
            problems.append(f"edge ({i},{j}): self-loop")
        if s <= 0:
            problems.append(f"edge ({i},{j}): non-positive strength {s}")
        if not (0 <= i < n_tags) or not (0 <= j < n_tags):
            problems.append(f"edge ({i},{j}): tag index out of range 0..{n_tags - 1}")
    return problems


def cloud_to_json(cloud: Cloud, graph: RelationGraph | None = None) -> str:
    doc: dict = {
        "target_width": cloud.target_width,
        "space_width": cloud.space_width,
        "tags": [
            {"label": t.label, "weight": t.weight, "width": t.width, "height": t.height}
            for t in cloud.tags
        ],
    }
    if graph is not None and graph.edges:
        doc["edges"] = [{"a": i, "b": j, "strength": s} for i, j, s in graph.edges]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInputError(msg)


def cloud_from_json(text: str) -> tuple[Cloud, RelationGraph | None]:
    """Parse a cloud document; returns (cloud, graph or None).

    The graph is None when the document carries no ``edges`` field.
    Raises InvalidInputError on malformed documents.
    """

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"not valid JSON: {e}") from e
    _require(isinstance(doc, dict), "top-level JSON value must be an object")
    _require("target_width" in doc, "missing field: target_width")
    _require("tags" in doc and isinstance(doc["tags"], list), "missing or invalid field: tags")
    target_width = doc["target_width"]
    space_width = doc.get("space_width", DEFAULT_SPACE_WIDTH)
    _require(isinstance(target_width, int) and not isinstance(target_width, bool),
             "target_width must be an integer")
    _require(isinstance(space_width, int) and not isinstance(space_width, bool),
             "space_width must be an integer")
    tags = []
    for k, entry in enumerate(doc["tags"]):
        _require(isinstance(entry, dict), f"tags[{k}] must be an object")
        for fld in ("label", "weight", "width", "height"):
            _require(fld in entry, f"tags[{k}]: missing field {fld}")
        _require(isinstance(entry["label"], str), f"tags[{k}]: label must be a string")
        for fld in ("weight", "width", "height"):
            v = entry[fld]
            _require(isinstance(v, int) and not isinstance(v, bool),
                     f"tags[{k}]: {fld} must be an integer")
        tags.append(TagBox(label=entry["label"], weight=entry["weight"],
                           width=entry["width"], height=entry["height"]))
    graph = None
    if "edges" in doc:
        _require(isinstance(doc["edges"], list), "edges must be a list")
        raw = []
        for k, entry in enumerate(doc["edges"]):
            _require(isinstance(entry, dict), f"edges[{k}] must be an object")
            for fld in ("a", "b", "strength"):
                _require(fld in entry, f"edges[{k}]: missing field {fld}")
            a, b, s = entry["a"], entry["b"], entry["strength"]
            _require(isinstance(a, int) and isinstance(b, int), f"edges[{k}]: endpoints must be integers")
            _require(isinstance(s, (int, float)) and not isinstance(s, bool),
                     f"edges[{k}]: strength must be a number")
            raw.append((a, b, s))
        graph = RelationGraph.from_edges(raw)
        bad = [p for p in validate_graph(graph, len(tags))]
        if bad:
            raise InvalidInputError("; ".join(bad))
    cloud = Cloud(tags=tuple(tags), target_width=target_width, space_width=space_width)
    problems = validate_cloud(cloud)
    if problems:
        raise InvalidInputError("; ".join(problems))
    return cloud, graph
