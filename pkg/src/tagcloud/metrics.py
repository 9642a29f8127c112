"""Evaluation metrics shared by tests and the benchmark harness."""

from __future__ import annotations

import math

from .model import (
    Cloud,
    InvalidInputError,
    LineLayout,
    PlacedCloud,
    Placement,
    RelationGraph,
)


def bbox_area(placed: PlacedCloud) -> float:
    """Bounding box area in kilopixels."""

    w, h = placed.bbox
    return w * h / 1000


def weighted_distance(placed: PlacedCloud, graph: RelationGraph) -> float:
    """Sum of strength-weighted distances between related tags.

    Distances are measured between lower-left corners, i.e. (x, y +
    height) with y growing downward.
    """

    corners = {p.tag: (p.x, p.y + p.height) for p in placed.placements}
    total = 0.0
    for i, j, s in graph.edges:
        if i not in corners or j not in corners:
            raise InvalidInputError(f"edge ({i},{j}) references an unplaced tag")
        total += s * math.dist(corners[i], corners[j])
    return total


def layout_to_placement(layout: LineLayout, cloud: Cloud) -> PlacedCloud:
    """Give a line layout absolute pixel coordinates.

    Lines stack top to bottom at their tallest tag's height; tags sit
    left-aligned with space-width gaps and top-aligned within the line.
    The box width is the target width unless some solo overfull line
    runs wider.
    """

    flat = sorted(i for line in layout.lines for i in line)
    if flat != list(range(len(cloud.tags))):
        raise InvalidInputError("layout does not place every tag exactly once")
    placements: list[Placement] = []
    y = 0
    bbox_w = cloud.target_width
    for line in layout.lines:
        if not line:
            raise InvalidInputError("layout contains an empty line")
        line_h = max(cloud.tags[i].height for i in line)
        x = 0
        for idx in line:
            tag = cloud.tags[idx]
            placements.append(Placement(idx, x, y, tag.width, tag.height))
            x += tag.width + cloud.space_width
        line_w = x - cloud.space_width
        if line_w > cloud.target_width:
            if len(line) > 1:
                raise InvalidInputError("multi-tag line exceeds the target width")
            bbox_w = max(bbox_w, line_w)
        y += line_h
    placements.sort(key=lambda p: p.tag)
    return PlacedCloud(tuple(placements), (bbox_w, y))
