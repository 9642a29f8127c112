"""Line breaking for inline (text-flow) tag clouds.

A layout cuts the tag sequence into lines.  Each line is scored by its
badness: whitespace left at the end of the line plus whitespace above
tags shorter than the line's tallest tag, both weighted so the score is
the line's white area in pixels.  A whole layout is scored by folding
line badness through an aggregate (sum, sum of squares, or max).

``greedy_break`` fills lines first-come first-served; ``dp_break``
finds a layout minimizing the aggregate exactly via dynamic
programming over break positions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import (
    Cloud,
    InfeasibleLineError,
    InvalidInputError,
    LineLayout,
)


class BadnessAggregate(enum.Enum):
    """How per-line badness folds into a layout score.

    Values double as the CLI spellings: l1 = sum, l2 = sum of squares
    (same argmin as the Euclidean norm), linf = max.
    """

    SUM = "l1"
    SUM_OF_SQUARES = "l2"
    MAX = "linf"

    @classmethod
    def from_name(cls, name: str) -> "BadnessAggregate":
        for member in cls:
            if member.value == name or member.name.lower() == name.lower():
                return member
        raise InvalidInputError(f"unknown aggregate {name!r} (use l1, l2, or linf)")


def line_badness(line_tags: Sequence[tuple[int, int]], target_width: int,
                 space_width: int = 4) -> int:
    """Badness of one line of (width, height) boxes.

    slack = target - sum(widths) - (k-1)*space.  A negative slack is
    only legal for a single tag wider than the whole line (it simply
    overflows); two or more tags must fit, otherwise the line is
    infeasible.  Badness = H*|slack| + sum((H - h_i) * w_i) with H the
    tallest height on the line.
    """

    if not line_tags:
        raise InvalidInputError("line must hold at least one tag")
    widths = [w for w, _ in line_tags]
    heights = [h for _, h in line_tags]
    if min(widths) < 1 or min(heights) < 1:
        raise InvalidInputError("tag boxes must be at least 1x1")
    k = len(line_tags)
    slack = target_width - sum(widths) - (k - 1) * space_width
    if slack < 0 and k > 1:
        raise InfeasibleLineError(
            f"{k} tags need {target_width - slack} pixels but the line is {target_width}"
        )
    tallest = max(heights)
    return tallest * abs(slack) + sum((tallest - h) * w for w, h in line_tags)


def aggregate(badness_values: Iterable[int], agg: BadnessAggregate) -> int:
    values = list(badness_values)
    if not values:
        raise InvalidInputError("aggregate of an empty layout is undefined")
    if agg is BadnessAggregate.SUM:
        return sum(values)
    if agg is BadnessAggregate.SUM_OF_SQUARES:
        return sum(v * v for v in values)
    return max(values)


def line_badnesses(cloud: Cloud, layout: LineLayout) -> list[int]:
    """Per-line badness of an existing layout."""

    return [
        line_badness([(cloud.tags[i].width, cloud.tags[i].height) for i in line],
                     cloud.target_width, cloud.space_width)
        for line in layout.lines
    ]


def layout_badness(cloud: Cloud, layout: LineLayout, agg: BadnessAggregate) -> int:
    return aggregate(line_badnesses(cloud, layout), agg)


def _check_order(n: int, order: Sequence[int] | None) -> list[int]:
    if order is None:
        return list(range(n))
    order = list(order)
    if sorted(order) != list(range(n)):
        raise InvalidInputError("order must be a permutation of all tag indices")
    return order


def greedy_break(cloud: Cloud, order: Sequence[int] | None = None) -> LineLayout:
    """First-fit line filling in the given order.

    A tag opens a new line when it no longer fits; a tag wider than the
    target width always gets a line of its own.
    """

    if not cloud.tags:
        raise InvalidInputError("cloud has no tags")
    order = _check_order(len(cloud.tags), order)
    target, space = cloud.target_width, cloud.space_width
    lines: list[tuple[int, ...]] = []
    current: list[int] = []
    used = 0
    for idx in order:
        w = cloud.tags[idx].width
        if w > target:
            if current:
                lines.append(tuple(current))
                current, used = [], 0
            lines.append((idx,))
            continue
        if not current:
            current, used = [idx], w
        elif used + space + w > target:
            lines.append(tuple(current))
            current, used = [idx], w
        else:
            current.append(idx)
            used += space + w
    if current:
        lines.append(tuple(current))
    return LineLayout(tuple(lines))


def dp_break(cloud: Cloud, order: Sequence[int] | None = None,
             agg: BadnessAggregate = BadnessAggregate.SUM_OF_SQUARES) -> LineLayout:
    """Optimal line breaking for the given order and aggregate.

    The last line is scored like any other.  Ties are broken toward
    fewer lines, then the lexicographically smallest sequence of line
    end positions, so results are reproducible.
    """

    if not cloud.tags:
        raise InvalidInputError("cloud has no tags")
    order = _check_order(len(cloud.tags), order)
    widths = [cloud.tags[i].width for i in order]
    heights = [cloud.tags[i].height for i in order]
    if agg is BadnessAggregate.MAX:
        ends = _solve_minimax(widths, heights, cloud.target_width, cloud.space_width)
    else:
        ends, _ = _solve_additive(widths, heights, cloud.target_width, cloud.space_width,
                                  square=agg is BadnessAggregate.SUM_OF_SQUARES)
    lines = []
    prev = 0
    for end in ends:
        lines.append(tuple(order[prev:end]))
        prev = end
    return LineLayout(tuple(lines))


@dataclass(frozen=True)
class BreakTable:
    """DP internals exposed for inspection.

    ``t[j]`` is the optimal aggregate over the first j tags; ``K[j]``
    the start of the final line in the layout chosen for that prefix
    (K[0] is 0 and unused).  Following n, K[n], K[K[n]], ... back to 0
    reproduces the chosen break positions, and t never decreases along
    that chain.
    """

    t: tuple[int, ...]
    K: tuple[int, ...]


def break_table(cloud: Cloud, order: Sequence[int] | None = None,
                agg: BadnessAggregate = BadnessAggregate.SUM_OF_SQUARES) -> BreakTable:
    if not cloud.tags:
        raise InvalidInputError("cloud has no tags")
    order = _check_order(len(cloud.tags), order)
    widths = [cloud.tags[i].width for i in order]
    heights = [cloud.tags[i].height for i in order]
    target, space = cloud.target_width, cloud.space_width
    if agg is BadnessAggregate.MAX:
        t = _minimax_scores(widths, heights, target, space)
        ends = _solve_minimax(widths, heights, target, space)
        K = _chain_to_table(len(widths), ends, t, widths, heights, target, space)
        return BreakTable(t=tuple(t), K=tuple(K))
    ends, states = _solve_additive(widths, heights, target, space,
                                   square=agg is BadnessAggregate.SUM_OF_SQUARES)
    t = [s[0] for s in states]
    K = [0] * (len(widths) + 1)
    for j in range(1, len(widths) + 1):
        e = states[j][2]
        K[j] = e[-2] if len(e) >= 2 else 0
    return BreakTable(t=tuple(t), K=tuple(K))


def _solve_additive(widths: list[int], heights: list[int], target: int, space: int,
                    square: bool):
    """DP over prefixes; state = (score, line count, end positions).

    Python tuple comparison implements the tie-break exactly: states
    order by score, then fewer lines, then lexicographic ends.
    Appending a line preserves that order (additive scores are strictly
    monotone), so one best state per prefix suffices.
    """

    n = len(widths)
    best: list[tuple[int, int, tuple[int, ...]] | None] = [None] * (n + 1)
    best[0] = (0, 0, ())
    for j in range(1, n + 1):
        cand = None
        sum_w = sum_hw = tallest = 0
        # grow the final line leftward: tags k..j-1
        for k in range(j - 1, -1, -1):
            sum_w += widths[k]
            sum_hw += widths[k] * heights[k]
            if heights[k] > tallest:
                tallest = heights[k]
            count = j - k
            slack = target - sum_w - (count - 1) * space
            if slack < 0 and count > 1:
                break  # line already overfull; growing it only makes it worse
            prev = best[k]
            if prev is None:  # pragma: no cover - every prefix is reachable
                continue
            b = tallest * abs(slack) + tallest * sum_w - sum_hw
            score = prev[0] + (b * b if square else b)
            state = (score, prev[1] + 1, prev[2] + (j,))
            if cand is None or state < cand:
                cand = state
        best[j] = cand
    final = best[n]
    assert final is not None  # solo lines are always admissible
    return final[2], best


def _minimax_scores(widths, heights, target, space) -> list[int]:
    n = len(widths)
    inf = float("inf")
    t = [inf] * (n + 1)
    t[0] = 0
    for j in range(1, n + 1):
        sum_w = sum_hw = tallest = 0
        for k in range(j - 1, -1, -1):
            sum_w += widths[k]
            sum_hw += widths[k] * heights[k]
            if heights[k] > tallest:
                tallest = heights[k]
            count = j - k
            slack = target - sum_w - (count - 1) * space
            if slack < 0 and count > 1:
                break
            b = tallest * abs(slack) + tallest * sum_w - sum_hw
            cand = b if t[k] < b else t[k]
            if cand < t[j]:
                t[j] = cand
    return t


def _solve_minimax(widths: list[int], heights: list[int], target: int,
                   space: int) -> tuple[int, ...]:
    """Minimize the worst line, then line count, then lexicographic ends.

    One scalar per prefix finds the optimal worst-line score, but the
    tie-break cannot ride along (max() is not strictly monotone), so
    reconstruction runs on the graph of lines scoring no worse than the
    optimum: a bitmask per suffix records achievable line counts, and a
    forward greedy picks the earliest end that still completes.
    """

    n = len(widths)
    t = _minimax_scores(widths, heights, target, space)
    limit = t[n]

    def admissible_ends(v: int):
        """Ends j of lines starting at v with badness <= limit."""
        sum_w = sum_hw = tallest = 0
        for j in range(v + 1, n + 1):
            sum_w += widths[j - 1]
            sum_hw += widths[j - 1] * heights[j - 1]
            if heights[j - 1] > tallest:
                tallest = heights[j - 1]
            count = j - v
            slack = target - sum_w - (count - 1) * space
            if slack < 0 and count > 1:
                break
            b = tallest * abs(slack) + tallest * sum_w - sum_hw
            if b <= limit:
                yield j

    # counts[v] bit c set <=> the suffix from v splits into exactly c lines
    counts = [0] * (n + 1)
    counts[n] = 1
    for v in range(n - 1, -1, -1):
        acc = 0
        for j in admissible_ends(v):
            acc |= counts[j] << 1
        counts[v] = acc
    fewest = (counts[0] & -counts[0]).bit_length() - 1

    ends: list[int] = []
    v, remaining = 0, fewest
    while v < n:
        for j in admissible_ends(v):
            if counts[j] >> (remaining - 1) & 1:
                ends.append(j)
                v, remaining = j, remaining - 1
                break
        else:  # pragma: no cover - contradiction with counts[0]
            raise AssertionError("minimax reconstruction lost its path")
    return tuple(ends)


def _chain_to_table(n, ends, t, widths, heights, target, space) -> list[int]:
    """K array consistent with the chosen minimax layout."""

    K = [0] * (n + 1)
    for j in range(1, n + 1):
        sum_w = sum_hw = tallest = 0
        pick = None
        for k in range(j - 1, -1, -1):
            sum_w += widths[k]
            sum_hw += widths[k] * heights[k]
            if heights[k] > tallest:
                tallest = heights[k]
            count = j - k
            slack = target - sum_w - (count - 1) * space
            if slack < 0 and count > 1:
                break
            b = tallest * abs(slack) + tallest * sum_w - sum_hw
            if max(t[k], b) == t[j]:
                pick = k  # smallest such k wins (loop runs downward)
        K[j] = pick if pick is not None else 0
    prev = 0
    for end in ends:
        K[end] = prev
        prev = end
    return K
