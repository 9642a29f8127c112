"""Independent reference implementations used to check the fast code.

Everything here favors obviousness over speed: exhaustive enumeration,
no incremental bookkeeping, no pruning beyond what the definitions
demand.  Tests compare library results against these.
"""

from __future__ import annotations

import itertools
from collections import Counter


def line_score(boxes, target, space):
    """White area of one line of (width, height) boxes, or None if the
    line holds several tags that cannot fit."""

    widths = [w for w, _ in boxes]
    heights = [h for _, h in boxes]
    slack = target - sum(widths) - (len(boxes) - 1) * space
    if slack < 0 and len(boxes) > 1:
        return None
    tallest = max(heights)
    return tallest * abs(slack) + sum((tallest - h) * w for w, h in boxes)


def fold(values, agg):
    if agg == "l1":
        return sum(values)
    if agg == "l2":
        return sum(v * v for v in values)
    if agg == "linf":
        return max(values)
    raise ValueError(agg)


def best_break(boxes, target, space, agg):
    """Try every one of the 2^(n-1) ways to cut the sequence into lines.

    Returns (score, ends) where ends are the 1-based break positions of
    the layout minimizing (score, number of lines, ends).
    """

    n = len(boxes)
    best = None
    for mask in range(1 << (n - 1)):
        ends = [i + 1 for i in range(n - 1) if mask >> i & 1] + [n]
        scores = []
        prev = 0
        for e in ends:
            s = line_score(boxes[prev:e], target, space)
            if s is None:
                break
            scores.append(s)
            prev = e
        else:
            key = (fold(scores, agg), len(ends), tuple(ends))
            if best is None or key < best:
                best = key
    return (best[0], best[2]) if best else None


def tree_dims(tree_tuple, leaf_choice, gap):
    """(width, height) of a slicing tree once every leaf picked a shape.

    ``tree_tuple`` is a nested ("V"|"H", left, right) / ("leaf", tag)
    structure; ``leaf_choice`` maps tag -> (width, height).
    """

    kind = tree_tuple[0]
    if kind == "leaf":
        return leaf_choice[tree_tuple[1]]
    _, first, second = tree_tuple
    aw, ah = tree_dims(first, leaf_choice, gap)
    bw, bh = tree_dims(second, leaf_choice, gap)
    if kind == "V":
        return aw + gap + bw, max(ah, bh)
    return max(aw, bw), ah + bh


def best_root_shape(tree_tuple, leaf_shapes, target, gap):
    """Exhaustively assign shapes to leaves and pick the root box the
    same way the library does: min area fitting the width budget (ties
    to the shorter box), else the narrowest."""

    tags = []

    def collect(t):
        if t[0] == "leaf":
            tags.append(t[1])
        else:
            collect(t[1])
            collect(t[2])

    collect(tree_tuple)
    fitting = []
    all_dims = []
    for combo in itertools.product(*(leaf_shapes[t] for t in tags)):
        dims = tree_dims(tree_tuple, dict(zip(tags, combo)), gap)
        all_dims.append(dims)
        if dims[0] <= target:
            fitting.append(dims)
    if fitting:
        return min(fitting, key=lambda d: (d[0] * d[1], d[1]))
    return min(all_dims, key=lambda d: (d[0], d[1]))


def best_bipartition(tags, edges, areas, cost_a=None, cost_b=None):
    """Scan every two-sided assignment of ``tags``.

    Returns (part_a, part_b, cut, relaxed).  Prefers assignments whose
    side areas are within a factor two of each other; if none exist,
    least absolute area difference.  Minimizes cut plus per-tag side
    costs, ties to the lexicographically smallest membership vector.
    """

    tags = sorted(tags)
    cost_a = cost_a or {}
    cost_b = cost_b or {}
    pool = []
    for vector in itertools.product((0, 1), repeat=len(tags)):
        if all(v == vector[0] for v in vector):
            continue
        side = dict(zip(tags, vector))
        area = [0, 0]
        for t in tags:
            area[side[t]] += areas[t]
        cut = sum(s for i, j, s in edges
                  if i in side and j in side and side[i] != side[j])
        obj = cut + sum(cost_a.get(t, 0) if side[t] == 0 else cost_b.get(t, 0)
                        for t in tags)
        balanced = 2 * min(area) >= max(area)
        pool.append((balanced, abs(area[0] - area[1]), obj, vector, cut))
    relaxed = not any(p[0] for p in pool)
    if relaxed:
        floor = min(p[1] for p in pool)
        pool = [p for p in pool if p[1] == floor]
    else:
        pool = [p for p in pool if p[0]]
    _, _, obj, vector, cut = min(pool, key=lambda p: (p[2], p[3]))
    part_a = tuple(t for t, v in zip(tags, vector) if v == 0)
    part_b = tuple(t for t, v in zip(tags, vector) if v == 1)
    return part_a, part_b, float(cut), relaxed


def pair_counts(stream, retained):
    """Adjacent co-occurrence counts over words in ``retained``.

    Walks the stream once; every neighboring pair of two different
    retained words counts once, unordered.
    """

    index = {w: i for i, w in enumerate(retained)}
    counts = Counter()
    for a, b in zip(stream, stream[1:]):
        if a in index and b in index and a != b:
            i, j = index[a], index[b]
            counts[(min(i, j), max(i, j))] += 1
    return counts
