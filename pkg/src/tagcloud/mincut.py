"""Proximity-aware 2-D placement by recursive graph bisection.

Related tags should sit near each other.  Relations come in as a
weighted graph (or as hyperedges expanded to cliques); the placer
recursively bipartitions the tag set, cutting as little relation
weight as possible, and records each split as a slicing-tree cut.
Splits of up to 12 tags are solved exactly by enumeration; larger ones
by a seeded move/lock/rollback refinement over several random starts.
Tags already assigned to the other half of an enclosing split tug the
current split through directional pull weights, so friends across
region borders end up on facing edges.

``layout_mincut`` drives the whole pipeline: build the tree for an
estimated aspect ratio, size it through the shape combiner, and retry
with a narrower or wider estimate until the result suits the target
width.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .model import (
    Cloud,
    InvalidInputError,
    PlacedCloud,
    RelationGraph,
    validate_cloud,
    validate_graph,
)
from .sizing import combine_shapes, default_leaf_shapes, select_and_place
from .tree import Cut, Leaf, Node

# Largest set split by full enumeration; beyond this the seeded
# refinement takes over.
EXHAUSTIVE_LIMIT = 12

# Random starts per refinement call.
DEFAULT_FM_RUNS = 10

SIDES = ("left", "right", "top", "bottom")


@dataclass(frozen=True)
class Hypergraph:
    """Groups of tags related as wholes (e.g. tags sharing a resource)."""

    hyperedges: tuple[frozenset[int], ...]


def expand_hyperedges(hg: Hypergraph) -> RelationGraph:
    """Clique expansion: every pair inside a hyperedge gets strength 1.

    Pairs appearing in several hyperedges accumulate strength.
    """

    raw = []
    for k, edge in enumerate(hg.hyperedges):
        members = sorted(edge)
        if len(members) < 2:
            raise InvalidInputError(f"hyperedge {k} needs at least 2 members")
        if members[0] < 0:
            raise InvalidInputError(f"hyperedge {k} has a negative tag index")
        raw.extend((a, b, 1) for a, b in itertools.combinations(members, 2))
    return RelationGraph.from_edges(raw)


@dataclass(frozen=True)
class Pulls:
    """Per-tag attraction toward already-placed external tags, by side."""

    left: Mapping[int, float] = field(default_factory=dict)
    right: Mapping[int, float] = field(default_factory=dict)
    top: Mapping[int, float] = field(default_factory=dict)
    bottom: Mapping[int, float] = field(default_factory=dict)

    @classmethod
    def none(cls) -> "Pulls":
        return cls()


def compute_pulls(group: Sequence[int], graph: RelationGraph,
                  placed_regions: Mapping[int, str]) -> Pulls:
    """Sum edge strengths from group tags to external tags, per side.

    ``placed_regions`` says on which side of the group's region each
    external tag sits; every external neighbor must be covered.
    """

    group_set = set(group)
    acc: dict[str, dict[int, float]] = {s: {} for s in SIDES}
    for i, j, s in graph.edges:
        for a, b in ((i, j), (j, i)):
            if a in group_set and b not in group_set:
                side = placed_regions.get(b)
                if side is None:
                    raise InvalidInputError(
                        f"external neighbor {b} of the group has no assigned side")
                if side not in acc:
                    raise InvalidInputError(f"unknown side {side!r} for tag {b}")
                acc[side][a] = acc[side].get(a, 0) + s
    return Pulls(left=acc["left"], right=acc["right"],
                 top=acc["top"], bottom=acc["bottom"])


@dataclass(frozen=True)
class FmRun:
    """Per-run refinement diagnostics (cut weights use raw strengths)."""

    initial_cut: float
    final_cut: float
    initial_objective: float
    final_objective: float
    passes: int


@dataclass(frozen=True)
class Bipartition:
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    cut_weight: float
    relaxed: bool = False
    runs: tuple[FmRun, ...] = ()


def _pull_costs(tags: Sequence[int], pulls: Pulls, axis: str):
    """Penalty for landing in part A vs part B, per tag.

    Part A is the left (V cut) or top (H cut) side, so a tag pulled
    right pays when put in A, and so on.  Pulls orthogonal to the cut
    axis do not participate.
    """

    if axis == "V":
        toward_b, toward_a = pulls.right, pulls.left
    elif axis == "H":
        toward_b, toward_a = pulls.bottom, pulls.top
    else:
        raise InvalidInputError(f"axis must be 'V' or 'H', got {axis!r}")
    cost_a = {t: float(toward_b.get(t, 0)) for t in tags}
    cost_b = {t: float(toward_a.get(t, 0)) for t in tags}
    return cost_a, cost_b


def _internal_edges(tags: Sequence[int], graph: RelationGraph):
    keep = set(tags)
    return [(i, j, s) for i, j, s in graph.edges if i in keep and j in keep]


def _cut_weight(edges, side: Mapping[int, int]) -> float:
    return float(sum(s for i, j, s in edges if side[i] != side[j]))


def bipartition_exhaustive(tags: Sequence[int], graph: RelationGraph,
                           pulls: Pulls | None = None, axis: str = "V",
                           areas: Mapping[int, int] | None = None) -> Bipartition:
    """Optimal split of up to 12 tags by scanning every assignment.

    Keeps the parts within a 2:1 area ratio when any such split exists;
    otherwise returns the least-imbalanced split flagged ``relaxed``.
    Minimizes cut weight plus pull penalty; ties go to the
    lexicographically smallest membership vector.
    """

    tags = sorted(set(tags))
    n = len(tags)
    if n < 2:
        raise InvalidInputError("bipartition needs at least 2 tags")
    if n > EXHAUSTIVE_LIMIT:
        raise InvalidInputError(
            f"exhaustive bipartition handles at most {EXHAUSTIVE_LIMIT} tags, got {n}")
    pulls = pulls or Pulls.none()
    if areas is None:
        areas = {t: 1 for t in tags}
    area_arr = np.array([areas[t] for t in tags], dtype=np.float64)
    if (area_arr < 1).any():
        raise InvalidInputError("tag areas must be >= 1")
    pos = {t: k for k, t in enumerate(tags)}
    masks = np.arange(1, (1 << n) - 1, dtype=np.int64)
    bits = [(masks >> k) & 1 for k in range(n)]

    area_b = np.zeros(len(masks))
    for k in range(n):
        area_b += bits[k] * area_arr[k]
    area_a = area_arr.sum() - area_b

    obj = np.zeros(len(masks))
    for i, j, s in _internal_edges(tags, graph):
        obj += (bits[pos[i]] ^ bits[pos[j]]) * float(s)
    cost_a, cost_b = _pull_costs(tags, pulls, axis)
    obj += sum(cost_a.values())
    for k, t in enumerate(tags):
        delta = cost_b[t] - cost_a[t]
        if delta:
            obj += bits[k] * delta

    balanced = 2 * np.minimum(area_a, area_b) >= np.maximum(area_a, area_b)
    relaxed = not bool(balanced.any())
    if relaxed:
        imbalance = np.abs(area_a - area_b)
        pool = imbalance == imbalance.min()
    else:
        pool = balanced
    pool_obj = np.where(pool, obj, np.inf)
    best_obj = pool_obj.min()
    candidates = np.flatnonzero(pool_obj == best_obj)

    def membership_key(mask: int) -> int:
        # bit of tags[0] is the most significant digit of the vector
        return sum(((mask >> k) & 1) << (n - 1 - k) for k in range(n))

    mask = int(min((int(masks[c]) for c in candidates), key=membership_key))
    part_a = tuple(t for k, t in enumerate(tags) if not mask >> k & 1)
    part_b = tuple(t for k, t in enumerate(tags) if mask >> k & 1)
    side = {t: mask >> pos[t] & 1 for t in tags}
    return Bipartition(part_a, part_b, _cut_weight(_internal_edges(tags, graph), side),
                       relaxed=relaxed)


def bipartition_fm(tags: Sequence[int], graph: RelationGraph,
                   pulls: Pulls | None = None, axis: str = "V",
                   areas: Mapping[int, int] | None = None,
                   runs: int = DEFAULT_FM_RUNS, seed: int = 0) -> Bipartition:
    """Iterative improvement split for larger tag sets.

    Each run starts from a seeded random partition balanced by greedy
    assignment, then repeats passes of single-tag moves: always the
    highest-gain unlocked tag whose move keeps both sides populated and
    the area difference within twice the largest tag's area.  Moved
    tags lock for the rest of the pass; at pass end the best prefix of
    the move sequence whose area difference is within the largest tag's
    area is kept.  Passes repeat until one fails to improve.  The best
    of all runs wins (ties: earliest run).

    Gains are bucketed by integer value; fractional strengths are
    scaled by 1000 and rounded first.
    """

    tags = sorted(set(tags))
    if len(tags) < 2:
        raise InvalidInputError("bipartition needs at least 2 tags")
    if runs < 1:
        raise InvalidInputError(f"runs must be >= 1, got {runs}")
    pulls = pulls or Pulls.none()
    if areas is None:
        areas = {t: 1 for t in tags}
    if any(areas[t] < 1 for t in tags):
        raise InvalidInputError("tag areas must be >= 1")
    cost_a, cost_b = _pull_costs(tags, pulls, axis)
    edges = _internal_edges(tags, graph)

    numbers = [s for _, _, s in edges] + list(cost_a.values()) + list(cost_b.values())
    scale = 1 if all(float(v).is_integer() for v in numbers) else 1000
    sedges = [(i, j, int(round(s * scale))) for i, j, s in edges]
    sca = {t: int(round(cost_a[t] * scale)) for t in tags}
    scb = {t: int(round(cost_b[t] * scale)) for t in tags}
    adj: dict[int, list[tuple[int, int]]] = {t: [] for t in tags}
    for i, j, s in sedges:
        adj[i].append((j, s))
        adj[j].append((i, s))
    s_max = max(areas[t] for t in tags)

    rng = random.Random(seed)
    best: tuple[int, int, dict[int, int]] | None = None
    stats = []
    for run_idx in range(runs):
        order = tags[:]
        rng.shuffle(order)
        side: dict[int, int] = {}
        area_side = [0, 0]
        count_side = [0, 0]
        for t in order:  # lighter side first keeps the difference <= s_max
            dest = 0 if area_side[0] <= area_side[1] else 1
            side[t] = dest
            area_side[dest] += areas[t]
            count_side[dest] += 1
        initial_obj = _scaled_objective(sedges, side, sca, scb)
        initial_cut = _cut_weight(edges, side)
        final_obj, passes = _fm_refine(tags, adj, side, area_side, count_side,
                                       areas, s_max, sca, scb, initial_obj)
        stats.append(FmRun(initial_cut=initial_cut,
                           final_cut=_cut_weight(edges, side),
                           initial_objective=initial_obj / scale,
                           final_objective=final_obj / scale,
                           passes=passes))
        if best is None or (final_obj, run_idx) < (best[0], best[1]):
            best = (final_obj, run_idx, dict(side))

    side = best[2]
    part_a = tuple(t for t in tags if side[t] == 0)
    part_b = tuple(t for t in tags if side[t] == 1)
    return Bipartition(part_a, part_b, _cut_weight(edges, side),
                       relaxed=False, runs=tuple(stats))


def _scaled_objective(sedges, side, sca, scb) -> int:
    cut = sum(s for i, j, s in sedges if side[i] != side[j])
    return cut + sum(sca[t] if side[t] == 0 else scb[t] for t in side)


def _fm_refine(tags, adj, side, area_side, count_side, areas, s_max, sca, scb,
               obj: int) -> tuple[int, int]:
    """Refine ``side`` in place; returns (final objective, passes run)."""

    passes = 0
    while True:
        passes += 1
        start_obj = obj
        gains: dict[int, int] = {}
        for t in tags:
            g = sum(s if side[u] != side[t] else -s for u, s in adj[t])
            g += sca[t] - scb[t] if side[t] == 0 else scb[t] - sca[t]
            gains[t] = g
        buckets: dict[int, set[int]] = {}
        for t, g in gains.items():
            buckets.setdefault(g, set()).add(t)

        moves: list[tuple[int, int]] = []  # (tag, side it came from)
        objs = [obj]
        valid = [abs(area_side[0] - area_side[1]) <= s_max]

        while buckets:
            picked = None
            for g in sorted(buckets, reverse=True):
                for t in sorted(buckets[g]):
                    src = side[t]
                    if count_side[src] == 1:
                        continue  # never empty a side
                    diff = abs((area_side[src] - areas[t])
                               - (area_side[1 - src] + areas[t]))
                    if diff <= 2 * s_max:
                        picked = (g, t)
                        break
                if picked:
                    break
            if picked is None:
                break
            g, t = picked
            buckets[g].discard(t)
            if not buckets[g]:
                del buckets[g]
            src = side[t]
            side[t] = 1 - src
            area_side[src] -= areas[t]
            area_side[1 - src] += areas[t]
            count_side[src] -= 1
            count_side[1 - src] += 1
            obj -= g
            moves.append((t, src))
            objs.append(obj)
            valid.append(abs(area_side[0] - area_side[1]) <= s_max)
            for u, s in adj[t]:
                if u not in gains:
                    continue
                old = gains.get(u)
                if u == t or not _in_buckets(buckets, old, u):
                    continue
                delta = 2 * s if side[u] == src else -2 * s
                if delta:
                    buckets[old].discard(u)
                    if not buckets[old]:
                        del buckets[old]
                    gains[u] = old + delta
                    buckets.setdefault(old + delta, set()).add(u)

        best_p, best_obj = 0, objs[0]
        for p in range(1, len(objs)):
            if valid[p] and objs[p] < best_obj:
                best_p, best_obj = p, objs[p]
        for t, src in reversed(moves[best_p:]):
            cur = side[t]
            side[t] = src
            area_side[cur] -= areas[t]
            area_side[src] += areas[t]
            count_side[cur] -= 1
            count_side[src] += 1
        obj = best_obj
        if best_obj >= start_obj:
            return obj, passes


def _in_buckets(buckets, gain, tag) -> bool:
    group = buckets.get(gain)
    return group is not None and tag in group


def bipartition(tags: Sequence[int], graph: RelationGraph,
                pulls: Pulls | None = None, axis: str = "V",
                areas: Mapping[int, int] | None = None,
                fm_runs: int = DEFAULT_FM_RUNS, seed: int = 0) -> Bipartition:
    """Route to exhaustive or refinement splitting by set size."""

    if len(set(tags)) <= EXHAUSTIVE_LIMIT:
        return bipartition_exhaustive(tags, graph, pulls, axis, areas)
    return bipartition_fm(tags, graph, pulls, axis, areas, runs=fm_runs, seed=seed)


def build_slicing_tree(cloud: Cloud, graph: RelationGraph | None = None,
                       seed: int = 0, width_bias: float = 1.0,
                       fm_runs: int = DEFAULT_FM_RUNS) -> Node:
    """Recursive bisection of the whole cloud into a slicing tree.

    Every region tracks an estimated width and height; a region wider
    than tall is cut vertically provided each half's proportional share
    of the width can still hold its widest tag, otherwise horizontally.
    Sibling halves become external pulls for deeper splits.
    """

    problems = validate_cloud(cloud)
    if problems:
        raise InvalidInputError("; ".join(problems))
    graph = graph or RelationGraph()
    bad = validate_graph(graph, len(cloud.tags))
    if bad:
        raise InvalidInputError("; ".join(bad))
    if width_bias <= 0:
        raise InvalidInputError(f"width_bias must be positive, got {width_bias}")

    areas = {i: t.area() for i, t in enumerate(cloud.tags)}
    widths = {i: t.width for i, t in enumerate(cloud.tags)}
    rng = random.Random(seed)

    def split(group: tuple[int, ...], pulls: Pulls, axis: str) -> Bipartition:
        return bipartition(group, graph, pulls, axis, areas,
                           fm_runs=fm_runs, seed=rng.getrandbits(64))

    def rec(group: tuple[int, ...], est_w: float, est_h: float,
            sides: dict[int, str]) -> Node:
        if len(group) == 1:
            return Leaf(group[0])
        pulls = compute_pulls(group, graph, sides)
        total = sum(areas[t] for t in group)
        part = None
        orient = "H"
        if est_w > est_h:
            cand = split(group, pulls, "V")
            frac_a = sum(areas[t] for t in cand.part_a) / total
            share_a = est_w * frac_a
            share_b = est_w * (1 - frac_a)
            if (share_a >= max(widths[t] for t in cand.part_a)
                    and share_b >= max(widths[t] for t in cand.part_b)):
                part, orient = cand, "V"
        if part is None:
            part = split(group, pulls, "H")
        frac_a = sum(areas[t] for t in part.part_a) / total
        if orient == "V":
            first = rec(part.part_a, est_w * frac_a, est_h,
                        {**sides, **{t: "right" for t in part.part_b}})
            second = rec(part.part_b, est_w * (1 - frac_a), est_h,
                         {**sides, **{t: "left" for t in part.part_a}})
        else:
            first = rec(part.part_a, est_w, est_h * frac_a,
                        {**sides, **{t: "bottom" for t in part.part_b}})
            second = rec(part.part_b, est_w, est_h * (1 - frac_a),
                         {**sides, **{t: "top" for t in part.part_a}})
        return Cut(orient, first, second)

    total_area = sum(areas.values())
    est_w = cloud.target_width * width_bias
    est_h = total_area / est_w
    return rec(tuple(range(len(cloud.tags))), est_w, est_h, {})


@dataclass(frozen=True)
class MincutResult:
    placed: PlacedCloud
    tree: Node
    iterations: int
    width_bias: float


# Width-estimate retry loop constants: shrink when the packed cloud
# overflows, grow when it uses less than three quarters of the target.
SHRINK_FACTOR = 0.85
GROW_FACTOR = 1.15
LOW_USE_FRACTION = 0.75
MAX_WIDTH_RETRIES = 8


def layout_mincut(cloud: Cloud, graph: RelationGraph | None = None, seed: int = 0,
                  shape_variants: int = 3) -> MincutResult:
    """Full placement pipeline with the width retry loop.

    Builds a slicing tree for the current width estimate, sizes and
    places it, then adjusts the estimate until the bounding box lands
    between 75% and 100% of the target width (or retries run out).
    Returns the widest attempt that fits; if none fits, the narrowest.
    """

    problems = validate_cloud(cloud)
    if problems:
        raise InvalidInputError("; ".join(problems))
    leaf_shapes = default_leaf_shapes(cloud, variants=shape_variants)
    target = cloud.target_width
    bias = 1.0
    attempts: list[tuple[PlacedCloud, Node, float]] = []
    for _ in range(MAX_WIDTH_RETRIES):
        tree = build_slicing_tree(cloud, graph, seed=seed, width_bias=bias)
        table = combine_shapes(tree, leaf_shapes)
        placed = select_and_place(tree, table, target)
        attempts.append((placed, tree, bias))
        w = placed.bbox[0]
        if w > target:
            bias *= SHRINK_FACTOR
        elif w < LOW_USE_FRACTION * target:
            bias *= GROW_FACTOR
        else:
            break
    fitting = [a for a in attempts if a[0].bbox[0] <= target]
    if fitting:
        placed, tree, bias = max(fitting, key=lambda a: a[0].bbox[0])
    else:
        placed, tree, bias = min(attempts, key=lambda a: a[0].bbox[0])
    return MincutResult(placed=placed, tree=tree, iterations=len(attempts),
                        width_bias=bias)
