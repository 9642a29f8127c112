"""Turning raw text into a weighted tag cloud.

Words are maximal ASCII alphabetic runs of the lowercased text; short
words (five letters or fewer) are discarded.  The top-k words by
frequency become tags, with weights spread over the ten font levels in
proportion to where each count sits between the least and most
frequent retained word.  Tags seen next to each other repeatedly
become relation edges.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .model import Cloud, InvalidInputError, RelationGraph, TagBox, estimate_box

MIN_WORD_LENGTH = 6
MIN_COOCCURRENCE = 2

_WORD_RE = re.compile(r"[a-z]+")


def tokenize(text: str) -> list[str]:
    """All lowercase ASCII-alphabetic runs; anything else separates."""

    return _WORD_RE.findall(text.lower())


def tokenize_filter(text: str) -> list[str]:
    """Like :func:`tokenize`, keeping only words long enough to tag."""

    return [w for w in tokenize(text) if len(w) >= MIN_WORD_LENGTH]


def importance(f: int, r: int, t: int) -> int:
    """Weight level 0..9 for a count t between the retained extremes.

    f is the highest retained count, r the lowest; f >= t >= r >= 1.
    The least frequent tag maps to 0 and the most frequent to 9.
    """

    if not f >= t >= r >= 1:
        raise InvalidInputError(f"need f >= t >= r >= 1, got f={f} t={t} r={r}")
    return 10 * (t - r) // (f - r + 1)


@dataclass(frozen=True)
class TagSelection:
    """Outcome of picking the top-k words of a token stream."""

    tags: tuple[TagBox, ...]
    frequencies: dict[str, int]
    requested_k: int

    @property
    def shortfall(self) -> bool:
        """True when the stream had fewer distinct words than asked for."""

        return len(self.tags) < self.requested_k


def build_tag_cloud(stream: Sequence[str], k: int) -> TagSelection:
    """Pick the k most frequent words and weight them by importance.

    Count ties resolve alphabetically.  A stream with fewer distinct
    words than k keeps them all; check :attr:`TagSelection.shortfall`.
    """

    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    freq = Counter(stream)
    if not freq:
        raise InvalidInputError("token stream is empty")
    ranked = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    top = max(c for _, c in ranked)
    low = min(c for _, c in ranked)
    tags = tuple(estimate_box(word, importance(top, low, count))
                 for word, count in ranked)
    return TagSelection(tags=tags, frequencies=dict(freq), requested_k=k)


def cooccurrence_graph(stream: Sequence[str], retained: Sequence[str]) -> RelationGraph:
    """Edges between retained words adjacent in the stream.

    ``retained`` fixes the tag indices (position in the sequence).
    A pair must co-occur at least twice; its strength is the count.
    """

    index = {}
    for pos, word in enumerate(retained):
        if word in index:
            raise InvalidInputError(f"retained word {word!r} listed twice")
        index[word] = pos
    vocabulary = set(stream)
    missing = [w for w in retained if w not in vocabulary]
    if missing:
        raise InvalidInputError(f"retained words absent from the stream: {missing[:5]}")
    pairs: Counter[tuple[int, int]] = Counter()
    for a, b in zip(stream, stream[1:]):
        ia, ib = index.get(a), index.get(b)
        if ia is None or ib is None or ia == ib:
            continue
        pairs[(min(ia, ib), max(ia, ib))] += 1
    return RelationGraph.from_edges(
        (i, j, c) for (i, j), c in pairs.items() if c >= MIN_COOCCURRENCE)


def build_cloud_from_text(text: str, k: int, target_width: int = 550,
                          space_width: int = 4,
                          adjacency: str = "filtered") -> tuple[Cloud, RelationGraph]:
    """Full ingest pipeline: text to (cloud, relation graph).

    ``adjacency`` picks which stream defines word adjacency for the
    relation edges: "filtered" (default) measures it after short words
    are dropped, "raw" before, so short words break up pairs.
    """

    if adjacency not in ("filtered", "raw"):
        raise InvalidInputError(f"adjacency must be 'filtered' or 'raw', got {adjacency!r}")
    filtered = tokenize_filter(text)
    selection = build_tag_cloud(filtered, k)
    labels = [t.label for t in selection.tags]
    edge_stream = filtered if adjacency == "filtered" else tokenize(text)
    graph = cooccurrence_graph(edge_stream, labels)
    cloud = Cloud(tags=selection.tags, target_width=target_width,
                  space_width=space_width)
    return cloud, graph
