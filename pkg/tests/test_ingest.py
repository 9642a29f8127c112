import pytest

from tagcloud import (
    InvalidInputError,
    build_cloud_from_text,
    build_tag_cloud,
    cooccurrence_graph,
    importance,
)
from tagcloud.ingest import MIN_WORD_LENGTH, tokenize, tokenize_filter
from .oracles import pair_counts


def test_tokenize_splits_on_anything_nonalpha():
    assert tokenize("Hello, WORLD! it's 2-in-1") == ["hello", "world", "it", "s", "in"]
    assert tokenize("") == []
    assert tokenize("123 !!") == []


def test_tokenize_filter_drops_short_words():
    assert MIN_WORD_LENGTH == 6
    words = tokenize_filter("a tiny stream becomes mighty rivers")
    assert words == ["stream", "becomes", "mighty", "rivers"]
    assert tokenize_filter("The QUICK-quick brown foxes jumped") == ["jumped"]


def test_digits_split_words():
    assert tokenize("people123people") == ["people", "people"]
    assert tokenize_filter("people123people") == ["people", "people"]


def test_importance_boundaries():
    assert importance(50, 3, 3) == 0      # least frequent tag
    assert importance(50, 3, 50) == 9     # most frequent tag
    assert importance(7, 7, 7) == 0       # all counts equal
    assert importance(1, 1, 1) == 0


def test_importance_is_monotone_and_in_range():
    f, r = 40, 2
    levels = [importance(f, r, t) for t in range(r, f + 1)]
    assert levels == sorted(levels)
    assert set(levels) <= set(range(10))
    assert levels[0] == 0 and levels[-1] == 9


def test_importance_validates():
    for f, r, t in ((5, 6, 6), (5, 1, 6), (5, 0, 3), (4, 2, 1)):
        with pytest.raises(InvalidInputError):
            importance(f, r, t)


def test_build_tag_cloud_ranks_by_count_then_word():
    stream = ["banana"] * 3 + ["apples"] * 3 + ["cherry"] * 5 + ["damson"]
    sel = build_tag_cloud(stream, 3)
    assert [t.label for t in sel.tags] == ["cherry", "apples", "banana"]
    assert sel.tags[0].weight == importance(5, 3, 5)
    assert not sel.shortfall
    assert sel.frequencies["damson"] == 1


def test_build_tag_cloud_weights_follow_importance():
    stream = ["wwwwww"] * 10 + ["xxxxxx"] * 6 + ["yyyyyy"] * 2
    sel = build_tag_cloud(stream, 3)
    weights = {t.label: t.weight for t in sel.tags}
    assert weights == {
        "wwwwww": importance(10, 2, 10),
        "xxxxxx": importance(10, 2, 6),
        "yyyyyy": importance(10, 2, 2),
    }


def test_build_tag_cloud_shortfall():
    sel = build_tag_cloud(["onewrd", "onewrd"], 5)
    assert sel.shortfall
    assert len(sel.tags) == 1


def test_build_tag_cloud_validates():
    with pytest.raises(InvalidInputError):
        build_tag_cloud(["x"], 0)
    with pytest.raises(InvalidInputError):
        build_tag_cloud([], 3)


def test_cooccurrence_counts_adjacent_pairs():
    stream = ["aaa", "bbb", "aaa", "bbb", "ccc", "aaa", "ccc", "ccc"]
    g = cooccurrence_graph(stream, ["aaa", "bbb", "ccc"])
    strengths = {(i, j): s for i, j, s in g.edges}
    # aaa-bbb adjacent 3 times, bbb-ccc once (dropped), aaa-ccc twice;
    # the ccc-ccc repeat does not count
    assert strengths == {(0, 1): 3, (0, 2): 2}


def test_cooccurrence_matches_reference_counts():
    import random
    rng = random.Random(31337)
    vocab = [f"word{c}{c}" for c in "abcdefgh"]
    for _ in range(30):
        stream = [rng.choice(vocab) for _ in range(rng.randint(2, 400))]
        retained = sorted(set(stream))[: rng.randint(1, len(set(stream)))]
        g = cooccurrence_graph(stream, retained)
        want = {p: c for p, c in pair_counts(stream, retained).items() if c >= 2}
        assert {(i, j): s for i, j, s in g.edges} == want


def test_cooccurrence_validates_retained():
    with pytest.raises(InvalidInputError, match="twice"):
        cooccurrence_graph(["aaa", "bbb"], ["aaa", "aaa"])
    with pytest.raises(InvalidInputError, match="absent"):
        cooccurrence_graph(["aaa", "bbb"], ["zzz"])


def test_build_cloud_from_text_end_to_end():
    text = ("Gardens gardens! flowers gardens in flowers; gardens a flowers "
            "meadow meadow ok gardens")
    cloud, graph = build_cloud_from_text(text, 3, target_width=300)
    labels = [t.label for t in cloud.tags]
    assert labels == ["gardens", "flowers", "meadow"]
    counts = {"gardens": 5, "flowers": 3, "meadow": 2}
    for tag in cloud.tags:
        assert tag.weight == importance(5, 2, counts[tag.label])
    assert cloud.target_width == 300
    # filtered stream: gardens gardens flowers gardens flowers gardens
    # flowers meadow meadow gardens
    strengths = {(i, j): s for i, j, s in graph.edges}
    assert strengths[(0, 1)] == 5


def test_adjacency_raw_lets_short_words_split_pairs():
    # "of" separates the flowers->gardens pairs in the raw stream; only
    # the two gardens->flowers wrap-arounds survive
    text = "flowers of gardens flowers of gardens flowers of gardens"
    cloud_f, graph_f = build_cloud_from_text(text, 2)
    cloud_r, graph_r = build_cloud_from_text(text, 2, adjacency="raw")
    assert {(i, j): s for i, j, s in graph_f.edges} == {(0, 1): 5}
    assert {(i, j): s for i, j, s in graph_r.edges} == {(0, 1): 2}


def test_build_cloud_from_text_validates_adjacency():
    with pytest.raises(InvalidInputError):
        build_cloud_from_text("enough wordss here", 2, adjacency="both")
