"""Slicing tree nodes.

A slicing tree recursively halves a region: a V cut puts ``first``
left of ``second``, an H cut puts ``first`` above ``second``.  Leaves
hold tag indices.  Nodes are frozen, so they hash by content and can
key per-node tables (leaf tags are unique within one tree, which keeps
subtrees distinct).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

V = "V"
H = "H"


@dataclass(frozen=True)
class Leaf:
    tag: int


@dataclass(frozen=True)
class Cut:
    orient: str  # "V" or "H"
    first: "Node"
    second: "Node"


Node = Union[Leaf, Cut]


def leaves(node: Node) -> Iterator[int]:
    if isinstance(node, Leaf):
        yield node.tag
    else:
        yield from leaves(node.first)
        yield from leaves(node.second)


def iter_nodes(node: Node) -> Iterator[Node]:
    """Children before parents (post-order)."""

    if isinstance(node, Cut):
        yield from iter_nodes(node.first)
        yield from iter_nodes(node.second)
    yield node


def internal_count(node: Node) -> int:
    return sum(1 for n in iter_nodes(node) if isinstance(n, Cut))
